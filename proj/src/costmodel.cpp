#include "wsn/costmodel.hpp"

namespace wsn {

double EnergyLedger::total_energy_j(const EnergyConstants& c) const {
  double uj = c.c_tx_uj_per_bit * static_cast<double>(tx_bits) +
              c.c_rx_uj_per_bit * static_cast<double>(rx_bits) +
              16.0 * (c.aes_enc_uj_per_byte * static_cast<double>(enc_ops) +
                      c.aes_dec_uj_per_byte * static_cast<double>(dec_ops)) +
              c.sha1_uj_per_byte * static_cast<double>(sha1_bytes);
  double mj = c.ecdh_pointmul_160_mj * static_cast<double>(pointmuls) +
              c.rsa1024_verify_mj * static_cast<double>(verifies);
  return uj * 1e-6 + mj * 1e-3;
}

BsMessageLengths bs_message_lengths(uint32_t k, double d, double p, uint32_t index_bits) {
  BsMessageLengths m;
  const double w = index_bits;
  m.poll_sk = w * k;
  m.poll_reply = w * k;
  m.poll_reply_s = w;
  m.poll_pk = d * (1.0 - p) * (m.poll_sk + 16.0);
  m.ask_key = 16.0 + w + 2.0 * 128.0;  // target id, decrypt index, two key copies
  return m;
}

CostBreakdown bs_per_node_cost(uint32_t k, double d, double p, uint32_t index_bits,
                               const EnergyConstants& c) {
  const double w = index_bits;
  const double wk = w * k;
  const double q = 1.0 - p;
  const double mpk = d * q * (wk + 16.0);       // path-key broadcast body
  const double offer = 464.0 + w;               // framed ask_key
  const double forward = 320.0 + w;             // framed key forward
  const double reply_s = w + 192.0;

  // transmitted: both broadcasts plus, per neighbor, the shared/unshared reply
  // and this node's share of offer and forward traffic
  const double tx_bits = (wk + 192.0) + (mpk + 192.0) +
                         d * (p * reply_s +
                              q * ((wk + 192.0) + p * p * d * offer + forward));
  // received: each neighbor's two broadcasts plus the replies/offers/forwards
  // addressed here
  const double rx_bits = d * ((wk + 192.0) + (mpk + 192.0) + p * reply_s +
                              q * ((wk + 192.0) + p * p * d * offer + forward));

  // SHA-1 runs over id+body (frame minus the 160-bit tag) of every frame sent
  // and received; mirror of the frame population above
  const double sha_tx = (32.0 + wk) + (32.0 + mpk) +
                        d * (p * (32.0 + w) + q * (32.0 + wk)) +
                        p * p * q * d * d * (offer - 160.0) + q * d * (forward - 160.0);
  const double sha_rx = d * ((32.0 + wk) + (32.0 + mpk) + p * (32.0 + w) + q * (32.0 + wk)) +
                        p * p * q * d * d * (offer - 160.0) + q * d * (forward - 160.0);

  const double enc_blocks = 2.0 * p * p * q * d * d;
  const double dec_blocks = 2.0 * q * d;

  CostBreakdown b;
  b.tx = c.c_tx_uj_per_bit * tx_bits * 1e-6;
  b.rx = c.c_rx_uj_per_bit * rx_bits * 1e-6;
  b.sha1 = c.sha1_uj_per_byte * (sha_tx + sha_rx) / 8.0 * 1e-6;
  b.computation = 16.0 * (c.aes_enc_uj_per_byte * enc_blocks + c.aes_dec_uj_per_byte * dec_blocks) * 1e-6;
  b.total = b.tx + b.rx + b.sha1 + b.computation;
  return b;
}

CostBreakdown ecdh_per_node_cost(double d, const EnergyConstants& c, bool rsa_overlay) {
  double tx_bits = 352.0 * (1.0 + d);
  double rx_bits = 704.0 * d;
  double sha_bits = 192.0 * (1.0 + d) + 192.0 * 2.0 * d;  // id+key bytes, MAC excluded
  double verifies = 0.0;
  if (rsa_overlay) {
    // 1024-bit signature rides in every poll/reply body and is covered by the MAC
    tx_bits += 1024.0 * (1.0 + d);
    rx_bits += 1024.0 * 2.0 * d;
    sha_bits += 1024.0 * (1.0 + d) + 1024.0 * 2.0 * d;
    verifies = d;
  }
  CostBreakdown b;
  b.tx = c.c_tx_uj_per_bit * tx_bits * 1e-6;
  b.rx = c.c_rx_uj_per_bit * rx_bits * 1e-6;
  b.sha1 = c.sha1_uj_per_byte * sha_bits / 8.0 * 1e-6;
  b.computation = d * c.ecdh_pointmul_160_mj * 1e-3 + verifies * c.rsa1024_verify_mj * 1e-3;
  b.total = b.tx + b.rx + b.sha1 + b.computation;
  return b;
}

}  // namespace wsn
