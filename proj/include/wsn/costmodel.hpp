#pragma once

#include <cstdint>

namespace wsn {

// Mica2dot reference energy constants. Stored in the units they are usually
// quoted in; total_energy() works in joules.
struct EnergyConstants {
  double c_tx_uj_per_bit = 1.984;
  double c_rx_uj_per_bit = 0.750;
  double aes_enc_uj_per_byte = 1.62;
  double aes_dec_uj_per_byte = 2.49;
  double sha1_uj_per_byte = 5.9;
  double ecdh_pointmul_160_mj = 22.3;
  double rsa1024_verify_mj = 11.9;
  // report-only constants, never charged by the simulator
  double ecdsa160_sign_mj = 22.82;
  double ecdsa160_verify_mj = 45.09;
  double rsa1024_sign_mj = 304.0;
};

// Every frame is ID_A,ID_B,M,MAC{ID_A,ID_B,M}: 16+16 id bits, variable body,
// 160-bit MAC. SHA-1 runs over the id+body bytes on both send and receive.
inline constexpr uint64_t kFrameIdBits = 32;
inline constexpr uint64_t kMacBits = 160;

inline constexpr uint64_t frame_bits(uint64_t body_bits) {
  return kFrameIdBits + body_bits + kMacBits;
}
inline constexpr uint64_t mac_input_bytes(uint64_t body_bits) {
  return (kFrameIdBits + body_bits) / 8;
}

// Per-node event counters; additive across nodes.
struct EnergyLedger {
  uint64_t tx_bits = 0;
  uint64_t rx_bits = 0;
  uint64_t enc_ops = 0;  // 16-byte AES blocks
  uint64_t dec_ops = 0;
  uint64_t sha1_bytes = 0;
  uint64_t pointmuls = 0;
  uint64_t verifies = 0;

  void charge_tx_frame(uint64_t body_bits) {
    tx_bits += frame_bits(body_bits);
    sha1_bytes += mac_input_bytes(body_bits);
  }
  void charge_rx_frame(uint64_t body_bits) {
    rx_bits += frame_bits(body_bits);
    sha1_bytes += mac_input_bytes(body_bits);
  }
  void charge_enc() { ++enc_ops; }
  void charge_dec() { ++dec_ops; }
  void charge_pointmul() { ++pointmuls; }
  void charge_verify() { ++verifies; }

  EnergyLedger& operator+=(const EnergyLedger& o) {
    tx_bits += o.tx_bits;
    rx_bits += o.rx_bits;
    enc_ops += o.enc_ops;
    dec_ops += o.dec_ops;
    sha1_bytes += o.sha1_bytes;
    pointmuls += o.pointmuls;
    verifies += o.verifies;
    return *this;
  }

  double total_energy_j(const EnergyConstants& c) const;
};

// Message body lengths (bits) for the pre-distribution scheme, as functions of
// ring size k, degree d and share probability p. `index_bits` sizes a single
// key index on the wire.
struct BsMessageLengths {
  double poll_sk;       // ring index list broadcast
  double poll_reply;    // full ring reply when no key is shared
  double poll_reply_s;  // single shared index reply
  double poll_pk;       // path-key broadcast: ids + rings of unshared neighbors
  double ask_key;       // two encrypted copies + target id + decrypt index
};
BsMessageLengths bs_message_lengths(uint32_t k, double d, double p, uint32_t index_bits);

struct CostBreakdown {
  double tx = 0.0;
  double rx = 0.0;
  double sha1 = 0.0;
  double computation = 0.0;
  double total = 0.0;
};

// Closed-form per-node cost of the pre-distribution scheme (cascade-off, all
// neighbors), in joules.
CostBreakdown bs_per_node_cost(uint32_t k, double d, double p, uint32_t index_bits,
                               const EnergyConstants& c);

// Closed-form per-node cost of the Diffie-Hellman key exchange, in joules.
CostBreakdown ecdh_per_node_cost(double d, const EnergyConstants& c, bool rsa_overlay = false);

}  // namespace wsn
