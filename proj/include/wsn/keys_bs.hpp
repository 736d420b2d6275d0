#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wsn/link.hpp"
#include "wsn/topology.hpp"

namespace wsn {

struct World;  // defined in netconfig.hpp

// Global pool of P abstract key identities, addressed by index.
struct KeyPool {
  uint32_t size = 0;
  uint32_t index_bits = 16;
  std::vector<Token128> keys;
};

// One node's k-subset of the pool, kept as sorted indexes.
struct KeyRing {
  NodeId owner = 0;
  std::vector<uint32_t> indexes;

  bool contains(uint32_t idx) const;
  uint64_t storage_bits() const { return static_cast<uint64_t>(indexes.size()) * 128; }
};

KeyPool build_pool(uint32_t pool_size, uint32_t index_bits, uint64_t seed);

// Uniform k-subset without replacement, deterministic in (pool, k, node, seed).
KeyRing draw_ring(const KeyPool& pool, uint32_t k, NodeId node, uint64_t seed);

// Probability that two rings of size k from a pool of P share at least one
// key. Evaluated in log space; singular when 2k >= P.
double shared_key_probability(uint32_t pool_size, uint32_t ring_size);

// Expected neighbor counts secured by shared-key discovery and by one path-key
// round, for share probability p and physical degree d.
std::pair<double, double> expected_secure_neighbors(double p, double d);

// Lowest common pool index, the deterministic link-key choice when rings
// share several keys.
std::optional<uint32_t> lowest_common_index(const KeyRing& a, const KeyRing& b);

struct DiscoveryReply {
  NodeId neighbor = 0;
  std::optional<uint32_t> match;  // shared index, lowest common
  const KeyRing* ring = nullptr;  // neighbor's ring when there is no match
};
std::vector<DiscoveryReply> shared_key_discovery(const KeyRing& a,
                                                 const std::vector<const KeyRing*>& neighbors);

// Cross-layer hooks used by the configuration run. `bs_discover` runs the
// poll broadcast, shared-key discovery and the mode's path-key rounds for a
// freshly configured node. `bs_path_key_round` is one round toward `targets`
// and returns the number of links it created.
void bs_discover(World& w, NodeId v);
int bs_path_key_round(World& w, NodeId v, const std::vector<NodeId>& targets, uint16_t round);

}  // namespace wsn
