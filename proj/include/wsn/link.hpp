#pragma once

#include <cstdint>
#include <vector>

#include "wsn/topology.hpp"

namespace wsn {

// Opaque 128-bit identity standing in for real key material.
struct Token128 {
  uint64_t hi = 0;
  uint64_t lo = 0;
  friend bool operator==(const Token128&, const Token128&) = default;
};

enum class LinkKind : uint8_t { SharedPool, PathKey, Pairwise };
enum class LinkPhase : uint8_t { SharedDiscovery, PathDiscovery, Ecdh };

// One established pairwise key. `transit_indexes` lists every pool index whose
// key protected a path key on its way to the endpoints; it decides compromise
// under node capture.
struct SecureLink {
  NodeId a = 0;  // a < b
  NodeId b = 0;
  LinkKind kind = LinkKind::Pairwise;
  LinkPhase phase = LinkPhase::Ecdh;
  uint16_t path_round = 0;
  uint32_t shared_index = 0;
  Token128 token{};
  std::vector<uint32_t> transit_indexes;

  bool touches(NodeId v) const { return a == v || b == v; }
};

}  // namespace wsn
