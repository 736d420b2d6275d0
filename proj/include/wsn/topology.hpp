#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace wsn {

// Node ids are 16-bit so they fit the 16-bit id field of every payload frame.
using NodeId = uint16_t;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// 2D uniform deployment with its radio-range neighbor graph. The radio range
// is fixed at 1 unit and the square side is derived from the requested
// expected degree, so only the degree distribution is meaningful; absolute
// coordinates are in arbitrary units.
struct Topology {
  uint32_t n = 0;
  double radio_range = 1.0;
  double area_side = 0.0;
  double target_degree = 0.0;
  bool torus = false;
  std::vector<Point> positions;
  std::vector<std::vector<NodeId>> adjacency;  // sorted ascending, symmetric

  const std::vector<NodeId>& neighbors(NodeId v) const;

  // Mean degree over interior nodes (further than radio_range from every
  // boundary). Falls back to the whole-network mean when no node is interior.
  double interior_mean_degree() const;
  double mean_degree() const;
  std::size_t edge_count() const;
};

// Deterministic in (n, d, seed). `torus` wraps distances for exact degree
// control in property tests; default keeps hard borders.
Topology deploy(uint32_t n, double d, uint64_t seed, bool torus = false);

// `id,x,y` per node and `id,neighbor_id` per edge (u < v).
void write_positions_csv(const Topology& t, std::ostream& out);
void write_adjacency_csv(const Topology& t, std::ostream& out);

}  // namespace wsn
