#include "wsn/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "wsn/rng.hpp"

namespace wsn {

namespace {

double wrapped_delta(double a, double b, double side) {
  double d = std::fabs(a - b);
  return std::min(d, side - d);
}

}  // namespace

const std::vector<NodeId>& Topology::neighbors(NodeId v) const {
  if (v >= n) throw std::out_of_range("node id out of range");
  return adjacency[v];
}

double Topology::mean_degree() const {
  if (n == 0) return 0.0;
  std::size_t total = 0;
  for (const auto& a : adjacency) total += a.size();
  return static_cast<double>(total) / n;
}

double Topology::interior_mean_degree() const {
  std::size_t total = 0, count = 0;
  for (uint32_t i = 0; i < n; ++i) {
    const Point& p = positions[i];
    bool interior = torus || (p.x > radio_range && p.y > radio_range &&
                              p.x < area_side - radio_range && p.y < area_side - radio_range);
    if (interior) {
      total += adjacency[i].size();
      ++count;
    }
  }
  if (count == 0) return mean_degree();
  return static_cast<double>(total) / count;
}

std::size_t Topology::edge_count() const {
  std::size_t total = 0;
  for (const auto& a : adjacency) total += a.size();
  return total / 2;
}

Topology deploy(uint32_t n, double d, uint64_t seed, bool torus) {
  if (n < 1) throw std::invalid_argument("deploy: n must be >= 1");
  if (d < 1.0) throw std::invalid_argument("deploy: target degree must be >= 1");
  if (n > 1 && d >= static_cast<double>(n) - 1.0)
    throw std::invalid_argument("deploy: target degree must be below n-1");
  if (n > 65536) throw std::invalid_argument("deploy: node ids are 16-bit");

  Topology t;
  t.n = n;
  t.target_degree = d;
  t.torus = torus;
  t.radio_range = 1.0;
  // density * pi * r^2 = d  =>  L^2 = n * pi * r^2 / d
  t.area_side = std::sqrt(static_cast<double>(n) * std::numbers::pi / d);
  t.positions.resize(n);

  Rng pos_rng = substream(seed, "deploy.positions");
  for (uint32_t i = 0; i < n; ++i) {
    t.positions[i].x = pos_rng.uniform() * t.area_side;
    t.positions[i].y = pos_rng.uniform() * t.area_side;
  }

  // Grid binning with cell size r keeps neighbor search linear in n.
  const double r = t.radio_range;
  const double r2 = r * r;
  const int cells = std::max(1, static_cast<int>(std::floor(t.area_side / r)));
  const double cell_size = t.area_side / cells;
  std::vector<std::vector<uint32_t>> grid(static_cast<std::size_t>(cells) * cells);
  auto cell_of = [&](const Point& p) {
    int cx = std::min(cells - 1, static_cast<int>(p.x / cell_size));
    int cy = std::min(cells - 1, static_cast<int>(p.y / cell_size));
    return std::pair<int, int>(cx, cy);
  };
  for (uint32_t i = 0; i < n; ++i) {
    auto [cx, cy] = cell_of(t.positions[i]);
    grid[static_cast<std::size_t>(cy) * cells + cx].push_back(i);
  }

  t.adjacency.assign(n, {});
  for (uint32_t i = 0; i < n; ++i) {
    auto [cx, cy] = cell_of(t.positions[i]);
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        int nx = cx + dx, ny = cy + dy;
        if (torus) {
          nx = (nx + cells) % cells;
          ny = (ny + cells) % cells;
        } else if (nx < 0 || ny < 0 || nx >= cells || ny >= cells) {
          continue;
        }
        for (uint32_t j : grid[static_cast<std::size_t>(ny) * cells + nx]) {
          if (j <= i) continue;
          double ddx, ddy;
          if (torus) {
            ddx = wrapped_delta(t.positions[i].x, t.positions[j].x, t.area_side);
            ddy = wrapped_delta(t.positions[i].y, t.positions[j].y, t.area_side);
          } else {
            ddx = t.positions[i].x - t.positions[j].x;
            ddy = t.positions[i].y - t.positions[j].y;
          }
          if (ddx * ddx + ddy * ddy <= r2) {
            t.adjacency[i].push_back(static_cast<NodeId>(j));
            t.adjacency[j].push_back(static_cast<NodeId>(i));
          }
        }
      }
    }
  }
  // When cells <= 2 the 3x3 sweep visits the same cell twice around the wrap;
  // dedupe keeps adjacency exact in torus mode on tiny areas.
  for (auto& a : t.adjacency) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  return t;
}

void write_positions_csv(const Topology& t, std::ostream& out) {
  out << "id,x,y\n";
  char buf[96];
  for (uint32_t i = 0; i < t.n; ++i) {
    std::snprintf(buf, sizeof(buf), "%u,%.6g,%.6g\n", i, t.positions[i].x, t.positions[i].y);
    out << buf;
  }
}

void write_adjacency_csv(const Topology& t, std::ostream& out) {
  out << "id,neighbor_id\n";
  for (uint32_t u = 0; u < t.n; ++u)
    for (NodeId v : t.adjacency[u])
      if (u < v) out << u << ',' << v << '\n';
}

}  // namespace wsn
