/**
 * @file panel_grid.hpp
 * @brief Internal helper for building 2-complexes out of axis-aligned unit
 *        squares on the integer grid. Cells become quadrilateral polytopes; a
 *        total vertex order then fixes the triangulation (one diagonal per
 *        square, chosen at the order-minimal corner).
 */
#ifndef SHARD_INTERNAL_PANEL_GRID_HPP
#define SHARD_INTERNAL_PANEL_GRID_HPP

#include <array>
#include <set>
#include <string>
#include <vector>

#include "shard/polytopal.hpp"

namespace shard::internal {

struct P3 {
  int x = 0, y = 0, z = 0;
};

inline std::string vname(const P3& p) {
  return std::to_string(p.x) + "." + std::to_string(p.y) + "." + std::to_string(p.z);
}

/// Corner of a cell with normal axis n (0=x,1=y,2=z) at plane coordinate c;
/// (u, v) run over the remaining axes in (x,y,z) order.
inline P3 cell_point(int n, int c, int u, int v) {
  switch (n) {
    case 0: return {c, u, v};
    case 1: return {u, c, v};
    default: return {u, v, c};
  }
}

/// A set of unit squares; duplicates collapse. Cells are keyed (n, c, u, v).
class PanelGrid {
 public:
  /// Add every unit cell of the rectangle [u0,u1]x[v0,v1] in plane coord c of
  /// axis `normal` ('x'|'y'|'z'). Bounds are vertex coordinates, so u1 > u0.
  void rect(char normal, int c, int u0, int u1, int v0, int v1) {
    const int n = axis(normal);
    for (int u = u0; u < u1; ++u)
      for (int v = v0; v < v1; ++v) cells_.insert({n, c, u, v});
  }

  void cut(char normal, int c, int u, int v) { cells_.erase({axis(normal), c, u, v}); }

  bool has(char normal, int c, int u, int v) const {
    return cells_.count({axis(normal), c, u, v}) > 0;
  }

  size_t size() const { return cells_.size(); }

  /// One quadrilateral polytope per cell, ids "q0", "q1", ... in key order.
  PolytopalComplex polytopal() const {
    PolytopalComplex result;
    size_t k = 0;
    for (const auto& cell : cells_) {
      const auto [n, c, u, v] = cell;
      std::vector<Vertex> cycle = {
          vname(cell_point(n, c, u, v)), vname(cell_point(n, c, u + 1, v)),
          vname(cell_point(n, c, u + 1, v + 1)), vname(cell_point(n, c, u, v + 1))};
      result.cells.push_back(make_polygon("q" + std::to_string(k++), cycle));
    }
    return result;
  }

  /// All grid vertices used by some cell, sorted by name.
  std::vector<Vertex> vertices() const {
    std::set<Vertex> vs;
    for (const auto& cell : cells_) {
      const auto [n, c, u, v] = cell;
      for (int du = 0; du <= 1; ++du)
        for (int dv = 0; dv <= 1; ++dv) vs.insert(vname(cell_point(n, c, u + du, v + dv)));
    }
    return {vs.begin(), vs.end()};
  }

  /// Total order: the listed vertices first (in the given order), then every
  /// remaining grid vertex by name.
  TotalOrder order_with_priority(const std::vector<Vertex>& first) const {
    TotalOrder ord;
    std::set<Vertex> seen;
    for (const auto& v : first)
      if (seen.insert(v).second) ord.order.push_back(v);
    for (const auto& v : vertices())
      if (seen.insert(v).second) ord.order.push_back(v);
    return ord;
  }

 private:
  static int axis(char normal) { return normal == 'x' ? 0 : normal == 'y' ? 1 : 2; }
  std::set<std::array<int, 4>> cells_;
};

/// Unit edges along the axis-aligned segment from a to b (exactly one
/// coordinate may differ).
inline std::vector<Simplex> grid_segment(const P3& a, const P3& b) {
  std::vector<Simplex> edges;
  P3 cur = a;
  auto step = [](int from, int to) { return from < to ? 1 : from > to ? -1 : 0; };
  const int dx = step(a.x, b.x), dy = step(a.y, b.y), dz = step(a.z, b.z);
  while (cur.x != b.x || cur.y != b.y || cur.z != b.z) {
    P3 next{cur.x + dx, cur.y + dy, cur.z + dz};
    edges.push_back(make_simplex({vname(cur), vname(next)}));
    cur = next;
  }
  return edges;
}

/// Unit edges along the closed axis-aligned polyline through the given points.
inline std::vector<Simplex> grid_cycle(const std::vector<P3>& pts) {
  std::vector<Simplex> edges;
  for (size_t i = 0; i < pts.size(); ++i) {
    auto part = grid_segment(pts[i], pts[(i + 1) % pts.size()]);
    edges.insert(edges.end(), part.begin(), part.end());
  }
  return edges;
}

}  // namespace shard::internal

#endif
