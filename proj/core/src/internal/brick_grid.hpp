/**
 * @file brick_grid.hpp
 * @brief Internal helper for solid complexes built out of axis-aligned unit
 *        cubes ("bricks") on the integer grid. Provides the cube polytopes,
 *        the boundary-surface tests (which squares/edges/vertices of the grid
 *        lie on the topological boundary of the brick union), the per-brick
 *        boundary-trace component analysis, and the vertex total order that
 *        drives the canonical triangulation.
 *
 * The vertex order is assembled from four classes: an explicit head list,
 * then vertices that form a singleton component of some brick's boundary
 * trace, then vertices lying in a purely 1-dimensional trace component, then
 * everything else. Within a class an explicit priority list may pull chosen
 * vertices to the front; ties break lexicographically on the vertex name.
 * Placing a vertex early makes it the cone apex of every incident cell whose
 * other corners come later, which is how diagonal choices and removal order
 * of individual bricks are steered without touching the triangulation code.
 */
#ifndef SHARD_INTERNAL_BRICK_GRID_HPP
#define SHARD_INTERNAL_BRICK_GRID_HPP

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "internal/panel_grid.hpp"
#include "shard/polytopal.hpp"

namespace shard::internal {

/// Brick at integer position (x, y, z), occupying [x,x+1]x[y,y+1]x[z,z+1].
using B3 = std::array<int, 3>;

inline Vertex bv(int x, int y, int z) { return vname(P3{x, y, z}); }

class BrickGrid {
 public:
  void add(int x, int y, int z) { bricks_.insert({x, y, z}); }

  /// Add the full box of bricks with x in [x0,x1], y in [y0,y1], z in [z0,z1]
  /// (inclusive brick coordinates).
  void box(int x0, int x1, int y0, int y1, int z0, int z1) {
    for (int x = x0; x <= x1; ++x)
      for (int y = y0; y <= y1; ++y)
        for (int z = z0; z <= z1; ++z) bricks_.insert({x, y, z});
  }

  void cut(int x, int y, int z) { bricks_.erase({x, y, z}); }

  bool has(int x, int y, int z) const { return bricks_.count({x, y, z}) > 0; }
  bool has(const B3& b) const { return bricks_.count(b) > 0; }

  const std::set<B3>& bricks() const { return bricks_; }

  /// The cube polytope of one brick: 8 vertices, 12 edges, 6 squares, top.
  static Polytope cube(const B3& b) {
    Polytope p;
    p.id = "b." + std::to_string(b[0]) + "." + std::to_string(b[1]) + "." + std::to_string(b[2]);
    for (const auto& f : cube_faces(b)) p.faces.push_back(f);
    return p;
  }

  /// One cube cell per brick.
  PolytopalComplex polytopal() const {
    PolytopalComplex result;
    for (const auto& b : bricks_) result.cells.push_back(cube(b));
    return result;
  }

  /// As above but skipping the given bricks (their cells are supplied by the
  /// caller, e.g. as prisms or other custom polytopes over the same squares).
  PolytopalComplex polytopal_without(const std::set<B3>& skip) const {
    PolytopalComplex result;
    for (const auto& b : bricks_)
      if (!skip.count(b)) result.cells.push_back(cube(b));
    return result;
  }

  // --- Boundary-surface membership -------------------------------------
  //
  // A grid square / edge / vertex lies on the boundary surface of the brick
  // union iff at least one but not all of its incident bricks are present.

  /// Square normal to `axis` at low corner (x,y,z): side of brick b with the
  /// square's plane through coordinate p[axis].
  bool square_on_boundary(int axis, const P3& low) const {
    B3 hi = {low.x, low.y, low.z};
    B3 lo = hi;
    lo[axis] -= 1;
    const int n = (bricks_.count(lo) ? 1 : 0) + (bricks_.count(hi) ? 1 : 0);
    return n == 1;
  }

  /// Edge along `axis` starting at the grid point `low`.
  bool edge_on_boundary(int axis, const P3& low) const {
    const int a1 = (axis + 1) % 3, a2 = (axis + 2) % 3;
    int n = 0;
    for (int d1 = -1; d1 <= 0; ++d1)
      for (int d2 = -1; d2 <= 0; ++d2) {
        B3 b = {low.x, low.y, low.z};
        b[a1] += d1;
        b[a2] += d2;
        if (bricks_.count(b)) ++n;
      }
    return n >= 1 && n <= 3;
  }

  bool vertex_on_boundary(const P3& p) const {
    int n = 0;
    for (int dx = -1; dx <= 0; ++dx)
      for (int dy = -1; dy <= 0; ++dy)
        for (int dz = -1; dz <= 0; ++dz)
          if (bricks_.count({p.x + dx, p.y + dy, p.z + dz})) ++n;
    return n >= 1 && n <= 7;
  }

  /// Is the given proper cube face (set of corner points) on the boundary
  /// surface? Faces are identified by their corner count: 1 = vertex,
  /// 2 = edge, 4 = square.
  bool face_on_boundary(const std::vector<P3>& corners) const {
    P3 low = corners[0];
    for (const auto& c : corners) {
      low.x = std::min(low.x, c.x);
      low.y = std::min(low.y, c.y);
      low.z = std::min(low.z, c.z);
    }
    if (corners.size() == 1) return vertex_on_boundary(low);
    P3 hi = corners[0];
    for (const auto& c : corners) {
      hi.x = std::max(hi.x, c.x);
      hi.y = std::max(hi.y, c.y);
      hi.z = std::max(hi.z, c.z);
    }
    if (corners.size() == 2) {
      const int axis = hi.x > low.x ? 0 : (hi.y > low.y ? 1 : 2);
      return edge_on_boundary(axis, low);
    }
    const int axis = hi.x == low.x ? 0 : (hi.y == low.y ? 1 : 2);
    return square_on_boundary(axis, low);
  }

  // --- Per-brick boundary trace -----------------------------------------

  /// The proper faces of the brick's cube that lie on the boundary surface,
  /// grouped into connected components (two faces connect when one contains
  /// the other). Each component is returned as its list of faces, faces as
  /// corner-point lists.
  std::vector<std::vector<std::vector<P3>>> trace_components(const B3& b) const {
    std::vector<std::vector<P3>> trace;
    for (const auto& f : cube_proper_faces(b))
      if (face_on_boundary(f)) trace.push_back(f);
    // Union-find over trace faces; connect on containment of corner sets.
    std::vector<size_t> parent(trace.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    auto key = [](const std::vector<P3>& f) {
      std::set<std::array<int, 3>> s;
      for (const auto& p : f) s.insert({p.x, p.y, p.z});
      return s;
    };
    std::vector<std::set<std::array<int, 3>>> keys;
    keys.reserve(trace.size());
    for (const auto& f : trace) keys.push_back(key(f));
    for (size_t i = 0; i < trace.size(); ++i)
      for (size_t j = 0; j < trace.size(); ++j)
        if (i != j && std::includes(keys[j].begin(), keys[j].end(), keys[i].begin(), keys[i].end()))
          parent[find(i)] = find(j);
    std::map<size_t, std::vector<std::vector<P3>>> comps;
    for (size_t i = 0; i < trace.size(); ++i) comps[find(i)].push_back(trace[i]);
    std::vector<std::vector<std::vector<P3>>> result;
    for (auto& [root, faces] : comps) result.push_back(std::move(faces));
    return result;
  }

  /// Number of boundary-trace components of each brick, keyed by brick.
  std::map<B3, size_t> trace_component_counts() const {
    std::map<B3, size_t> out;
    for (const auto& b : bricks_) out[b] = trace_components(b).size();
    return out;
  }

  // --- Vertex order -------------------------------------------------------

  /// All grid vertices used by some brick.
  std::set<Vertex> vertex_names() const {
    std::set<Vertex> vs;
    for (const auto& b : bricks_)
      for (int dx = 0; dx <= 1; ++dx)
        for (int dy = 0; dy <= 1; ++dy)
          for (int dz = 0; dz <= 1; ++dz) vs.insert(bv(b[0] + dx, b[1] + dy, b[2] + dz));
    return vs;
  }

  /// Vertex classes 2 and 3 (see file comment). A vertex is class 2 when it
  /// is a singleton boundary-trace component of some brick, class 3 when it
  /// lies in a purely 1-dimensional trace component of some brick.
  std::pair<std::set<Vertex>, std::set<Vertex>> corner_classes() const {
    std::set<Vertex> singletons, edge_bound;
    for (const auto& b : bricks_) {
      for (const auto& comp : trace_components(b)) {
        int maxdim = 0;
        for (const auto& f : comp) maxdim = std::max<int>(maxdim, f.size() == 4 ? 2 : (int)f.size() - 1);
        if (maxdim == 0 && comp.size() == 1)
          singletons.insert(vname(comp[0][0]));
        else if (maxdim == 1)
          for (const auto& f : comp)
            if (f.size() == 1) edge_bound.insert(vname(f[0]));
      }
    }
    for (const auto& v : singletons) edge_bound.erase(v);
    return {singletons, edge_bound};
  }

  /**
   * The total vertex order: `head` verbatim, then class-2 vertices, then
   * class-3 vertices, then the rest; `priority` pulls vertices to the front
   * within their class (in the listed order), remaining ties break on name.
   */
  TotalOrder order(const std::vector<Vertex>& head, const std::vector<Vertex>& priority = {}) const {
    const auto all = vertex_names();
    auto [singles, edges] = corner_classes();
    std::map<Vertex, size_t> prio;
    for (size_t i = 0; i < priority.size(); ++i)
      if (!prio.count(priority[i])) prio[priority[i]] = i;
    std::set<Vertex> placed(head.begin(), head.end());
    TotalOrder ord;
    ord.order = head;
    auto emit_class = [&](const std::set<Vertex>& members) {
      std::vector<Vertex> cls;
      for (const auto& v : members)
        if (all.count(v) && !placed.count(v)) cls.push_back(v);
      std::stable_sort(cls.begin(), cls.end(), [&](const Vertex& a, const Vertex& b) {
        const size_t pa = prio.count(a) ? prio.at(a) : priority.size();
        const size_t pb = prio.count(b) ? prio.at(b) : priority.size();
        return pa != pb ? pa < pb : a < b;
      });
      for (const auto& v : cls) {
        ord.order.push_back(v);
        placed.insert(v);
      }
    };
    emit_class(singles);
    emit_class(edges);
    emit_class(all);
    return ord;
  }

  // --- Face helpers --------------------------------------------------------

  /// The corner-point lists of all 26 proper faces of a brick's cube.
  static std::vector<std::vector<P3>> cube_proper_faces(const B3& b) {
    std::vector<std::vector<P3>> out;
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy)
        for (int dz = 0; dz <= 1; ++dz) out.push_back({{b[0] + dx, b[1] + dy, b[2] + dz}});
    for (int axis = 0; axis < 3; ++axis)
      for (int d1 = 0; d1 <= 1; ++d1)
        for (int d2 = 0; d2 <= 1; ++d2) {
          std::vector<P3> e;
          for (int t = 0; t <= 1; ++t) {
            P3 p{b[0], b[1], b[2]};
            int c[3] = {0, 0, 0};
            c[axis] = t;
            c[(axis + 1) % 3] = d1;
            c[(axis + 2) % 3] = d2;
            e.push_back({b[0] + c[0], b[1] + c[1], b[2] + c[2]});
          }
          out.push_back(e);
        }
    for (int axis = 0; axis < 3; ++axis)
      for (int side = 0; side <= 1; ++side) out.push_back(square_corners(b, axis, side));
    return out;
  }

  /// The 4 corner points of the brick's square face normal to `axis` on the
  /// low (side = 0) or high (side = 1) side.
  static std::vector<P3> square_corners(const B3& b, int axis, int side) {
    std::vector<P3> out;
    for (int d1 = 0; d1 <= 1; ++d1)
      for (int d2 = 0; d2 <= 1; ++d2) {
        int c[3] = {0, 0, 0};
        c[axis] = side;
        c[(axis + 1) % 3] = d1;
        c[(axis + 2) % 3] = d2;
        out.push_back({b[0] + c[0], b[1] + c[1], b[2] + c[2]});
      }
    return out;
  }

 private:
  static std::vector<Simplex> cube_faces(const B3& b) {
    std::vector<Simplex> faces;
    auto to_simplex = [](const std::vector<P3>& pts) {
      std::vector<Vertex> vs;
      for (const auto& p : pts) vs.push_back(vname(p));
      return make_simplex(vs);
    };
    for (const auto& f : cube_proper_faces(b)) faces.push_back(to_simplex(f));
    std::vector<P3> all;
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy)
        for (int dz = 0; dz <= 1; ++dz) all.push_back({b[0] + dx, b[1] + dy, b[2] + dz});
    faces.push_back(to_simplex(all));
    return faces;
  }

  std::set<B3> bricks_;
};

/// The two triangles into which the canonical triangulation cut the square
/// with the given 4 corners. Throws InvalidInput if absent.
inline std::pair<Simplex, Simplex> square_triangles(const SimplicialComplex& K,
                                                    const std::array<Vertex, 4>& corners) {
  std::vector<Vertex> c(corners.begin(), corners.end());
  std::sort(c.begin(), c.end());
  std::vector<Simplex> tris;
  // Each triangle omits exactly one corner.
  for (size_t skip = 0; skip < 4; ++skip) {
    std::vector<Vertex> t;
    for (size_t i = 0; i < 4; ++i)
      if (i != skip) t.push_back(c[i]);
    Simplex s = make_simplex(t);
    if (K.contains(s)) tris.push_back(s);
  }
  if (tris.size() != 2)
    throw InvalidInput("square_triangles: square not triangulated in complex");
  return {tris[0], tris[1]};
}

}  // namespace shard::internal

#endif  // SHARD_INTERNAL_BRICK_GRID_HPP
