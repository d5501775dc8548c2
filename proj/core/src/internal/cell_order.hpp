/**
 * @file cell_order.hpp
 * @brief Internal boundary-trace analysis and vertex ordering for arbitrary
 *        polytopal 3-complexes (cubes, prisms, and the custom blocker cell
 *        alike). Generalizes the grid-local logic of brick_grid.hpp: the
 *        boundary surface is found by counting, for every maximal proper face
 *        of every cell, how many cells carry it; faces carried once form the
 *        boundary. Per-cell traces, the singleton/edge corner classes, and
 *        the resulting total vertex order follow the same rules as the grid
 *        version and drive the canonical triangulation.
 */
#ifndef SHARD_INTERNAL_CELL_ORDER_HPP
#define SHARD_INTERNAL_CELL_ORDER_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shard/polytopal.hpp"

namespace shard::internal {

class CellAnalysis {
 public:
  explicit CellAnalysis(const PolytopalComplex& gamma) : gamma_(gamma) {
    // Maximal proper faces (the 2-faces) of each cell, then their cell counts.
    std::map<Simplex, int, FaceLess> count;
    two_faces_.resize(gamma.cells.size());
    for (std::size_t ci = 0; ci < gamma.cells.size(); ++ci) {
      const Polytope& P = gamma.cells[ci];
      const Simplex& top = P.top();
      for (const auto& f : P.faces) {
        if (f == top) continue;
        bool maximal = true;
        for (const auto& g : P.faces) {
          if (g == top || g == f) continue;
          if (f.size() < g.size() && is_face_of(f, g)) {
            maximal = false;
            break;
          }
        }
        if (maximal) two_faces_[ci].push_back(f);
      }
      for (const auto& f : two_faces_[ci]) ++count[f];
    }
    for (const auto& [f, n] : count) {
      if (n > 2)
        throw InvalidPolytope("cell analysis: face " + to_string(f) + " lies in " +
                              std::to_string(n) + " cells");
      if (n == 1) boundary_two_faces_.insert(f);
    }
    // Boundary closure: every listed subface of a boundary 2-face.
    for (std::size_t ci = 0; ci < gamma.cells.size(); ++ci)
      for (const auto& f : two_faces_[ci])
        if (boundary_two_faces_.count(f))
          for (const auto& g : gamma.cells[ci].faces)
            if (g.size() <= f.size() && is_face_of(g, f)) boundary_.insert(g);
  }

  const std::set<Simplex, FaceLess>& boundary_two_faces() const { return boundary_two_faces_; }
  bool on_boundary(const Simplex& f) const { return boundary_.count(f) > 0; }

  /// Boundary 2-faces of the cell with the given index.
  std::vector<Simplex> boundary_faces_of(std::size_t ci) const {
    std::vector<Simplex> out;
    for (const auto& f : two_faces_[ci])
      if (boundary_two_faces_.count(f)) out.push_back(f);
    return out;
  }

  /// The proper faces of cell `ci` on the boundary surface, grouped into
  /// connected components (two faces connect when one contains the other).
  std::vector<std::vector<Simplex>> trace_components(std::size_t ci) const {
    const Polytope& P = gamma_.cells[ci];
    const Simplex& top = P.top();
    std::vector<Simplex> trace;
    for (const auto& f : P.faces)
      if (!(f == top) && boundary_.count(f)) trace.push_back(f);
    std::vector<std::size_t> parent(trace.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    for (std::size_t i = 0; i < trace.size(); ++i)
      for (std::size_t j = 0; j < trace.size(); ++j)
        if (i != j && trace[i].size() < trace[j].size() && is_face_of(trace[i], trace[j]))
          parent[find(i)] = find(j);
    std::map<std::size_t, std::vector<Simplex>> comps;
    for (std::size_t i = 0; i < trace.size(); ++i) comps[find(i)].push_back(trace[i]);
    std::vector<std::vector<Simplex>> out;
    for (auto& [root, faces] : comps) out.push_back(std::move(faces));
    return out;
  }

  /// Vertex classes 2 and 3: a vertex is class 2 when it is a singleton
  /// boundary-trace component of some cell, class 3 when it lies in a purely
  /// 1-dimensional trace component of some cell (and is not class 2).
  std::pair<std::set<Vertex>, std::set<Vertex>> corner_classes() const {
    std::set<Vertex> singletons, edge_bound;
    for (std::size_t ci = 0; ci < gamma_.cells.size(); ++ci) {
      for (const auto& comp : trace_components(ci)) {
        int maxdim = 0;
        for (const auto& f : comp)
          maxdim = std::max(maxdim, f.size() >= 3 ? 2 : static_cast<int>(f.size()) - 1);
        if (maxdim == 0 && comp.size() == 1)
          singletons.insert(comp[0][0]);
        else if (maxdim == 1)
          for (const auto& f : comp)
            if (f.size() == 1) edge_bound.insert(f[0]);
      }
    }
    for (const auto& v : singletons) edge_bound.erase(v);
    return {singletons, edge_bound};
  }

  /**
   * The total vertex order: `head` verbatim, then class-2 vertices, then
   * class-3 vertices, then the rest; `priority` pulls vertices to the front
   * within their class (in the listed order); remaining ties break on name.
   */
  TotalOrder order(const std::vector<Vertex>& head, const std::vector<Vertex>& priority = {}) const {
    std::set<Vertex> all;
    for (const auto& v : gamma_.vertices()) all.insert(v);
    auto [singles, edges] = corner_classes();
    std::map<Vertex, std::size_t> prio;
    for (std::size_t i = 0; i < priority.size(); ++i)
      if (!prio.count(priority[i])) prio[priority[i]] = i;
    std::set<Vertex> placed(head.begin(), head.end());
    TotalOrder ord;
    ord.order = head;
    auto emit = [&](const std::set<Vertex>& members) {
      std::vector<Vertex> cls;
      for (const auto& v : members)
        if (all.count(v) && !placed.count(v)) cls.push_back(v);
      std::stable_sort(cls.begin(), cls.end(), [&](const Vertex& a, const Vertex& b) {
        const std::size_t pa = prio.count(a) ? prio.at(a) : priority.size();
        const std::size_t pb = prio.count(b) ? prio.at(b) : priority.size();
        return pa != pb ? pa < pb : a < b;
      });
      for (const auto& v : cls) {
        ord.order.push_back(v);
        placed.insert(v);
      }
    };
    emit(singles);
    emit(edges);
    emit(all);
    return ord;
  }

 private:
  const PolytopalComplex& gamma_;
  std::vector<std::vector<Simplex>> two_faces_;   // per cell, its maximal proper faces
  std::set<Simplex, FaceLess> boundary_two_faces_;
  std::set<Simplex, FaceLess> boundary_;           // closure of the above
};

}  // namespace shard::internal

#endif  // SHARD_INTERNAL_CELL_ORDER_HPP
