#include "shard/polytopal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "shard/collapse.hpp"

namespace shard {

// ---------------------------------------------------------------------------
// types
// ---------------------------------------------------------------------------

const Simplex& Polytope::top() const {
  if (faces.empty()) throw InvalidPolytope("polytope " + id + ": empty face list");
  const Simplex* best = nullptr;
  for (const auto& f : faces)
    if (!best || f.size() > best->size()) best = &f;
  for (const auto& f : faces)
    if (!is_face_of(f, *best))
      throw InvalidPolytope("polytope " + id + ": no unique top face (" + to_string(f) +
                            " is not below " + to_string(*best) + ")");
  return *best;
}

std::vector<Simplex> PolytopalComplex::all_faces() const {
  std::set<Simplex, FaceLess> out;
  for (const auto& P : cells) out.insert(P.faces.begin(), P.faces.end());
  return {out.begin(), out.end()};
}

std::vector<Vertex> PolytopalComplex::vertices() const {
  std::set<Vertex> out;
  for (const auto& P : cells)
    for (const auto& f : P.faces) out.insert(f.begin(), f.end());
  return {out.begin(), out.end()};
}

void PolytopalComplex::validate() const {
  std::set<std::string> ids;
  for (const auto& P : cells) {
    if (!ids.insert(P.id).second) throw InvalidPolytope("duplicate cell id: " + P.id);
    const Simplex& t = P.top();
    std::set<Simplex, FaceLess> listed(P.faces.begin(), P.faces.end());
    for (const auto& v : t)
      if (!listed.count(Simplex{v}))
        throw InvalidPolytope("polytope " + P.id + ": vertex " + v + " not listed as a face");
  }
  // Conditions (i)+(ii): any two listed faces (within or across cells) meet
  // in a listed face of both, or not at all. Since a ∩ b is then a face of a,
  // closure forces every cell listing a to list a ∩ b too. Only faces sharing
  // a vertex can meet, so candidates come from a per-vertex index.
  auto faces = all_faces();
  std::map<Vertex, std::vector<const Simplex*>> by_vertex;
  for (const auto& f : faces)
    for (const auto& v : f) by_vertex[v].push_back(&f);
  for (const auto& P : cells) {
    std::set<Simplex, FaceLess> listed(P.faces.begin(), P.faces.end());
    for (const auto& a : P.faces) {
      std::set<const Simplex*> candidates;
      for (const auto& v : a)
        for (const Simplex* b : by_vertex[v]) candidates.insert(b);
      for (const Simplex* b : candidates) {
        auto cap = simplex_intersection(a, *b);
        if (cap.empty()) continue;
        if (!listed.count(cap))
          throw InvalidPolytope("polytope " + P.id + ": faces " + to_string(a) + " and " +
                                to_string(*b) + " meet in " + to_string(cap) +
                                ", which it does not list");
      }
    }
  }
}

Polytope make_polygon(const std::string& id, const std::vector<Vertex>& cycle) {
  if (cycle.size() < 3) throw InvalidPolytope("polygon " + id + ": fewer than 3 vertices");
  Polytope P;
  P.id = id;
  std::set<Simplex, FaceLess> faces;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    faces.insert(Simplex{cycle[i]});
    faces.insert(make_simplex({cycle[i], cycle[(i + 1) % cycle.size()]}));
  }
  Simplex top(cycle);
  top = make_simplex(top);
  if (top.size() != cycle.size()) throw InvalidPolytope("polygon " + id + ": repeated vertex");
  faces.insert(top);
  P.faces.assign(faces.begin(), faces.end());
  return P;
}

std::size_t TotalOrder::rank(const Vertex& v) const {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == v) return i;
  throw InvalidInput("total order: unknown vertex " + v);
}

// ---------------------------------------------------------------------------
// canonical_triangulation
// ---------------------------------------------------------------------------

namespace {

struct Triangulator {
  const TotalOrder& ord;
  std::set<Simplex, FaceLess> faces;                  // global registry
  std::map<Vertex, std::vector<const Simplex*>> by_vertex;  // candidate index
  std::map<Simplex, std::vector<Simplex>, FaceLess> memo;  // face -> top simplices

  void index() {
    for (const auto& f : faces)
      for (const auto& v : f) by_vertex[v].push_back(&f);
  }

  /// Maximal listed proper subfaces of F.
  std::vector<Simplex> children(const Simplex& F) const {
    std::set<const Simplex*> candidates;
    for (const auto& v : F) {
      auto it = by_vertex.find(v);
      if (it != by_vertex.end())
        for (const Simplex* g : it->second) candidates.insert(g);
    }
    std::vector<Simplex> below;
    for (const Simplex* gp : candidates) {
      const Simplex& G = *gp;
      if (G.size() < F.size() && is_face_of(G, F)) below.push_back(G);
    }
    std::vector<Simplex> maximal;
    for (const auto& G : below) {
      bool is_max = true;
      for (const auto& H : below)
        if (H.size() > G.size() && is_face_of(G, H)) {
          is_max = false;
          break;
        }
      if (is_max) maximal.push_back(G);
    }
    return maximal;
  }

  const std::vector<Simplex>& triangulate(const Simplex& F) {
    auto it = memo.find(F);
    if (it != memo.end()) return it->second;
    std::vector<Simplex> tops;
    if (F.size() <= 2) {
      tops.push_back(F);
    } else {
      const Vertex* apex = nullptr;
      for (const auto& v : F)
        if (!apex || ord.rank(v) < ord.rank(*apex)) apex = &v;
      bool any = false;
      for (const auto& G : children(F)) {
        if (std::find(G.begin(), G.end(), *apex) != G.end()) continue;
        any = true;
        for (const auto& s : triangulate(G)) tops.push_back(simplex_union(s, Simplex{*apex}));
      }
      if (!any)
        throw InvalidPolytope("face " + to_string(F) +
                              ": every listed facet contains the first vertex " + *apex);
      std::size_t size = tops.front().size();
      for (const auto& s : tops)
        if (s.size() != size)
          throw InvalidPolytope("face " + to_string(F) + ": inconsistent face lattice heights");
      std::sort(tops.begin(), tops.end(), FaceLess{});
      tops.erase(std::unique(tops.begin(), tops.end()), tops.end());
    }
    return memo.emplace(F, std::move(tops)).first->second;
  }
};

}  // namespace

CanonicalTriangulation canonical_triangulation(const PolytopalComplex& gamma, const TotalOrder& ord) {
  gamma.validate();
  auto verts = gamma.vertices();
  std::set<Vertex> covered(ord.order.begin(), ord.order.end());
  if (covered.size() != ord.order.size())
    throw InvalidInput("canonical_triangulation: order repeats a vertex");
  for (const auto& v : verts)
    if (!covered.count(v)) throw InvalidInput("canonical_triangulation: order misses vertex " + v);

  Triangulator tri{ord, {}, {}, {}};
  auto all = gamma.all_faces();
  tri.faces.insert(all.begin(), all.end());
  tri.index();

  CanonicalTriangulation out;
  std::vector<Simplex> tops;
  for (const auto& P : gamma.cells) {
    for (const auto& s : tri.triangulate(P.top())) {
      tops.push_back(s);
      out.provenance[s] = P.id;
    }
  }
  out.complex = SimplicialComplex::from_facets(tops);
  return out;
}

// ---------------------------------------------------------------------------
// prism_over
// ---------------------------------------------------------------------------

PolytopalComplex prism_over(const PolytopalComplex& K, const std::string& suffix) {
  K.validate();
  if (suffix.empty()) throw InvalidInput("prism_over: empty suffix");
  auto lift = [&](const Simplex& s) {
    Simplex out;
    for (const auto& v : s) out.push_back(v + suffix);
    return make_simplex(out);
  };
  PolytopalComplex out;
  for (const auto& P : K.cells) {
    if (P.top().size() < 3)
      throw InvalidInput("prism_over: expected polygonal (2-dimensional) cells");
    Polytope prism;
    prism.id = P.id + "*I";
    std::set<Simplex, FaceLess> faces;
    for (const auto& s : P.faces) {
      faces.insert(s);
      faces.insert(lift(s));
      faces.insert(simplex_union(s, lift(s)));
    }
    prism.faces.assign(faces.begin(), faces.end());
    out.cells.push_back(std::move(prism));
  }
  return out;
}

// ---------------------------------------------------------------------------
// shell_disk_extend
// ---------------------------------------------------------------------------

namespace {

bool is_sphere2(const SimplicialComplex& K) {
  if (K.dimension() != 2 || !K.is_pure()) return false;
  if (K.connected_components() != 1) return false;
  if (K.euler_characteristic() != 2) return false;
  if (!K.is_pseudomanifold()) return false;
  return K.boundary().empty();
}

/// Up-shelling step legality: F meets the union of `prefix` in a nonempty
/// pure complex of dimension dim(F)-1 (no condition for the first facet).
bool up_step_ok(const Simplex& F, const std::vector<Simplex>& prefix) {
  if (prefix.empty()) return true;
  return [&] {
    // Same pure-intersection test as the down direction, against the prefix.
    const std::size_t ridge_size = F.size() - 1;
    std::vector<Simplex> shared;
    for (const auto& s : all_subfaces(F)) {
      if (s.size() == F.size()) continue;
      for (const auto& G : prefix)
        if (is_face_of(s, G)) {
          shared.push_back(s);
          break;
        }
    }
    if (shared.empty()) return false;
    std::vector<const Simplex*> ridges;
    for (const auto& s : shared)
      if (s.size() == ridge_size) ridges.push_back(&s);
    if (ridges.empty()) return false;
    for (const auto& s : shared) {
      bool covered = false;
      for (const auto* r : ridges)
        if (is_face_of(s, *r)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  }();
}

bool extend_up(const std::vector<Simplex>& facets, std::vector<Simplex>& prefix,
               std::set<Simplex, FaceLess>& used) {
  if (prefix.size() == facets.size()) return true;
  for (const auto& F : facets) {
    if (used.count(F)) continue;
    if (!up_step_ok(F, prefix)) continue;
    prefix.push_back(F);
    used.insert(F);
    if (extend_up(facets, prefix, used)) return true;
    used.erase(F);
    prefix.pop_back();
  }
  return false;
}

}  // namespace

std::vector<Simplex> shell_disk_extend(const SimplicialComplex& D, const std::vector<Simplex>& partial) {
  if (D.dimension() != 2 || (!is_disk(D) && !is_sphere2(D)))
    throw InvalidInput("shell_disk_extend: expected a triangulated 2-disk or 2-sphere");
  std::vector<Simplex> prefix;
  std::set<Simplex, FaceLess> used;
  for (const auto& F : partial) {
    if (!D.is_facet(F)) throw InvalidInput("shell_disk_extend: not a facet: " + to_string(F));
    if (used.count(F)) throw InvalidInput("shell_disk_extend: repeated facet: " + to_string(F));
    if (!up_step_ok(F, prefix))
      throw InvalidInput("shell_disk_extend: invalid partial shelling at " + to_string(F));
    prefix.push_back(F);
    used.insert(F);
  }
  if (!extend_up(D.facets(), prefix, used))
    throw InvalidInput("shell_disk_extend: could not complete the shelling");  // unreachable for disks/spheres
  return prefix;
}

// ---------------------------------------------------------------------------
// shell_canonical
// ---------------------------------------------------------------------------

namespace {

std::vector<Simplex> intersection_facets(const SimplicialComplex& A, const SimplicialComplex& B) {
  std::vector<Simplex> shared;
  for (const auto& s : B.faces())
    if (A.contains(s)) shared.push_back(s);
  std::vector<Simplex> maximal;
  for (const auto& s : shared) {
    bool is_max = true;
    for (const auto& t : shared)
      if (t.size() > s.size() && is_face_of(s, t)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(s);
  }
  return maximal;
}

}  // namespace

ShellingCertificate shell_canonical(const SimplicialComplex& K, const SimplicialComplex& P,
                                    const Vertex& apex, const SimplicialComplex& L) {
  if (K.dimension() != 3 || !K.is_pure())
    throw InvalidInput("shell_canonical: K must be a pure 3-complex");
  if (L.dimension() != 3 || !L.is_pure())
    throw InvalidInput("shell_canonical: L must be a pure 3-complex");
  if (P.dimension() != 3 || !P.is_pure())
    throw InvalidInput("shell_canonical: P must be a pure 3-complex");
  {
    std::set<Simplex, FaceLess> unions(L.facets().begin(), L.facets().end());
    unions.insert(P.facets().begin(), P.facets().end());
    std::set<Simplex, FaceLess> kf(K.facets().begin(), K.facets().end());
    if (unions != kf) throw InvalidInput("shell_canonical: K is not L union P");
  }
  for (const auto& T : P.facets())
    if (std::find(T.begin(), T.end(), apex) == T.end())
      throw InvalidInput("shell_canonical: P is not a cone with apex " + apex);

  SimplicialComplex dP = P.boundary();
  auto cap_facets = intersection_facets(L, P);
  if (cap_facets.empty()) throw InvalidInput("shell_canonical: L and P are disjoint");
  SimplicialComplex D = SimplicialComplex::from_facets(cap_facets);
  if (D.dimension() != 2 || !is_disk(D))
    throw InvalidInput("shell_canonical: L meets P in something other than a 2-disk");
  for (const auto& f : D.faces())
    if (!dP.contains(f))
      throw InvalidInput("shell_canonical: L meets P outside the boundary of P at " + to_string(f));

  // Decompose the boundary triangles by apex membership and membership in L.
  std::vector<Simplex> W, YZ;
  std::set<Simplex, FaceLess> Y;
  for (const auto& t : dP.facets()) {
    bool at_apex = std::find(t.begin(), t.end(), apex) != t.end();
    bool in_L = D.contains(t);
    if (at_apex && in_L) W.push_back(t);
    if (!at_apex) {
      YZ.push_back(t);
      if (in_L) Y.insert(t);
    }
  }

  // Up-shelling of W, extended over W ∪ Y, then over W ∪ Y ∪ Z.
  std::vector<Simplex> order;
  if (!W.empty()) {
    SimplicialComplex Wc = SimplicialComplex::from_facets(W);
    order = shell_disk_extend(Wc, {});
  }
  {
    std::vector<Simplex> wy = W;
    for (const auto& t : YZ)
      if (Y.count(t)) wy.push_back(t);
    if (!wy.empty()) order = shell_disk_extend(SimplicialComplex::from_facets(wy), order);
  }
  {
    std::vector<Simplex> wyz = W;
    wyz.insert(wyz.end(), YZ.begin(), YZ.end());
    order = shell_disk_extend(SimplicialComplex::from_facets(wyz), order);
  }

  // Cone the Y ∪ Z part of the order with the apex: an up-shelling of P on
  // top of L, i.e. reversed, a shelling of K down to L.
  std::vector<Simplex> tetra_up;
  for (const auto& t : order) {
    if (std::find(t.begin(), t.end(), apex) != t.end()) continue;  // W/X triangles
    tetra_up.push_back(simplex_union(t, Simplex{apex}));
  }
  ShellingCertificate cert;
  cert.ordered_facets.assign(tetra_up.rbegin(), tetra_up.rend());
  cert.target = L;
  auto rep = verify_shelling_down(K, cert);
  if (!rep.ok)
    throw InvalidInput("shell_canonical: derived order fails verification at index " +
                       std::to_string(rep.failing_index) + ": " + rep.reason);
  return cert;
}

// ---------------------------------------------------------------------------
// .plx text form
// ---------------------------------------------------------------------------

std::string write_plx(const PolytopalComplex& gamma) {
  std::ostringstream out;
  bool first = true;
  for (const auto& P : gamma.cells) {
    if (!first) out << "\n";
    first = false;
    out << "P " << P.id << "\n";
    for (const auto& f : P.faces) out << to_string(f) << "\n";
  }
  return out.str();
}

PolytopalComplex parse_plx(const std::string& text) {
  PolytopalComplex out;
  std::istringstream in(text);
  std::string line;
  Polytope* cur = nullptr;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("P ", 0) == 0) {
      out.cells.emplace_back();
      cur = &out.cells.back();
      cur->id = line.substr(2);
      while (!cur->id.empty() && cur->id.back() == ' ') cur->id.pop_back();
      if (cur->id.empty()) throw InvalidInput("parse_plx: empty cell id");
      continue;
    }
    if (!cur) throw InvalidInput("parse_plx: face line before any P header: " + line);
    std::istringstream ls(line);
    std::vector<Vertex> verts;
    Vertex v;
    while (ls >> v) verts.push_back(v);
    if (!verts.empty()) cur->faces.push_back(make_simplex(verts));
  }
  if (out.cells.empty()) throw InvalidInput("parse_plx: no cells");
  for (auto& P : out.cells) {
    std::sort(P.faces.begin(), P.faces.end(), FaceLess{});
    P.faces.erase(std::unique(P.faces.begin(), P.faces.end()), P.faces.end());
  }
  return out;
}

}  // namespace shard
