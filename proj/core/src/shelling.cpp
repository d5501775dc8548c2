#include "shard/shelling.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <unordered_set>

namespace shard {

namespace {

/// True iff K[F] ∩ K[others] is nonempty and pure of dimension dim(F)-1.
/// `others` are the facets that remain after removing F (all the same
/// dimension as F in a pure complex).
bool removal_condition(const Simplex& F, const std::vector<Simplex>& others) {
  const std::size_t ridge_size = F.size() - 1;
  auto shared_with_rest = [&](const Simplex& s) {
    for (const auto& G : others)
      if (is_face_of(s, G)) return true;
    return false;
  };
  std::vector<Simplex> shared;
  for (const auto& s : all_subfaces(F)) {
    if (s.size() == F.size()) continue;  // F itself is never shared with distinct same-dim facets
    if (shared_with_rest(s)) shared.push_back(s);
  }
  if (shared.empty()) return false;
  std::vector<const Simplex*> shared_ridges;
  for (const auto& s : shared)
    if (s.size() == ridge_size) shared_ridges.push_back(&s);
  if (shared_ridges.empty()) return false;
  for (const auto& s : shared) {
    bool covered = false;
    for (const auto* r : shared_ridges)
      if (is_face_of(s, *r)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// verify_shelling_down / up / duality
// ---------------------------------------------------------------------------

ShellingVerifyReport verify_shelling_down(const SimplicialComplex& K, const ShellingCertificate& cert) {
  if (!K.is_pure()) throw NotPure("verify_shelling_down: complex is not pure");
  ShellingVerifyReport rep;
  std::set<Simplex, FaceLess> remaining(K.facets().begin(), K.facets().end());
  const std::size_t m = remaining.size();
  if (cert.ordered_facets.size() >= m && m > 0 && !cert.ordered_facets.empty()) {
    rep.failing_index = 0;
    rep.reason = "removed prefix must leave at least one facet";
    return rep;
  }
  for (std::size_t i = 0; i < cert.ordered_facets.size(); ++i) {
    const Simplex& F = cert.ordered_facets[i];
    if (!remaining.count(F)) {
      rep.failing_index = i;
      rep.reason = "not a remaining facet: " + to_string(F);
      return rep;
    }
    remaining.erase(F);
    std::vector<Simplex> others(remaining.begin(), remaining.end());
    if (!removal_condition(F, others)) {
      rep.failing_index = i;
      rep.reason = "intersection with the remainder is not pure of codimension 1 at " + to_string(F);
      return rep;
    }
  }
  std::set<Simplex, FaceLess> want(cert.target.facets().begin(), cert.target.facets().end());
  if (want != remaining) {
    rep.failing_index = cert.ordered_facets.size();
    rep.reason = "target does not match the remaining facets";
    return rep;
  }
  rep.ok = true;
  return rep;
}

ShellingCertificate duality(const SimplicialComplex& K, const std::vector<Simplex>& up_order) {
  std::set<Simplex, FaceLess> seen;
  for (const auto& F : up_order) {
    if (!K.is_facet(F)) throw IncompleteOrder("duality: not a facet of K: " + to_string(F));
    if (!seen.insert(F).second) throw IncompleteOrder("duality: duplicate facet: " + to_string(F));
  }
  if (seen.size() != K.facets().size())
    throw IncompleteOrder("duality: order does not cover all facets");
  ShellingCertificate down;
  for (std::size_t i = up_order.size(); i-- > 1;) down.ordered_facets.push_back(up_order[i]);
  down.target = K.generated_by({up_order.front()});
  return down;
}

bool verify_shelling_up(const SimplicialComplex& K, const std::vector<Simplex>& order) {
  if (order.empty()) throw IncompleteOrder("verify_shelling_up: empty order");
  ShellingCertificate down = duality(K, order);
  if (down.ordered_facets.empty()) return true;  // single facet
  return verify_shelling_down(K, down).ok;
}

// ---------------------------------------------------------------------------
// is_disk
// ---------------------------------------------------------------------------

namespace {

/// Degrees of a 1-dimensional complex given by its edges.
std::map<Vertex, int> edge_degrees(const std::vector<Simplex>& edges) {
  std::map<Vertex, int> deg;
  for (const auto& e : edges) {
    ++deg[e[0]];
    ++deg[e[1]];
  }
  return deg;
}

bool graph_connected(const std::vector<Simplex>& edges) {
  if (edges.empty()) return false;
  std::map<Vertex, int> id;
  for (const auto& e : edges)
    for (const auto& v : e)
      id.emplace(v, static_cast<int>(id.size()));
  std::vector<int> parent(id.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  for (const auto& e : edges) {
    int a = find(id.at(e[0])), b = find(id.at(e[1]));
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  int root = find(0);
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(static_cast<int>(i)) != root) return false;
  return true;
}

/// 0 = neither, 1 = single path (>=1 edge), 2 = single cycle.
int path_or_cycle(const std::vector<Simplex>& edges) {
  if (edges.empty()) return 0;
  if (!graph_connected(edges)) return 0;
  auto deg = edge_degrees(edges);
  int ones = 0;
  for (const auto& [v, d] : deg) {
    if (d > 2) return 0;
    if (d == 1) ++ones;
  }
  if (ones == 2) return 1;
  if (ones == 0) return 2;
  return 0;
}

bool is_disk_dim2(const SimplicialComplex& K) {
  if (!K.is_pure()) return false;
  if (K.connected_components() != 1) return false;
  if (K.euler_characteristic() != 1) return false;
  const auto triangles = K.facets();
  std::map<Simplex, int, FaceLess> edge_count;
  for (const auto& t : triangles)
    for (const auto& e : all_subfaces(t))
      if (e.size() == 2) ++edge_count[e];
  std::vector<Simplex> boundary_edges;
  for (const auto& [e, c] : edge_count) {
    if (c > 2) return false;
    if (c == 1) boundary_edges.push_back(e);
  }
  if (boundary_edges.empty()) return false;
  std::set<Vertex> boundary_vertices;
  for (const auto& e : boundary_edges)
    for (const auto& v : e) boundary_vertices.insert(v);
  for (const auto& v : K.vertices()) {
    std::vector<Simplex> link_edges;
    for (const auto& t : triangles)
      if (std::find(t.begin(), t.end(), v) != t.end()) {
        Simplex opp;
        for (const auto& u : t)
          if (u != v) opp.push_back(u);
        link_edges.push_back(std::move(opp));
      }
    int kind = path_or_cycle(link_edges);
    bool on_boundary = boundary_vertices.count(v) != 0;
    if (on_boundary && kind != 1) return false;
    if (!on_boundary && kind != 2) return false;
  }
  // The boundary must be one cycle, not several.
  if (path_or_cycle(boundary_edges) != 2) return false;
  return true;
}

bool is_path_dim1(const SimplicialComplex& K) {
  for (const auto& f : K.facets())
    if (f.size() != 2) return false;
  return path_or_cycle(K.facets()) == 1;
}

}  // namespace

bool is_disk(const SimplicialComplex& K) {
  switch (K.dimension()) {
    case 2:
      return is_disk_dim2(K);
    case 1:
      return is_path_dim1(K);
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// free_facets
// ---------------------------------------------------------------------------

namespace {

/// Maximal faces of {subfaces of F} ∩ C, or empty if the intersection is.
std::vector<Simplex> facet_boundary_intersection(const Simplex& F, const SimplicialComplex& C) {
  std::vector<Simplex> shared;
  for (const auto& s : all_subfaces(F))
    if (C.contains(s)) shared.push_back(s);
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

std::vector<Simplex> free_facets(const SimplicialComplex& B) {
  if (B.dimension() != 3 || !B.is_pure())
    throw NotPure("free_facets: expected a pure 3-dimensional complex");
  if (!B.is_pseudomanifold())
    throw NotPseudomanifold("free_facets: expected a pseudomanifold");
  SimplicialComplex bd = B.boundary();
  if (bd.empty()) throw NoBoundary("free_facets: complex has no boundary");
  std::vector<Simplex> out;
  for (const auto& F : B.facets()) {
    auto maximal = facet_boundary_intersection(F, bd);
    if (maximal.empty()) continue;
    SimplicialComplex cap = SimplicialComplex::from_facets(maximal);
    if (cap.dimension() == 2 && is_disk(cap)) out.push_back(F);
  }
  return out;
}

// ---------------------------------------------------------------------------
// search_shelling
// ---------------------------------------------------------------------------

namespace {

struct MaskHash {
  std::size_t operator()(const std::vector<std::uint64_t>& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct ShellCtx {
  std::vector<Simplex> facets;             // (dim, lex) order, fixed ids
  std::vector<std::uint8_t> alive;         // per id
  std::vector<std::uint8_t> in_target;     // per id (subcomplex mode)
  std::size_t alive_count = 0;
  std::size_t target_count = 0;
  bool prune = false;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<Simplex> removed;
  std::unordered_set<std::vector<std::uint64_t>, MaskHash> failed;
  static constexpr std::size_t kMaxTable = 1u << 22;

  std::vector<std::uint64_t> words() const {
    std::vector<std::uint64_t> w((alive.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < alive.size(); ++i)
      if (alive[i]) w[i / 64] |= (1ull << (i % 64));
    return w;
  }

  std::vector<Simplex> alive_facets(int skip = -1) const {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < alive.size(); ++i)
      if (alive[i] && static_cast<int>(i) != skip) out.push_back(facets[i]);
    return out;
  }

  bool target_reached() const {
    if (alive_count != target_count) return false;
    if (in_target.empty()) return true;  // size mode
    for (std::size_t i = 0; i < alive.size(); ++i)
      if (alive[i] && !in_target[i]) return false;
    return true;
  }

  bool dfs() {
    if (target_reached()) return true;
    if (alive_count <= target_count) return false;
    if (nodes >= budget) {
      exhausted = true;
      return false;
    }
    ++nodes;
    if (failed.count(words())) return false;

    std::set<Simplex, FaceLess> prune_allowed;
    if (prune) {
      SimplicialComplex cur = SimplicialComplex::from_facets(alive_facets());
      for (const auto& F : free_facets(cur)) prune_allowed.insert(F);
    }
    for (std::size_t i = 0; i < alive.size(); ++i) {
      if (!alive[i]) continue;
      if (!in_target.empty() && in_target[i]) continue;
      if (prune && !prune_allowed.count(facets[i])) continue;
      auto others = alive_facets(static_cast<int>(i));
      if (!removal_condition(facets[i], others)) continue;
      alive[i] = 0;
      --alive_count;
      removed.push_back(facets[i]);
      if (dfs()) return true;
      removed.pop_back();
      alive[i] = 1;
      ++alive_count;
      if (exhausted) return false;
    }
    if (failed.size() < kMaxTable) failed.insert(words());
    return false;
  }
};

ShellingSearchResult run_shelling_search(const SimplicialComplex& K, ShellCtx& ctx,
                                         std::uint64_t budget, std::optional<bool> pruning) {
  if (!K.is_pure()) throw NotPure("search_shelling: complex is not pure");
  bool auto_prune = false;
  if (K.dimension() == 3 && K.is_pseudomanifold() && !K.boundary().empty()) auto_prune = true;
  ctx.prune = pruning.value_or(auto_prune);
  ctx.budget = budget;
  bool found = ctx.dfs();
  ShellingSearchResult res;
  res.nodes = ctx.nodes;
  if (found) {
    res.status = ShellSearchStatus::Found;
    res.certificate.ordered_facets = ctx.removed;
    res.certificate.target = SimplicialComplex::from_facets(ctx.alive_facets());
  } else if (ctx.exhausted) {
    res.status = ShellSearchStatus::Exhausted;
  } else {
    res.status = ShellSearchStatus::NotShellable;
  }
  return res;
}

}  // namespace

ShellingSearchResult search_shelling(const SimplicialComplex& K, const SimplicialComplex& target,
                                     std::uint64_t budget, std::optional<bool> free_facet_pruning) {
  ShellCtx ctx;
  ctx.facets = K.facets();
  ctx.alive.assign(ctx.facets.size(), 1);
  ctx.alive_count = ctx.facets.size();
  ctx.in_target.assign(ctx.facets.size(), 0);
  for (const auto& F : target.facets()) {
    auto it = std::find(ctx.facets.begin(), ctx.facets.end(), F);
    if (it == ctx.facets.end())
      throw InvalidInput("search_shelling: target facet not in K: " + to_string(F));
    ctx.in_target[static_cast<std::size_t>(it - ctx.facets.begin())] = 1;
    ++ctx.target_count;
  }
  if (ctx.target_count == 0) throw InvalidInput("search_shelling: empty target");
  return run_shelling_search(K, ctx, budget, free_facet_pruning);
}

ShellingSearchResult search_shelling(const SimplicialComplex& K, std::size_t target_size,
                                     std::uint64_t budget, std::optional<bool> free_facet_pruning) {
  if (target_size == 0 || target_size > K.facets().size())
    throw InvalidInput("search_shelling: bad target size");
  ShellCtx ctx;
  ctx.facets = K.facets();
  ctx.alive.assign(ctx.facets.size(), 1);
  ctx.alive_count = ctx.facets.size();
  ctx.target_count = target_size;
  return run_shelling_search(K, ctx, budget, free_facet_pruning);
}

// ---------------------------------------------------------------------------
// shelling_from_restricted_collapse
// ---------------------------------------------------------------------------

ShellingCertificate shelling_from_restricted_collapse(const SimplicialComplex& K,
                                                      const CollapseCertificate& cert,
                                                      const Simplex& final_triangle) {
  if (dim_of(final_triangle) != 2)
    throw InvalidInput("shelling_from_restricted_collapse: final target must be a triangle");
  if (!K.is_pure() || K.dimension() != 2)
    throw NotPure("shelling_from_restricted_collapse: expected a pure 2-complex");
  for (const auto& step : cert.steps) {
    int i = dim_of(step.containing_facet);
    int j = dim_of(step.free_face);
    if (!(i == 2 && (j == 0 || j == 1)))
      throw KindViolation("shelling_from_restricted_collapse: step kind (" + std::to_string(i) + "," +
                          std::to_string(j) + ") outside {(2,0),(2,1)}");
  }
  SimplicialComplex target = K.generated_by({final_triangle});
  VerifyReport vr = verify_certificate(K, cert, target);
  if (!vr.ok)
    throw InvalidInput("shelling_from_restricted_collapse: invalid certificate (step " +
                       std::to_string(vr.failing_index) + ": " + vr.reason + ")");
  ShellingCertificate out;
  for (const auto& step : cert.steps) out.ordered_facets.push_back(step.containing_facet);
  out.target = target;
  auto rep = verify_shelling_down(K, out);
  if (!rep.ok)
    throw InvalidInput("shelling_from_restricted_collapse: derived order fails at index " +
                       std::to_string(rep.failing_index) + ": " + rep.reason);
  return out;
}

// ---------------------------------------------------------------------------
// verify_pl_shelling
// ---------------------------------------------------------------------------

namespace {

/// Maximal faces of the intersection of two complexes (possibly none).
std::vector<Simplex> complex_intersection_facets(const SimplicialComplex& A, const SimplicialComplex& B) {
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

PLVerifyReport verify_pl_shelling(const SimplicialComplex& K, const std::vector<PLShellingStep>& steps,
                                  const SimplicialComplex& target) {
  if (!K.is_pure() || K.dimension() != 3)
    throw NotPure("verify_pl_shelling: expected a pure 3-complex");
  PLVerifyReport rep;
  std::set<Simplex, FaceLess> current(K.facets().begin(), K.facets().end());
  for (std::size_t i = 0; i < steps.size(); ++i) {
    rep.failing_index = i;
    const auto& step = steps[i];
    if (step.ball_facets.empty()) {
      rep.reason = "empty removal set";
      return rep;
    }
    std::set<Simplex, FaceLess> ball(step.ball_facets.begin(), step.ball_facets.end());
    for (const auto& F : ball)
      if (!current.count(F)) {
        rep.reason = "facet not in the remainder: " + to_string(F);
        return rep;
      }
    std::vector<Simplex> rest;
    for (const auto& F : current)
      if (!ball.count(F)) rest.push_back(F);
    SimplicialComplex Bc = SimplicialComplex::from_facets(step.ball_facets);
    if (step.ball_certificate.target.facets().size() != 1) {
      rep.reason = "ball certificate must shell down to a single facet";
      return rep;
    }
    auto ball_rep = verify_shelling_down(Bc, step.ball_certificate);
    if (!ball_rep.ok) {
      rep.reason = "ball certificate invalid: " + ball_rep.reason;
      return rep;
    }
    // Removing the entire remainder as one certified ball is allowed (the
    // final, empty remainder must then be the target); otherwise the
    // remainder has to meet the removed ball in a 2-disk.
    if (!rest.empty()) {
      SimplicialComplex Lc = SimplicialComplex::from_facets(rest);
      auto shared = complex_intersection_facets(Lc, Bc);
      if (shared.empty()) {
        rep.reason = "remainder and removed ball are disjoint";
        return rep;
      }
      SimplicialComplex cap = SimplicialComplex::from_facets(shared);
      if (cap.dimension() != 2 || !is_disk(cap)) {
        rep.reason = "remainder meets the removed ball in something other than a 2-disk";
        return rep;
      }
    }
    current.clear();
    for (auto& F : rest) current.insert(std::move(F));
  }
  std::set<Simplex, FaceLess> want(target.facets().begin(), target.facets().end());
  if (want != current) {
    rep.failing_index = steps.size();
    rep.reason = "final remainder does not match the target";
    return rep;
  }
  rep.ok = true;
  rep.reason.clear();
  return rep;
}

// ---------------------------------------------------------------------------
// tetra_free_predicate
// ---------------------------------------------------------------------------

bool tetra_free_predicate(const std::set<Simplex, FaceLess>& edges_on_boundary,
                          const std::set<Simplex, FaceLess>& triangles_on_boundary) {
  const Simplex tetra = sx({"a", "b", "c", "d"});
  for (const auto& e : edges_on_boundary)
    if (e.size() != 2 || !is_face_of(e, tetra))
      throw InvalidInput("tetra_free_predicate: not an edge of abcd: " + to_string(e));
  for (const auto& t : triangles_on_boundary)
    if (t.size() != 3 || !is_face_of(t, tetra))
      throw InvalidInput("tetra_free_predicate: not a triangle of abcd: " + to_string(t));
  for (const auto& v : {"a", "b", "c"})
    if (!edges_on_boundary.count(sx({v, "d"})))
      throw InvalidInput("tetra_free_predicate: apex edge " + std::string(v) + "d must be on the boundary");
  int off = 0;
  for (const auto& t : {sx({"a", "b", "d"}), sx({"a", "c", "d"}), sx({"b", "c", "d"})})
    if (!triangles_on_boundary.count(t)) ++off;
  return off < 2;
}

// ---------------------------------------------------------------------------
// certificate text form
// ---------------------------------------------------------------------------

std::string write_shelling_certificate(const ShellingCertificate& cert) {
  std::ostringstream out;
  out << "S target: " << cert.target.facets().size() << " facets follow\n";
  for (const auto& F : cert.target.facets()) out << to_string(F) << "\n";
  for (const auto& F : cert.ordered_facets) out << to_string(F) << "\n";
  return out.str();
}

ShellingCertificate parse_shelling_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t k = 0;
  bool have_header = false;
  ShellingCertificate cert;
  std::vector<Simplex> target_facets;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string s, t;
      if (!(hs >> s >> t) || s != "S" || t != "target:" || !(hs >> k))
        throw InvalidInput("parse_shelling_certificate: bad header: " + line);
      have_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::vector<Vertex> verts;
    Vertex v;
    while (ls >> v) verts.push_back(v);
    if (verts.empty()) continue;
    Simplex F = make_simplex(verts);
    if (target_facets.size() < k)
      target_facets.push_back(std::move(F));
    else
      cert.ordered_facets.push_back(std::move(F));
  }
  if (!have_header) throw InvalidInput("parse_shelling_certificate: missing header");
  if (target_facets.size() != k)
    throw InvalidInput("parse_shelling_certificate: expected " + std::to_string(k) + " target facets");
  if (!target_facets.empty()) cert.target = SimplicialComplex::from_facets(target_facets);
  return cert;
}

}  // namespace shard
