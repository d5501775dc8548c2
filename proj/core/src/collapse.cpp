#include "shard/collapse.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <sstream>
#include <unordered_set>

#include "shard/shelling.hpp"

namespace shard {

// ---------------------------------------------------------------------------
// CollapseWorkspace
// ---------------------------------------------------------------------------

CollapseWorkspace::CollapseWorkspace(const SimplicialComplex& K) {
  faces_ = K.faces();
  for (size_t i = 0; i < faces_.size(); ++i) index_[faces_[i]] = static_cast<int>(i);
  sub_.resize(faces_.size());
  super_.resize(faces_.size());
  for (size_t i = 0; i < faces_.size(); ++i) {
    for (const auto& s : all_subfaces(faces_[i])) {
      if (s.size() == faces_[i].size()) continue;
      int j = index_.at(s);
      sub_[i].push_back(j);
      super_[static_cast<size_t>(j)].push_back(static_cast<int>(i));
    }
  }
  alive_.assign(faces_.size(), 1);
  alive_words_.assign((faces_.size() + 63) / 64, 0);
  for (size_t i = 0; i < faces_.size(); ++i) alive_words_[i / 64] |= (1ull << (i % 64));
  alive_cofaces_.resize(faces_.size());
  for (size_t i = 0; i < faces_.size(); ++i)
    alive_cofaces_[i] = static_cast<int>(super_[i].size());
  alive_count_ = faces_.size();
}

void CollapseWorkspace::kill(int id) {
  auto i = static_cast<size_t>(id);
  alive_[i] = 0;
  alive_words_[i / 64] &= ~(1ull << (i % 64));
  --alive_count_;
  for (int s : sub_[i]) --alive_cofaces_[static_cast<size_t>(s)];
}

void CollapseWorkspace::revive(int id) {
  auto i = static_cast<size_t>(id);
  alive_[i] = 1;
  alive_words_[i / 64] |= (1ull << (i % 64));
  ++alive_count_;
  for (int s : sub_[i]) ++alive_cofaces_[static_cast<size_t>(s)];
}

bool CollapseWorkspace::alive(const Simplex& s) const {
  auto it = index_.find(s);
  return it != index_.end() && alive_[static_cast<size_t>(it->second)];
}

int CollapseWorkspace::id_of(const Simplex& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

int CollapseWorkspace::free_facet_id(int id) const {
  auto i = static_cast<size_t>(id);
  if (!alive_[i]) return -1;
  if (alive_cofaces_[i] == 0) return -1;  // it is a facet itself
  int facet = -1;
  for (int c : super_[i]) {
    auto ci = static_cast<size_t>(c);
    if (alive_[ci] && alive_cofaces_[ci] == 0) {
      if (facet != -1) return -1;  // two containing facets
      facet = c;
    }
  }
  return facet;
}

std::optional<Simplex> CollapseWorkspace::free_in(const Simplex& s) const {
  int id = id_of(s);
  if (id < 0) return std::nullopt;
  int f = free_facet_id(id);
  if (f < 0) return std::nullopt;
  return faces_[static_cast<size_t>(f)];
}

std::vector<std::pair<Simplex, Simplex>> CollapseWorkspace::free_pairs() const {
  std::vector<std::pair<Simplex, Simplex>> out;
  for (size_t i = 0; i < faces_.size(); ++i) {
    int f = free_facet_id(static_cast<int>(i));
    if (f >= 0) out.emplace_back(faces_[i], faces_[static_cast<size_t>(f)]);
  }
  return out;
}

void CollapseWorkspace::remove_cascade(int id, std::vector<int>& removed) {
  auto i = static_cast<size_t>(id);
  if (!alive_[i]) return;
  // Remove id and every alive coface. super_ lists are ascending (by
  // construction face ids are (dim,lex)-sorted), giving deterministic order.
  kill(id);
  removed.push_back(id);
  for (int c : super_[i])
    if (alive_[static_cast<size_t>(c)]) {
      kill(c);
      removed.push_back(c);
    }
}

void CollapseWorkspace::restore(const std::vector<int>& removed) {
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) revive(*it);
}

CollapseStep CollapseWorkspace::collapse_through(const Simplex& s) {
  int id = id_of(s);
  if (id < 0 || !alive_[static_cast<size_t>(id)])
    throw NotFree("collapse_through: " + to_string(s) + " not present");
  int f = free_facet_id(id);
  if (f < 0) {
    // Diagnose: facet itself, or >= 2 containing facets.
    int count = 0;
    for (int c : super_[static_cast<size_t>(id)]) {
      auto ci = static_cast<size_t>(c);
      if (alive_[ci] && alive_cofaces_[ci] == 0) ++count;
    }
    throw NotFree("collapse_through: " + to_string(s) + " contained in " +
                  std::to_string(count) + " facets (need exactly 1, as a non-facet)");
  }
  std::vector<int> removed;
  remove_cascade(id, removed);
  return CollapseStep{s, faces_[static_cast<size_t>(f)]};
}

SimplicialComplex CollapseWorkspace::current() const {
  std::vector<Simplex> fs;
  for (size_t i = 0; i < faces_.size(); ++i)
    if (alive_[i] && alive_cofaces_[i] == 0) fs.push_back(faces_[i]);
  if (fs.empty()) return SimplicialComplex();
  return SimplicialComplex::from_facets(fs);
}

// ---------------------------------------------------------------------------
// Free faces / apply / verify
// ---------------------------------------------------------------------------

std::vector<std::pair<Simplex, Simplex>> free_faces(const SimplicialComplex& K) {
  if (K.empty()) return {};
  CollapseWorkspace ws(K);
  return ws.free_pairs();
}

SimplicialComplex apply_step(const SimplicialComplex& K, const CollapseStep& step) {
  CollapseWorkspace ws(K);
  auto applied = ws.collapse_through(step.free_face);
  if (applied.containing_facet != step.containing_facet)
    throw NotFree("apply_step: containing facet mismatch for " + to_string(step.free_face) +
                  " (actual " + to_string(applied.containing_facet) + ")");
  return ws.current();
}

VerifyReport verify_certificate(const SimplicialComplex& K, const CollapseCertificate& cert,
                                const SimplicialComplex& target) {
  VerifyReport rep;
  CollapseWorkspace ws(K);
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    const auto& st = cert.steps[i];
    int id = ws.id_of(st.free_face);
    int f = id < 0 ? -1 : ws.free_facet_id(id);
    if (f < 0) {
      rep.failing_index = i;
      rep.reason = "step not free: " + to_string(st.free_face);
      return rep;
    }
    const Simplex& facet = ws.face_of(f);
    if (facet != st.containing_facet) {
      rep.failing_index = i;
      rep.reason = "containing facet mismatch at " + to_string(st.free_face);
      return rep;
    }
    if (cert.kind_filter) {
      CollapseKind k{dim_of(facet), dim_of(st.free_face)};
      if (!cert.kind_filter->count(k)) {
        rep.failing_index = i;
        rep.reason = "kind (" + std::to_string(k.first) + "," + std::to_string(k.second) +
                     ") not in filter";
        return rep;
      }
    }
    std::vector<int> removed;
    ws.remove_cascade(id, removed);
  }
  if (!(ws.current() == target)) {
    rep.failing_index = cert.steps.size();
    rep.reason = "final complex differs from target";
    return rep;
  }
  rep.ok = true;
  return rep;
}

// ---------------------------------------------------------------------------
// search_collapse
// ---------------------------------------------------------------------------

namespace {

struct WordsHash {
  size_t operator()(const std::vector<std::uint64_t>& w) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : w) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

struct SearchCtx {
  CollapseWorkspace ws;
  std::vector<std::uint8_t> in_target;  // per face id
  size_t target_count = 0;
  const std::set<CollapseKind>* kinds = nullptr;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<CollapseStep> steps;
  // Failed-state cache. Entries are states fully explored without success.
  std::unordered_set<std::vector<std::uint64_t>, WordsHash> failed;
  static constexpr size_t kMaxTable = 1u << 22;

  explicit SearchCtx(const SimplicialComplex& K) : ws(K) {}

  bool dfs() {
    if (ws.alive_faces() == target_count) return true;  // target faces are never removed
    if (nodes >= budget) {
      exhausted = true;
      return false;
    }
    ++nodes;
    if (failed.count(ws.alive_words())) return false;

    const int n = static_cast<int>(ws.total_faces());
    for (int id = 0; id < n; ++id) {
      if (in_target[static_cast<size_t>(id)]) continue;
      int f = ws.free_facet_id(id);
      if (f < 0) continue;
      if (kinds) {
        CollapseKind k{dim_of(ws.face_of(f)), dim_of(ws.face_of(id))};
        if (!kinds->count(k)) continue;
      }
      // Never remove a target face: check the cascade stays off-target.
      bool touches_target = false;
      for (int c : ws.cofaces(id))
        if (ws.alive_id(c) && in_target[static_cast<size_t>(c)]) {
          touches_target = true;
          break;
        }
      if (touches_target) continue;
      std::vector<int> removed;
      ws.remove_cascade(id, removed);
      steps.push_back(CollapseStep{ws.face_of(id), ws.face_of(f)});
      if (dfs()) return true;
      steps.pop_back();
      ws.restore(removed);
      if (exhausted) return false;
    }
    if (failed.size() < kMaxTable) failed.insert(ws.alive_words());
    return false;
  }
};

}  // namespace

namespace {

CollapseSearchResult run_search(SearchCtx& ctx,
                                const std::optional<std::set<CollapseKind>>& kind_filter,
                                std::uint64_t budget) {
  CollapseSearchResult res;
  ctx.kinds = kind_filter ? &*kind_filter : nullptr;
  ctx.budget = budget;
  bool found = ctx.dfs();
  res.nodes = ctx.nodes;
  if (found) {
    res.status = SearchStatus::Found;
    res.certificate.steps = std::move(ctx.steps);
    res.certificate.kind_filter = kind_filter;
  } else if (ctx.exhausted) {
    res.status = SearchStatus::Exhausted;
  } else {
    res.status = SearchStatus::NoCollapse;
  }
  return res;
}

}  // namespace

CollapseSearchResult search_collapse(const SimplicialComplex& K, const SimplicialComplex& target,
                                     const std::optional<std::set<CollapseKind>>& kind_filter,
                                     std::uint64_t budget) {
  CollapseSearchResult res;
  if (K.empty()) {
    res.status = target.empty() ? SearchStatus::Found : SearchStatus::NoCollapse;
    return res;
  }
  SearchCtx ctx(K);
  ctx.in_target.assign(ctx.ws.total_faces(), 0);
  for (const auto& t : target.faces()) {
    int id = ctx.ws.id_of(t);
    if (id < 0)
      throw InvalidInput("search_collapse: target face " + to_string(t) + " not in K");
    ctx.in_target[static_cast<size_t>(id)] = 1;
    ++ctx.target_count;
  }
  return run_search(ctx, kind_filter, budget);
}

CollapseSearchResult search_collapse_to_point(const SimplicialComplex& K,
                                              const std::optional<std::set<CollapseKind>>& kind_filter,
                                              std::uint64_t budget) {
  CollapseSearchResult res;
  if (K.empty()) {
    res.status = SearchStatus::NoCollapse;
    return res;
  }
  SearchCtx ctx(K);
  ctx.in_target.assign(ctx.ws.total_faces(), 0);
  ctx.target_count = 1;  // success when exactly one face (necessarily a vertex) remains
  return run_search(ctx, kind_filter, budget);
}

// ---------------------------------------------------------------------------
// disk_to_tree
// ---------------------------------------------------------------------------

namespace {

using FaceSet = std::set<Simplex, FaceLess>;

// Facets (triangles + isolated-ish edges) given as explicit sets of faces in
// each recursion; small inputs, so plain complexes are fine here.

// Boundary edges of a 2-complex: edges in exactly one triangle.
std::vector<Simplex> boundary_edges(const SimplicialComplex& D) {
  std::vector<Simplex> out;
  for (const auto& e : D.faces_of_dim(1)) {
    int cnt = 0;
    for (const auto& F : D.facets_containing(e))
      if (dim_of(F) == 2) ++cnt;
    if (cnt == 1) out.push_back(e);
  }
  return out;
}

bool tree_contains_edge(const std::vector<Simplex>& T, const Simplex& e) {
  return std::find(T.begin(), T.end(), e) != T.end();
}

bool tree_contains_vertex(const std::vector<Simplex>& T, const Vertex& v) {
  for (const auto& e : T)
    if (std::find(e.begin(), e.end(), v) != e.end()) return true;
  return false;
}

// Split a wedge complex at cut vertex w into its two pieces.
std::vector<SimplicialComplex> wedge_split(const SimplicialComplex& D, const Vertex& w) {
  const auto& fs = D.facets();
  std::vector<int> comp(fs.size(), -1);
  // Union facets sharing any vertex other than w.
  std::function<void(size_t, int)> paint = [&](size_t i, int c) {
    comp[i] = c;
    for (size_t j = 0; j < fs.size(); ++j) {
      if (comp[j] != -1) continue;
      auto shared = simplex_intersection(fs[i], fs[j]);
      bool nontrivial = false;
      for (const auto& v : shared)
        if (v != w) nontrivial = true;
      if (nontrivial) paint(j, c);
    }
  };
  int c = 0;
  for (size_t i = 0; i < fs.size(); ++i)
    if (comp[i] == -1) paint(i, c++);
  std::vector<SimplicialComplex> parts;
  for (int k = 0; k < c; ++k) {
    std::vector<Simplex> part;
    for (size_t i = 0; i < fs.size(); ++i)
      if (comp[i] == k) part.push_back(fs[i]);
    parts.push_back(SimplicialComplex::from_facets(part));
  }
  return parts;
}

void disk_to_tree_rec(const SimplicialComplex& D, const std::vector<Simplex>& T,
                      std::vector<CollapseStep>& out) {
  auto triangles = D.faces_of_dim(2);
  if (triangles.empty()) {
    // D is an edge (or tree); in the recursion this only happens when D == T.
    return;
  }
  if (triangles.size() == 1) {
    // Base case: one triangle abc; T is one or two of its edges.
    const Simplex& F = triangles[0];
    std::vector<Simplex> tin;
    for (const auto& e : T)
      if (is_face_of(e, F)) tin.push_back(e);
    if (tin.size() == 1) {
      // (2,0) collapse at the vertex opposite to the tree edge.
      auto rest = simplex_difference(F, tin[0]);
      out.push_back(CollapseStep{{rest[0]}, F});
    } else if (tin.size() == 2) {
      // (2,1) collapse through the remaining edge.
      for (const auto& e : all_subfaces(F))
        if (e.size() == 2 && !tree_contains_edge(tin, e)) {
          out.push_back(CollapseStep{e, F});
          break;
        }
    } else {
      throw InvalidInput("disk_to_tree: tree does not fit the last triangle");
    }
    return;
  }

  // Preferred: a disk-preserving (2,0) or (2,1) collapse avoiding T.
  // (2,0): boundary vertex in exactly one triangle, not a tree vertex.
  // (2,1): boundary edge not in T. Try in (dim, lex) order of the free face.
  CollapseWorkspace probe(D);
  for (const auto& [sigma, F] : probe.free_pairs()) {
    if (dim_of(F) != 2) continue;
    if (dim_of(sigma) == 0 && tree_contains_vertex(T, sigma[0])) continue;
    if (dim_of(sigma) == 1 && tree_contains_edge(T, sigma)) continue;
    // Tentatively apply and test diskness + tree survival.
    CollapseWorkspace ws(D);
    ws.collapse_through(sigma);
    SimplicialComplex D2 = ws.current();
    bool tree_ok = true;
    for (const auto& e : T)
      if (!D2.contains(e)) tree_ok = false;
    if (!tree_ok) continue;
    if (!is_disk(D2)) continue;
    out.push_back(CollapseStep{sigma, F});
    disk_to_tree_rec(D2, T, out);
    return;
  }

  // Split case: boundary edge eps = uv not in T; its triangle uvw has w on
  // the boundary; the (2,1) collapse yields a wedge at w.
  for (const auto& eps : boundary_edges(D)) {
    if (tree_contains_edge(T, eps)) continue;
    Simplex F;
    for (const auto& t : D.facets_containing(eps))
      if (dim_of(t) == 2) F = t;
    CollapseWorkspace ws(D);
    ws.collapse_through(eps);
    SimplicialComplex D2 = ws.current();
    Vertex w = simplex_difference(F, eps)[0];
    out.push_back(CollapseStep{eps, F});
    auto parts = wedge_split(D2, w);
    if (parts.size() < 2)
      throw InvalidInput("disk_to_tree: split did not produce a wedge (input not a disk?)");
    for (const auto& part : parts) {
      std::vector<Simplex> Tp;
      for (const auto& e : T)
        if (part.contains(e)) Tp.push_back(e);
      if (part.dimension() < 2) {
        // An edge piece: must coincide with its tree part (uw in the proof).
        continue;
      }
      disk_to_tree_rec(part, Tp, out);
    }
    return;
  }
  throw InvalidInput("disk_to_tree: no admissible collapse found (input not a disk?)");
}

}  // namespace

CollapseCertificate disk_to_tree(const SimplicialComplex& D, const std::vector<Simplex>& tree_edges) {
  if (!is_disk(D) || D.dimension() != 2)
    throw InvalidInput("disk_to_tree: D is not a triangulated 2-disk");
  if (tree_edges.empty()) throw InvalidInput("disk_to_tree: tree needs >= 1 edge");
  // Validate tree: edges of D, connected, acyclic.
  std::set<Vertex> tv;
  for (const auto& e : tree_edges) {
    if (dim_of(e) != 1 || !D.contains(e))
      throw InvalidInput("disk_to_tree: invalid tree edge " + to_string(e));
    tv.insert(e.begin(), e.end());
  }
  std::set<Simplex, FaceLess> uniq(tree_edges.begin(), tree_edges.end());
  if (uniq.size() != tree_edges.size() || tv.size() != tree_edges.size() + 1)
    throw InvalidInput("disk_to_tree: edge set is not a tree");
  SimplicialComplex Tc = SimplicialComplex::from_facets(
      std::vector<Simplex>(tree_edges.begin(), tree_edges.end()));
  if (Tc.connected_components() != 1)
    throw InvalidInput("disk_to_tree: tree not connected");

  CollapseCertificate cert;
  cert.kind_filter = std::set<CollapseKind>{{2, 0}, {2, 1}};
  disk_to_tree_rec(D, std::vector<Simplex>(uniq.begin(), uniq.end()), cert.steps);
  return cert;
}

// ---------------------------------------------------------------------------
// certificate text form
// ---------------------------------------------------------------------------

std::string write_collapse_certificate(const CollapseCertificate& cert) {
  std::ostringstream out;
  if (cert.kind_filter) {
    out << "kinds:";
    bool first = true;
    for (const auto& [i, j] : *cert.kind_filter) {
      out << (first ? " " : ",") << "(" << i << "," << j << ")";
      first = false;
    }
    out << "\n";
  }
  for (const auto& step : cert.steps)
    out << "C " << to_string(step.free_face) << " | " << to_string(step.containing_facet) << "\n";
  return out.str();
}

CollapseCertificate parse_collapse_certificate(const std::string& text) {
  CollapseCertificate cert;
  std::istringstream in(text);
  std::string line;
  bool saw_step = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("kinds:", 0) == 0) {
      if (saw_step) throw InvalidInput("parse_collapse_certificate: kinds header after steps");
      std::set<CollapseKind> kinds;
      std::string rest = line.substr(6);
      for (char& c : rest)
        if (c == '(' || c == ')' || c == ',') c = ' ';
      std::istringstream ks(rest);
      int i = 0, j = 0;
      while (ks >> i >> j) kinds.insert({i, j});
      if (kinds.empty()) throw InvalidInput("parse_collapse_certificate: empty kinds header");
      cert.kind_filter = std::move(kinds);
      continue;
    }
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag != "C") throw InvalidInput("parse_collapse_certificate: bad line: " + line);
    std::vector<Vertex> free_verts, facet_verts;
    std::string tok;
    bool after_bar = false;
    while (ls >> tok) {
      if (tok == "|") {
        after_bar = true;
        continue;
      }
      (after_bar ? facet_verts : free_verts).push_back(tok);
    }
    if (free_verts.empty() || facet_verts.empty() || !after_bar)
      throw InvalidInput("parse_collapse_certificate: bad line: " + line);
    cert.steps.push_back(CollapseStep{make_simplex(free_verts), make_simplex(facet_verts)});
    saw_step = true;
  }
  return cert;
}

}  // namespace shard
