#include "shard/complex.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <unordered_map>

namespace shard {

std::vector<Simplex> all_subfaces(const Simplex& s) {
  std::vector<Simplex> out;
  const size_t n = s.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Simplex sub;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(s[i]);
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), FaceLess{});
  return out;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Simplex> facets) {
  if (facets.empty()) throw EmptyComplex("from_facets: empty facet list");
  for (auto& f : facets) f = make_simplex(f);
  std::sort(facets.begin(), facets.end(), FaceLess{});
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  // Drop non-maximal entries. Sorted by size, so only later (larger) entries
  // can absorb earlier ones.
  std::vector<Simplex> maximal;
  for (size_t i = 0; i < facets.size(); ++i) {
    bool absorbed = false;
    for (size_t j = i + 1; j < facets.size() && !absorbed; ++j)
      if (facets[j].size() > facets[i].size() && is_face_of(facets[i], facets[j]))
        absorbed = true;
    if (!absorbed) maximal.push_back(facets[i]);
  }
  SimplicialComplex K;
  K.facets_ = std::move(maximal);
  return K;
}

const std::set<Simplex, FaceLess>& SimplicialComplex::face_set() const {
  if (!face_set_cache_) {
    auto fs = std::make_shared<std::set<Simplex, FaceLess>>();
    for (const auto& f : facets_)
      for (auto& sub : all_subfaces(f)) fs->insert(std::move(sub));
    face_set_cache_ = fs;
  }
  return *face_set_cache_;
}

const std::vector<Simplex>& SimplicialComplex::faces() const {
  if (!face_cache_) {
    const auto& fs = face_set();
    auto v = std::make_shared<std::vector<Simplex>>(fs.begin(), fs.end());
    face_cache_ = v;
  }
  return *face_cache_;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
  std::set<Vertex> vs;
  for (const auto& f : facets_) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (face_set_cache_) return face_set_cache_->count(s) > 0;
  for (const auto& f : facets_)
    if (is_face_of(s, f)) return true;
  return false;
}

bool SimplicialComplex::is_facet(const Simplex& s) const {
  return std::binary_search(facets_.begin(), facets_.end(), s, FaceLess{});
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : facets_) d = std::max(d, dim_of(f));
  return d;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  const int d = dimension();
  return std::all_of(facets_.begin(), facets_.end(),
                     [d](const Simplex& f) { return dim_of(f) == d; });
}

std::vector<Simplex> SimplicialComplex::faces_of_dim(int d) const {
  std::vector<Simplex> out;
  for (const auto& f : faces())
    if (dim_of(f) == d) out.push_back(f);
  return out;
}

std::vector<long> SimplicialComplex::f_vector() const {
  std::vector<long> fv(static_cast<size_t>(dimension() + 1), 0);
  for (const auto& f : faces()) fv[static_cast<size_t>(dim_of(f))]++;
  return fv;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0, sign = 1;
  for (long fi : f_vector()) {
    chi += sign * fi;
    sign = -sign;
  }
  return chi;
}

int SimplicialComplex::connected_components() const {
  auto vs = vertices();
  if (vs.empty()) return 0;
  std::unordered_map<Vertex, int> idx;
  for (size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
  std::vector<int> parent(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : facets_)
    for (size_t i = 1; i < f.size(); ++i) {
      int a = find(idx[f[0]]), b = find(idx[f[i]]);
      if (a != b) parent[a] = b;
    }
  std::set<int> roots;
  for (size_t i = 0; i < vs.size(); ++i) roots.insert(find(static_cast<int>(i)));
  return static_cast<int>(roots.size());
}

bool SimplicialComplex::is_pseudomanifold() const {
  if (!is_pure()) throw NotPure("is_pseudomanifold: complex not pure");
  const int d = dimension();
  if (d <= 0) return true;
  std::map<Simplex, int, FaceLess> count;
  for (const auto& F : facets_) {
    // (d-1)-subfaces of F: drop one vertex.
    for (size_t i = 0; i < F.size(); ++i) {
      Simplex ridge;
      ridge.reserve(F.size() - 1);
      for (size_t j = 0; j < F.size(); ++j)
        if (j != i) ridge.push_back(F[j]);
      count[ridge]++;
    }
  }
  for (const auto& [ridge, c] : count)
    if (c > 2) return false;
  return true;
}

SimplicialComplex SimplicialComplex::boundary() const {
  if (!is_pseudomanifold())
    throw NotPseudomanifold("boundary: complex is not a pseudomanifold");
  const int d = dimension();
  if (d <= 0) return SimplicialComplex();
  std::map<Simplex, int, FaceLess> count;
  for (const auto& F : facets_)
    for (size_t i = 0; i < F.size(); ++i) {
      Simplex ridge;
      for (size_t j = 0; j < F.size(); ++j)
        if (j != i) ridge.push_back(F[j]);
      count[ridge]++;
    }
  std::vector<Simplex> bd;
  for (const auto& [ridge, c] : count)
    if (c == 1) bd.push_back(ridge);
  if (bd.empty()) return SimplicialComplex();
  return from_facets(bd);
}

std::vector<Simplex> SimplicialComplex::facets_containing(const Simplex& s) const {
  std::vector<Simplex> out;
  for (const auto& f : facets_)
    if (is_face_of(s, f)) out.push_back(f);
  return out;
}

std::vector<Simplex> SimplicialComplex::cofaces_of(const Simplex& s) const {
  std::vector<Simplex> out;
  for (const auto& f : faces())
    if (f.size() > s.size() && is_face_of(s, f)) out.push_back(f);
  return out;
}

SimplicialComplex SimplicialComplex::generated_by(const std::vector<Simplex>& thetas) const {
  for (const auto& t : thetas)
    if (!contains(t)) throw NotAFace("generated_by: " + to_string(t) + " is not a face");
  if (thetas.empty()) return SimplicialComplex();
  return from_facets(thetas);
}

SimplicialComplex SimplicialComplex::star(const Simplex& s) const {
  if (!contains(s)) throw NotAFace("star: " + to_string(s) + " is not a face");
  auto fs = facets_containing(s);
  if (fs.empty()) return SimplicialComplex();
  return from_facets(fs);
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
  if (!contains(s)) throw NotAFace("link: " + to_string(s) + " is not a face");
  std::vector<Simplex> lk;
  for (const auto& f : facets_containing(s)) {
    auto rest = simplex_difference(f, s);
    if (!rest.empty()) lk.push_back(rest);
  }
  if (lk.empty()) return SimplicialComplex();
  return from_facets(lk);
}

SimplicialComplex SimplicialComplex::cone(const Vertex& apex, const SimplicialComplex& K) {
  for (const auto& v : K.vertices())
    if (v == apex) throw DuplicateVertex("cone: apex " + apex + " already a vertex");
  if (K.empty()) return from_facets({{apex}});
  std::vector<Simplex> fs;
  for (const auto& f : K.facets()) fs.push_back(simplex_union(f, {apex}));
  return from_facets(fs);
}

SimplicialComplex SimplicialComplex::relabel(const std::map<Vertex, Vertex>& m) const {
  std::vector<Simplex> fs;
  for (const auto& f : facets_) {
    std::vector<Vertex> nf;
    for (const auto& v : f) {
      auto it = m.find(v);
      nf.push_back(it == m.end() ? v : it->second);
    }
    auto s = make_simplex(nf);
    if (s.size() != f.size())
      throw DuplicateVertex("relabel: map collapses simplex " + to_string(f));
    fs.push_back(std::move(s));
  }
  if (fs.empty()) return SimplicialComplex();
  return from_facets(fs);
}

SimplicialComplex::GlueResult SimplicialComplex::glue(
    const SimplicialComplex& K1, const SimplicialComplex& K2,
    const std::map<Vertex, Vertex>& identify,
    const std::optional<std::vector<Simplex>>& expected_shared) {
  // Injectivity of the identification on its domain.
  std::set<Vertex> range;
  for (const auto& [from, to] : identify)
    if (!range.insert(to).second)
      throw GluingConflict("glue: identification not injective at " + to);
  const SimplicialComplex K2r = K2.relabel(identify);

  // Shared subcomplex.
  std::vector<Simplex> shared;
  for (const auto& f : K2r.faces())
    if (K1.contains(f)) shared.push_back(f);

  if (expected_shared.has_value()) {
    std::set<Simplex, FaceLess> allowed;
    for (const auto& e : *expected_shared)
      for (auto& sub : all_subfaces(make_simplex(e))) allowed.insert(std::move(sub));
    for (const auto& s : shared)
      if (!allowed.count(s))
        throw GluingConflict("glue: accidental shared simplex " + to_string(s));
  }

  std::vector<Simplex> fs = K1.facets();
  const auto& f2 = K2r.facets();
  fs.insert(fs.end(), f2.begin(), f2.end());
  GlueResult out;
  out.complex = from_facets(fs);
  if (!shared.empty()) out.intersection = from_facets(shared);
  return out;
}

}  // namespace shard
