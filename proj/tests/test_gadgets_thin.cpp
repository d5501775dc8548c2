#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "shard/gadgets_thin.hpp"

using namespace shard;

namespace {

long euler(const SimplicialComplex& K) {
  long chi = 0;
  for (int d = 0; d <= K.dimension(); ++d) {
    long n = static_cast<long>(K.faces_of_dim(d).size());
    chi += (d % 2 ? -n : n);
  }
  return chi;
}

/// Independent oracle: first Betti number over GF(2) of a 2-complex,
/// b1 = #edges - rank(d1) - rank(d2), via bitset Gaussian elimination.
long betti1(const SimplicialComplex& K) {
  auto verts = K.faces_of_dim(0);
  auto edges = K.faces_of_dim(1);
  auto tris = K.faces_of_dim(2);
  std::map<Simplex, int> vid, eid;
  for (size_t i = 0; i < verts.size(); ++i) vid[verts[i]] = static_cast<int>(i);
  for (size_t i = 0; i < edges.size(); ++i) eid[edges[i]] = static_cast<int>(i);
  auto rank = [](std::vector<std::vector<uint64_t>>& rows, size_t ncols) {
    long r = 0;
    size_t lead = 0;
    for (size_t c = 0; c < ncols && lead < rows.size(); ++c) {
      size_t w = c / 64, b = c % 64, piv = SIZE_MAX;
      for (size_t i = lead; i < rows.size(); ++i)
        if (rows[i][w] >> b & 1) { piv = i; break; }
      if (piv == SIZE_MAX) continue;
      std::swap(rows[lead], rows[piv]);
      for (size_t i = 0; i < rows.size(); ++i)
        if (i != lead && (rows[i][w] >> b & 1))
          for (size_t k = 0; k < rows[i].size(); ++k) rows[i][k] ^= rows[lead][k];
      ++lead;
      ++r;
    }
    return r;
  };
  size_t nv = verts.size(), ne = edges.size(), nt = tris.size();
  std::vector<std::vector<uint64_t>> d1(ne, std::vector<uint64_t>((nv + 63) / 64, 0));
  for (size_t i = 0; i < ne; ++i)
    for (const auto& v : edges[i]) {
      int j = vid[make_simplex({v})];
      d1[i][j / 64] |= 1ull << (j % 64);
    }
  std::vector<std::vector<uint64_t>> d2(nt, std::vector<uint64_t>((ne + 63) / 64, 0));
  for (size_t i = 0; i < nt; ++i) {
    const auto& t = tris[i];
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        int j = eid[make_simplex({t[a], t[b]})];
        d2[i][j / 64] |= 1ull << (j % 64);
      }
  }
  return static_cast<long>(ne) - rank(d1, nv) - rank(d2, ne);
}

/// The fencing audit for a marked 1-complex M drawn on a triangulated
/// surface: every triangle must meet M in either no edge and at most one
/// vertex, or exactly one edge together with just its two endpoints. This is
/// what lets the collapse front sweep past M without ever freeing or
/// swallowing a marked face.
long fencing_violations(const SimplicialComplex& K, const std::vector<Simplex>& marked) {
  std::set<Simplex> me;
  std::set<Vertex> mv;
  for (const auto& s : marked) {
    if (s.size() == 2) me.insert(s);
    for (const auto& v : s) mv.insert(v);
  }
  long bad = 0;
  for (const auto& t : K.faces_of_dim(2)) {
    int medges = 0, mverts = 0;
    for (int a = 0; a < 3; ++a) {
      if (mv.count(t[a])) ++mverts;
      for (int c = a + 1; c < 3; ++c)
        if (me.count(make_simplex({t[a], t[c]}))) ++medges;
    }
    bool ok = (medges == 0 && mverts <= 1) || (medges == 1 && mverts == 2);
    if (!ok) ++bad;
  }
  return bad;
}

/// True when the marked edges form a single tree (acyclic and connected).
bool is_tree(const std::vector<Simplex>& edges) {
  std::map<Vertex, Vertex> parent;
  std::function<Vertex(const Vertex&)> find = [&](const Vertex& x) {
    Vertex r = x;
    while (parent.at(r) != r) r = parent.at(r);
    return r;
  };
  std::set<Vertex> verts;
  for (const auto& e : edges)
    for (const auto& v : e)
      if (verts.insert(v).second) parent[v] = v;
  for (const auto& e : edges) {
    if (e.size() != 2) return false;
    Vertex a = find(e[0]), b = find(e[1]);
    if (a == b) return false;  // cycle
    parent[a] = b;
  }
  std::set<Vertex> roots;
  for (const auto& v : verts) roots.insert(find(v));
  return roots.size() == 1;
}

std::vector<Simplex> mark(const GadgetBundle& b, const std::string& name) {
  auto it = b.marks.find(name);
  REQUIRE(it != b.marks.end());
  return it->second;
}

}  // namespace

TEST_CASE("bipyramid: face census") {
  auto b = bipyramid();
  // Join of the triangle boundary uvw with the edge a+a-: faces are exactly
  // the unions s ∪ t, s a proper subset of {u,v,w}, t ⊆ {a+,a-}.
  CHECK(b.complex.faces_of_dim(0).size() == 5);
  CHECK(b.complex.faces_of_dim(1).size() == 10);  // all pairs
  CHECK(b.complex.faces_of_dim(2).size() == 9);   // all triples but uvw
  CHECK(b.complex.faces_of_dim(3).size() == 3);
  CHECK(!b.complex.contains(sx({"u", "v", "w"})));
  CHECK(euler(b.complex) == 1);
}

TEST_CASE("bipyramid: free profile and one-sided collapses") {
  auto b = bipyramid();
  auto report = check_free_profile(b);
  CHECK(report.ok);
  CHECK(report.free_faces.size() == 9);
  // Collapsing away either apex side leaves the other side plus the marked
  // v-edge of the surviving apex.
  for (const char* residue : {"residue_a+", "residue_a-"}) {
    auto cert = collapse_to_marked(b, {residue});
    CHECK(!cert.steps.empty());
  }
}

TEST_CASE("bipyramid: constraint edges are the shared boundary") {
  auto b = bipyramid();
  auto constraint = mark(b, "constraint");
  CHECK(constraint.size() == 5);
  for (const auto& e : constraint) CHECK(b.complex.contains(e));
}

TEST_CASE("one-free-edge house: exact profile, Euler characteristic, fencing") {
  for (auto [k, m] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {3, 0}, {1, 1}, {1, 2}}) {
    CAPTURE(k);
    CAPTURE(m);
    auto b = thin_1house(k, m);
    auto report = check_free_profile(b);
    CHECK(report.ok);
    CHECK(report.free_faces.size() == 1);
    CHECK(mark(b, "free").size() == 1);
    CHECK(euler(b.complex) == 1);
    CHECK(betti1(b.complex) == 0);
    // The tree and every circle must be fenced in the wall triangulation.
    std::vector<Simplex> drawn = mark(b, "central_tree");
    for (int i = 0; i < m; ++i) {
      auto c = mark(b, "circle" + std::to_string(i));
      drawn.insert(drawn.end(), c.begin(), c.end());
    }
    CHECK(fencing_violations(b.complex, drawn) == 0);
    CHECK(is_tree(mark(b, "central_tree")));
  }
}

TEST_CASE("one-free-edge house: collapses onto its marked trees") {
  auto b = thin_1house(3, 0);
  CHECK(!collapse_to_marked(b, {"central_tree"}).steps.empty());
  auto b2 = thin_1house(1, 2);
  CHECK(!collapse_to_marked(b2, {"central_tree"}).steps.empty());
  // A crossing-circle-compatible tree: the central tree together with each
  // circle's segment inside the lower wall (the floor, z = 0). Each segment
  // meets the central path in one vertex, so the union is still a tree.
  std::vector<Simplex> gens = mark(b2, "central_tree");
  for (const char* c : {"circle0", "circle1"})
    for (const auto& e : mark(b2, c)) {
      auto on_floor = [](const Vertex& v) { return v.size() >= 2 && v.substr(v.size() - 2) == ".0"; };
      if (on_floor(e[0]) && on_floor(e[1])) gens.push_back(e);
    }
  CHECK(is_tree(gens));
  auto target = b2.complex.generated_by(gens);
  auto result = search_collapse(b2.complex, target, std::nullopt, 50'000'000);
  CHECK(result.status == SearchStatus::Found);
}

TEST_CASE("one-free-edge house: parameter validation") {
  CHECK_THROWS_AS(thin_1house(0, 0), InvalidParams);
  CHECK_THROWS_AS(thin_1house(1, -1), InvalidParams);
  // Branches and circles are mutually exclusive beyond the base values.
  CHECK_THROWS_AS(thin_1house(2, 1), InvalidParams);
}

TEST_CASE("turbine: free faces are exactly the three blade edges") {
  auto b = thin_turbine();
  auto report = check_free_profile(b);
  CHECK(report.ok);
  CHECK(report.free_faces.size() == 3);
  std::set<Simplex> expected;
  for (const char* f : {"f1", "f2", "f3"}) expected.insert(mark(b, f).at(0));
  std::set<Simplex> actual;
  for (const auto& [face, facet] : report.free_faces) actual.insert(face);
  CHECK(actual == expected);
}

TEST_CASE("turbine: contractible and fenced") {
  auto b = thin_turbine();
  CHECK(euler(b.complex) == 1);
  CHECK(betti1(b.complex) == 0);
  CHECK(fencing_violations(b.complex, mark(b, "central_tree")) == 0);
  CHECK(is_tree(mark(b, "central_tree")));
  // The pendant edge and each path hang off the barycenter c.
  const Vertex c = b.meta.at("c");
  CHECK(mark(b, "e").at(0).at(0) <= c);
  for (const char* pi : {"pi1", "pi2", "pi3"}) {
    auto path = mark(b, pi);
    CHECK(path.size() == 6);
    auto touches_c = [&](const Simplex& s) { return std::count(s.begin(), s.end(), c) == 1; };
    CHECK(std::count_if(path.begin(), path.end(), touches_c) == 1);
  }
}

TEST_CASE("turbine: collapses onto the tree plus any proper subset of f's") {
  auto b = thin_turbine();
  const std::vector<std::vector<std::string>> subsets = {
      {}, {"f1"}, {"f2"}, {"f3"}, {"f1", "f2"}, {"f1", "f3"}, {"f2", "f3"}};
  for (const auto& subset : subsets) {
    std::vector<std::string> targets = {"e", "pi1", "pi2", "pi3"};
    targets.insert(targets.end(), subset.begin(), subset.end());
    CHECK(!collapse_to_marked(b, targets).steps.empty());
  }
}

TEST_CASE("turbine: cannot collapse while keeping all three f's") {
  auto b = thin_turbine();
  // Every free face lies in the target, so no first step exists: the search
  // refutes the collapse immediately rather than exhausting its budget.
  auto target = b.complex.generated_by(mark(b, "central_tree"));
  auto result = search_collapse(b.complex, target, std::nullopt, 1000);
  CHECK(result.status == SearchStatus::NoCollapse);
}
