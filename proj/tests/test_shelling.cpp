#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "shard/shelling.hpp"

using namespace shard;

namespace {

SimplicialComplex boundary_of_tetra() {
  return SimplicialComplex::from_facets(
      {sx({"a", "b", "c"}), sx({"a", "b", "d"}), sx({"a", "c", "d"}), sx({"b", "c", "d"})});
}

SimplicialComplex fan(int n) {
  std::vector<Simplex> tris;
  for (int i = 1; i < n; ++i)
    tris.push_back(sx({"o", "v" + std::to_string(i), "v" + std::to_string(i + 1)}));
  return SimplicialComplex::from_facets(tris);
}

/// Three tetrahedra around the common edge pq: a triangulated 3-ball.
SimplicialComplex banana() {
  return SimplicialComplex::from_facets(
      {sx({"p", "q", "a", "b"}), sx({"p", "q", "b", "c"}), sx({"p", "q", "a", "c"})});
}

/// Triangular prism between triangles a1b1c1 and a2b2c2, split into three
/// tetrahedra in the standard staircase pattern.
std::vector<Simplex> prism_tetras(const std::string& s1, const std::string& s2) {
  auto v = [&](const char* x, const std::string& s) { return std::string(x) + s; };
  return {make_simplex({v("a", s1), v("b", s1), v("c", s1), v("a", s2)}),
          make_simplex({v("b", s1), v("c", s1), v("a", s2), v("b", s2)}),
          make_simplex({v("c", s1), v("a", s2), v("b", s2), v("c", s2)})};
}

/// Independent up-shelling oracle straight from the definition: for each
/// i >= 2, K[F_1,...,F_{i-1}] ∩ K[F_i] must be pure of dimension d-1.
bool oracle_up_shelling(const SimplicialComplex& K, const std::vector<Simplex>& order) {
  if (order.size() <= 1) return true;
  const int d = K.dimension();
  for (std::size_t i = 1; i < order.size(); ++i) {
    auto prefix = K.generated_by(std::vector<Simplex>(order.begin(), order.begin() + static_cast<long>(i)));
    std::vector<Simplex> shared;
    for (const auto& s : all_subfaces(order[i]))
      if (prefix.contains(s)) shared.push_back(s);
    if (shared.empty()) return false;
    auto cap = SimplicialComplex::from_facets(shared);
    if (cap.dimension() != d - 1 || !cap.is_pure()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("every order of the tetrahedron boundary is a shelling") {
  auto S = boundary_of_tetra();
  auto perm = S.facets();
  std::sort(perm.begin(), perm.end());
  do {
    ShellingCertificate cert;
    cert.ordered_facets.assign(perm.begin(), perm.end() - 1);
    cert.target = S.generated_by({perm.back()});
    CHECK(verify_shelling_down(S, cert).ok);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("removing either of two glued tetrahedra first is a shelling step") {
  auto K = SimplicialComplex::from_facets({sx({"a", "b", "c", "d"}), sx({"b", "c", "d", "e"})});
  for (const auto& F : K.facets()) {
    ShellingCertificate cert;
    cert.ordered_facets = {F};
    std::vector<Simplex> rest;
    for (const auto& G : K.facets())
      if (G != F) rest.push_back(G);
    cert.target = SimplicialComplex::from_facets(rest);
    CHECK(verify_shelling_down(K, cert).ok);
  }
}

TEST_CASE("a removal leaving only a vertex shared is rejected") {
  auto K = SimplicialComplex::from_facets({sx({"a", "b", "c"}), sx({"c", "d", "e"})});
  ShellingCertificate cert;
  cert.ordered_facets = {sx({"a", "b", "c"})};
  cert.target = K.generated_by({sx({"c", "d", "e"})});
  auto rep = verify_shelling_down(K, cert);
  CHECK(!rep.ok);
  CHECK(rep.failing_index == 0);
}

TEST_CASE("verify_shelling_down input validation") {
  auto S = boundary_of_tetra();
  CHECK_THROWS_AS(
      verify_shelling_down(SimplicialComplex::from_facets({sx({"a", "b", "c"}), sx({"c", "d"})}),
                           ShellingCertificate{}),
      NotPure);
  ShellingCertificate all;
  all.ordered_facets = S.facets();
  CHECK(!verify_shelling_down(S, all).ok);  // must leave at least one facet
}

TEST_CASE("up-shelling basics") {
  auto C = SimplicialComplex::from_facets({sx({"a", "b"}), sx({"b", "c"}), sx({"a", "c"})});
  CHECK(verify_shelling_up(C, {sx({"a", "b"}), sx({"b", "c"}), sx({"a", "c"})}));
  auto single = SimplicialComplex::from_facets({sx({"a", "b", "c"})});
  CHECK(verify_shelling_up(single, {sx({"a", "b", "c"})}));
  CHECK_THROWS_AS(verify_shelling_up(C, {sx({"a", "b"})}), IncompleteOrder);
  CHECK_THROWS_AS(verify_shelling_up(C, {sx({"a", "b"}), sx({"a", "b"}), sx({"b", "c"})}),
                  IncompleteOrder);
}

TEST_CASE("duality matches the definitional up-shelling oracle") {
  std::vector<SimplicialComplex> cases = {
      boundary_of_tetra(),
      fan(5),
      SimplicialComplex::from_facets({sx({"a", "b", "c"}), sx({"c", "d", "e"})}),
      SimplicialComplex::from_facets({sx({"a", "b"}), sx({"b", "c"}), sx({"a", "c"})}),
      banana(),
  };
  for (const auto& K : cases) {
    auto perm = K.facets();
    std::sort(perm.begin(), perm.end());
    do {
      CHECK(verify_shelling_up(K, perm) == oracle_up_shelling(K, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("is_disk recognizes 2-disks") {
  CHECK(is_disk(fan(2)));
  CHECK(is_disk(fan(7)));
  CHECK(!is_disk(boundary_of_tetra()));  // sphere: no boundary
  CHECK(!is_disk(SimplicialComplex::from_facets({sx({"a", "b", "c"}), sx({"c", "d"})})));  // not pure
  // Two triangles pinched at a vertex: fails the link condition.
  CHECK(!is_disk(SimplicialComplex::from_facets({sx({"a", "b", "c"}), sx({"c", "d", "e"})})));
  // Three triangles around one edge: an edge in 3 triangles.
  CHECK(!is_disk(SimplicialComplex::from_facets(
      {sx({"a", "b", "x"}), sx({"a", "b", "y"}), sx({"a", "b", "z"})})));
  // A full sphere minus one triangle is a disk.
  CHECK(is_disk(SimplicialComplex::from_facets(
      {sx({"a", "b", "d"}), sx({"a", "c", "d"}), sx({"b", "c", "d"})})));
}

TEST_CASE("is_disk in dimension 1 means path") {
  CHECK(is_disk(SimplicialComplex::from_facets({sx({"a", "b"})})));
  CHECK(is_disk(SimplicialComplex::from_facets({sx({"a", "b"}), sx({"b", "c"})})));
  CHECK(!is_disk(SimplicialComplex::from_facets({sx({"a", "b"}), sx({"b", "c"}), sx({"a", "c"})})));
  CHECK(!is_disk(SimplicialComplex::from_facets({sx({"a", "b"}), sx({"c", "d"})})));
  CHECK(!is_disk(SimplicialComplex::from_facets({sx({"a"})})));  // dim 0
  CHECK(!is_disk(SimplicialComplex()));
}

TEST_CASE("free facets of small 3-balls") {
  auto solo = SimplicialComplex::from_facets({sx({"a", "b", "c", "d"})});
  CHECK(free_facets(solo).empty());  // meets its boundary in the whole sphere

  auto two = SimplicialComplex::from_facets({sx({"a", "b", "c", "d"}), sx({"b", "c", "d", "e"})});
  CHECK(free_facets(two).size() == 2);

  auto C = SimplicialComplex::cone("o", boundary_of_tetra());
  CHECK(free_facets(C).size() == 4);

  CHECK_THROWS_AS(free_facets(boundary_of_tetra()), NotPure);  // 2-dimensional
  // A closed 3-pseudomanifold: boundary of the 4-simplex.
  std::vector<Simplex> tetras;
  Simplex all = sx({"a", "b", "c", "d", "e"});
  for (const auto& s : all_subfaces(all))
    if (s.size() == 4) tetras.push_back(s);
  CHECK_THROWS_AS(free_facets(SimplicialComplex::from_facets(tetras)), NoBoundary);
}

TEST_CASE("search_shelling finds shellings and certifies them") {
  auto S = boundary_of_tetra();
  auto res = search_shelling(S, std::size_t{1}, 100000);
  REQUIRE(res.status == ShellSearchStatus::Found);
  CHECK(verify_shelling_down(S, res.certificate).ok);

  auto res2 = search_shelling(banana(), std::size_t{1}, 100000);
  REQUIRE(res2.status == ShellSearchStatus::Found);
  CHECK(verify_shelling_down(banana(), res2.certificate).ok);

  auto two = SimplicialComplex::from_facets({sx({"a", "b", "c"}), sx({"x", "y", "z"})});
  CHECK(search_shelling(two, std::size_t{1}, 100000).status == ShellSearchStatus::NotShellable);

  // Subcomplex target form.
  auto target = S.generated_by({sx({"b", "c", "d"})});
  auto res3 = search_shelling(S, target, 100000);
  REQUIRE(res3.status == ShellSearchStatus::Found);
  CHECK(res3.certificate.target == target);
  CHECK(verify_shelling_down(S, res3.certificate).ok);

  CHECK(search_shelling(S, std::size_t{1}, 0).status == ShellSearchStatus::Exhausted);
}

TEST_CASE("free-facet pruning agrees with the unpruned search on balls") {
  auto C = SimplicialComplex::cone("o", boundary_of_tetra());
  auto pruned = search_shelling(C, std::size_t{1}, 100000, true);
  auto plain = search_shelling(C, std::size_t{1}, 100000, false);
  REQUIRE(pruned.status == ShellSearchStatus::Found);
  REQUIRE(plain.status == ShellSearchStatus::Found);
  CHECK(verify_shelling_down(C, pruned.certificate).ok);
}

TEST_CASE("restricted collapses of 2-complexes become shellings") {
  auto D = fan(5);
  Simplex last = sx({"o", "v4", "v5"});
  std::set<CollapseKind> kinds{{2, 0}, {2, 1}};
  auto res = search_collapse(D, D.generated_by({last}), kinds, 1000000);
  REQUIRE(res.status == SearchStatus::Found);
  auto shelling = shelling_from_restricted_collapse(D, res.certificate, last);
  CHECK(verify_shelling_down(D, shelling).ok);
  CHECK(shelling.ordered_facets.size() == 3);

  // Trivial case: a single triangle with an empty certificate.
  auto T = SimplicialComplex::from_facets({sx({"a", "b", "c"})});
  auto trivial = shelling_from_restricted_collapse(T, CollapseCertificate{}, sx({"a", "b", "c"}));
  CHECK(trivial.ordered_facets.empty());
  CHECK(verify_shelling_down(T, trivial).ok);

  // An edge is not an acceptable final target.
  CHECK_THROWS_AS(shelling_from_restricted_collapse(T, CollapseCertificate{}, sx({"a", "b"})),
                  InvalidInput);
  // Kinds outside {(2,0),(2,1)} are rejected.
  CollapseCertificate bad;
  bad.steps = {CollapseStep{sx({"x"}), sx({"x", "y"})}};
  CHECK_THROWS_AS(shelling_from_restricted_collapse(D, bad, last), KindViolation);
}

TEST_CASE("verify_pl_shelling accepts certified ball removals") {
  auto K = SimplicialComplex::from_facets({sx({"a", "b", "c", "d"}), sx({"b", "c", "d", "e"})});
  PLShellingStep step;
  step.ball_facets = {sx({"a", "b", "c", "d"})};
  step.ball_certificate.target = SimplicialComplex::from_facets({sx({"a", "b", "c", "d"})});
  auto rep = verify_pl_shelling(K, {step}, K.generated_by({sx({"b", "c", "d", "e"})}));
  CHECK(rep.ok);

  // A multi-tetrahedron ball removed in one certified step.
  auto B = banana();
  auto extra = sx({"a", "b", "p", "x"});
  auto K2 = SimplicialComplex::from_facets({B.facets()[0], B.facets()[1], B.facets()[2], extra});
  PLShellingStep big;
  big.ball_facets = B.facets();
  auto found = search_shelling(B, std::size_t{1}, 100000);
  REQUIRE(found.status == ShellSearchStatus::Found);
  big.ball_certificate = found.certificate;
  auto rep2 = verify_pl_shelling(K2, {big}, K2.generated_by({extra}));
  CHECK(rep2.ok);
}

TEST_CASE("verify_pl_shelling rejects non-disk interfaces") {
  // Stacked prisms forming a torus-like union: the two prisms meet in both
  // end triangles, so the interface is disconnected.
  auto p1 = prism_tetras("1", "2");
  auto p2 = prism_tetras("2", "1");
  std::vector<Simplex> all = p1;
  all.insert(all.end(), p2.begin(), p2.end());
  auto K = SimplicialComplex::from_facets(all);
  PLShellingStep step;
  step.ball_facets = p1;
  auto found = search_shelling(SimplicialComplex::from_facets(p1), std::size_t{1}, 100000);
  REQUIRE(found.status == ShellSearchStatus::Found);
  step.ball_certificate = found.certificate;
  auto rep = verify_pl_shelling(K, {step}, SimplicialComplex::from_facets(p2));
  CHECK(!rep.ok);

  // A bogus ball certificate is also rejected.
  auto K2 = SimplicialComplex::from_facets({sx({"a", "b", "c", "d"}), sx({"b", "c", "d", "e"})});
  PLShellingStep bad;
  bad.ball_facets = {sx({"a", "b", "c", "d"})};
  bad.ball_certificate.target = SimplicialComplex::from_facets({sx({"x", "y", "z", "w"})});
  CHECK(!verify_pl_shelling(K2, {bad}, K2.generated_by({sx({"b", "c", "d", "e"})})).ok);
}

TEST_CASE("tetra freeness predicate matches the observation") {
  std::set<Simplex, FaceLess> apex_edges{sx({"a", "d"}), sx({"b", "d"}), sx({"c", "d"})};
  std::set<Simplex, FaceLess> all_edges = apex_edges;
  for (const auto& e : {sx({"a", "b"}), sx({"a", "c"}), sx({"b", "c"})}) all_edges.insert(e);
  std::set<Simplex, FaceLess> d_triangles{sx({"a", "b", "d"}), sx({"a", "c", "d"}),
                                          sx({"b", "c", "d"})};
  // All three apex triangles off the boundary: not free.
  CHECK(!tetra_free_predicate(all_edges, {sx({"a", "b", "c"})}));
  // Exactly one off: consistent with freeness.
  CHECK(tetra_free_predicate(all_edges,
                             {sx({"a", "b", "c"}), sx({"a", "b", "d"}), sx({"a", "c", "d"})}));
  // Everything on the boundary: the observation does not apply.
  std::set<Simplex, FaceLess> all_tris = d_triangles;
  all_tris.insert(sx({"a", "b", "c"}));
  CHECK(tetra_free_predicate(all_edges, all_tris));
  CHECK_THROWS_AS(tetra_free_predicate({sx({"a", "b"})}, {}), InvalidInput);
}

TEST_CASE("tetra freeness predicate never rules out an actual disk") {
  // Exhaust every downward-closed subcomplex of the tetrahedron boundary that
  // contains the apex edges; whenever the subcomplex is a 2-disk, the
  // predicate must report freeness as possible.
  std::vector<Simplex> tris{sx({"a", "b", "c"}), sx({"a", "b", "d"}), sx({"a", "c", "d"}),
                            sx({"b", "c", "d"})};
  std::vector<Simplex> rim{sx({"a", "b"}), sx({"a", "c"}), sx({"b", "c"})};
  int disks_seen = 0;
  for (unsigned tm = 0; tm < 16; ++tm) {
    std::set<Simplex, FaceLess> T;
    for (int i = 0; i < 4; ++i)
      if (tm & (1u << i)) T.insert(tris[static_cast<std::size_t>(i)]);
    std::set<Simplex, FaceLess> base{sx({"a", "d"}), sx({"b", "d"}), sx({"c", "d"})};
    for (const auto& t : T)
      for (const auto& s : all_subfaces(t))
        if (s.size() == 2) base.insert(s);
    for (unsigned em = 0; em < 8; ++em) {
      std::set<Simplex, FaceLess> E = base;
      for (int i = 0; i < 3; ++i)
        if (em & (1u << i)) E.insert(rim[static_cast<std::size_t>(i)]);
      std::vector<Simplex> gens(T.begin(), T.end());
      gens.insert(gens.end(), E.begin(), E.end());
      auto S = SimplicialComplex::from_facets(gens);
      if (S.dimension() == 2 && is_disk(S)) {
        ++disks_seen;
        CHECK(tetra_free_predicate(E, T));
      }
    }
  }
  CHECK(disks_seen > 0);
}

TEST_CASE("every emitted certificate re-verifies") {
  std::vector<SimplicialComplex> cases = {boundary_of_tetra(), banana(), fan(6),
                                          SimplicialComplex::cone("o", boundary_of_tetra())};
  for (const auto& K : cases) {
    auto res = search_shelling(K, std::size_t{1}, 1000000);
    REQUIRE(res.status == ShellSearchStatus::Found);
    CHECK(verify_shelling_down(K, res.certificate).ok);
  }
}

TEST_CASE("coning preserves shellability on random small 2-complexes") {
  std::mt19937 rng(20240817);
  std::vector<Vertex> pool{"a", "b", "c", "d", "e", "f"};
  int checked = 0;
  while (checked < 12) {
    std::uniform_int_distribution<int> nfac(2, 6);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::set<Simplex, FaceLess> tris;
    int want = nfac(rng);
    while (static_cast<int>(tris.size()) < want) {
      Vertex x = pool[pick(rng)], y = pool[pick(rng)], z = pool[pick(rng)];
      if (x == y || y == z || x == z) continue;
      tris.insert(make_simplex({x, y, z}));
    }
    auto K = SimplicialComplex::from_facets(std::vector<Simplex>(tris.begin(), tris.end()));
    auto base = search_shelling(K, std::size_t{1}, 2000000);
    auto coned = search_shelling(SimplicialComplex::cone("zz", K), std::size_t{1}, 2000000);
    REQUIRE(base.status != ShellSearchStatus::Exhausted);
    REQUIRE(coned.status != ShellSearchStatus::Exhausted);
    CHECK((base.status == ShellSearchStatus::Found) == (coned.status == ShellSearchStatus::Found));
    ++checked;
  }
}

TEST_CASE("shelling certificate text round trip") {
  auto S = boundary_of_tetra();
  auto res = search_shelling(S, std::size_t{1}, 100000);
  REQUIRE(res.status == ShellSearchStatus::Found);
  auto text = write_shelling_certificate(res.certificate);
  CHECK(text.rfind("S target: 1", 0) == 0);
  auto back = parse_shelling_certificate(text);
  CHECK(back.ordered_facets == res.certificate.ordered_facets);
  CHECK(back.target == res.certificate.target);
  CHECK(verify_shelling_down(S, back).ok);
  CHECK_THROWS_AS(parse_shelling_certificate("bogus\n"), InvalidInput);
}
