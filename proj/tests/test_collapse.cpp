#include "doctest.h"

#include <algorithm>
#include <set>

#include "shard/collapse.hpp"

using namespace shard;

namespace {

SimplicialComplex triangle() { return SimplicialComplex::from_facets({sx({"a", "b", "c"})}); }

SimplicialComplex boundary_of_tetra() {
  return SimplicialComplex::from_facets(
      {sx({"a", "b", "c"}), sx({"a", "b", "d"}), sx({"a", "c", "d"}), sx({"b", "c", "d"})});
}

/// Fan disk: triangles o-v1-v2, o-v2-v3, ..., around the hub o.
SimplicialComplex fan(int n) {
  std::vector<Simplex> tris;
  for (int i = 1; i < n; ++i)
    tris.push_back(sx({"o", "v" + std::to_string(i), "v" + std::to_string(i + 1)}));
  return SimplicialComplex::from_facets(tris);
}

/// Independent collapsibility oracle: naive recursion over complexes, no
/// sharing, no transposition table. Small inputs only.
bool oracle_collapsible(const SimplicialComplex& K) {
  if (K.faces().size() == 1) return true;
  for (const auto& [f, F] : free_faces(K)) {
    SimplicialComplex next = apply_step(K, CollapseStep{f, F});
    if (next.empty()) continue;
    if (oracle_collapsible(next)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("free faces of a triangle") {
  auto pairs = free_faces(triangle());
  REQUIRE(pairs.size() == 6);  // 3 vertices + 3 edges, each in the one facet
  CHECK(pairs.front().first == sx({"a"}));
  CHECK(pairs.front().second == sx({"a", "b", "c"}));
  CHECK(pairs.back().first == sx({"b", "c"}));
}

TEST_CASE("a closed surface has no free faces") {
  CHECK(free_faces(boundary_of_tetra()).empty());
}

TEST_CASE("apply_step removes the free face and its cofaces") {
  auto K = apply_step(triangle(), CollapseStep{sx({"a", "b"}), sx({"a", "b", "c"})});
  CHECK(K == SimplicialComplex::from_facets({sx({"a", "c"}), sx({"b", "c"})}));
  // (2,0): a free vertex takes its edges and triangle with it.
  auto K2 = apply_step(triangle(), CollapseStep{sx({"a"}), sx({"a", "b", "c"})});
  CHECK(K2 == SimplicialComplex::from_facets({sx({"b", "c"})}));
  CHECK_THROWS_AS(apply_step(boundary_of_tetra(), CollapseStep{sx({"a", "b"}), sx({"a", "b", "c"})}),
                  NotFree);
}

TEST_CASE("verify_certificate replays to the target") {
  CollapseCertificate cert;
  cert.steps = {CollapseStep{sx({"a", "b"}), sx({"a", "b", "c"})},
                CollapseStep{sx({"a"}), sx({"a", "c"})},
                CollapseStep{sx({"b"}), sx({"b", "c"})}};
  auto target = SimplicialComplex::from_facets({sx({"c"})});
  auto rep = verify_certificate(triangle(), cert, target);
  CHECK(rep.ok);

  // Wrong step order: the second step's face is not free yet.
  std::swap(cert.steps[0], cert.steps[1]);
  rep = verify_certificate(triangle(), cert, target);
  CHECK(!rep.ok);
  CHECK(rep.failing_index == 0);

  // Kind filter violations are caught.
  CollapseCertificate filtered;
  filtered.steps = {CollapseStep{sx({"a"}), sx({"a", "b", "c"})}};
  filtered.kind_filter = std::set<CollapseKind>{{2, 1}};
  rep = verify_certificate(triangle(), filtered, SimplicialComplex::from_facets({sx({"b", "c"})}));
  CHECK(!rep.ok);
}

TEST_CASE("search_collapse to a fixed vertex") {
  auto target = SimplicialComplex::from_facets({sx({"c"})});
  auto res = search_collapse(triangle(), target, std::nullopt, 100000);
  REQUIRE(res.status == SearchStatus::Found);
  CHECK(verify_certificate(triangle(), res.certificate, target).ok);
}

TEST_CASE("search_collapse_to_point decides collapsibility") {
  auto solid = SimplicialComplex::from_facets({sx({"a", "b", "c", "d"})});
  CHECK(search_collapse_to_point(solid, std::nullopt, 1000000).status == SearchStatus::Found);
  CHECK(search_collapse_to_point(boundary_of_tetra(), std::nullopt, 1000000).status ==
        SearchStatus::NoCollapse);
  auto circle = SimplicialComplex::from_facets({sx({"a", "b"}), sx({"b", "c"}), sx({"a", "c"})});
  CHECK(search_collapse_to_point(circle, std::nullopt, 1000000).status == SearchStatus::NoCollapse);
  CHECK(search_collapse_to_point(fan(6), std::nullopt, 1000000).status == SearchStatus::Found);
}

TEST_CASE("search agrees with the naive oracle on small complexes") {
  std::vector<SimplicialComplex> cases = {
      triangle(),
      boundary_of_tetra(),
      fan(4),
      fan(5),
      SimplicialComplex::from_facets({sx({"a", "b", "c", "d"})}),
      SimplicialComplex::from_facets({sx({"a", "b", "c"}), sx({"b", "c", "d"})}),
      SimplicialComplex::from_facets({sx({"a", "b"}), sx({"b", "c"}), sx({"a", "c"})}),
      SimplicialComplex::from_facets({sx({"a", "b"}), sx({"b", "c"}), sx({"c", "d"})}),
  };
  for (const auto& K : cases) {
    auto res = search_collapse_to_point(K, std::nullopt, 10000000);
    REQUIRE(res.status != SearchStatus::Exhausted);
    CHECK((res.status == SearchStatus::Found) == oracle_collapsible(K));
  }
}

TEST_CASE("kind-filtered search stays within the filter") {
  std::set<CollapseKind> kinds{{2, 0}, {2, 1}};
  auto D = fan(5);
  auto target = D.generated_by({sx({"o", "v4", "v5"})});
  auto res = search_collapse(D, target, kinds, 1000000);
  REQUIRE(res.status == SearchStatus::Found);
  for (const auto& s : res.certificate.steps) {
    CollapseKind k{dim_of(s.containing_facet), dim_of(s.free_face)};
    CHECK(kinds.count(k) == 1);
  }
  CHECK(verify_certificate(D, res.certificate, target).ok);
}

TEST_CASE("zero budget reports Exhausted") {
  auto res = search_collapse_to_point(fan(4), std::nullopt, 0);
  CHECK(res.status == SearchStatus::Exhausted);
}

TEST_CASE("disk_to_tree on fan disks") {
  for (int n : {2, 3, 5, 7}) {
    auto D = fan(n);
    SUBCASE(("fan " + std::to_string(n)).c_str()) {
      std::vector<Simplex> tree = {sx({"v1", "v2"})};
      auto cert = disk_to_tree(D, tree);
      for (const auto& s : cert.steps) {
        CHECK(dim_of(s.containing_facet) == 2);
        CHECK(dim_of(s.free_face) <= 1);
      }
      auto target = D.generated_by(tree);
      CHECK(verify_certificate(D, cert, target).ok);
    }
  }
}

TEST_CASE("disk_to_tree with a boundary-spanning tree") {
  auto D = fan(6);
  // A path along the rim plus a spoke: still a tree.
  std::vector<Simplex> tree = {sx({"v1", "v2"}), sx({"v2", "v3"}), sx({"o", "v3"})};
  auto cert = disk_to_tree(D, tree);
  CHECK(verify_certificate(D, cert, D.generated_by(tree)).ok);
}

TEST_CASE("disk_to_tree rejects bad inputs") {
  CHECK_THROWS_AS(disk_to_tree(boundary_of_tetra(), {sx({"a", "b"})}), InvalidInput);
  auto D = fan(4);
  // A cycle is not a tree.
  CHECK_THROWS_AS(disk_to_tree(D, {sx({"o", "v1"}), sx({"v1", "v2"}), sx({"o", "v2"})}),
                  InvalidInput);
  // Edge outside the disk.
  CHECK_THROWS_AS(disk_to_tree(D, {sx({"v1", "v3"})}), InvalidInput);
}

TEST_CASE("collapse certificate text round trip") {
  CollapseCertificate cert;
  cert.steps = {CollapseStep{sx({"a", "b"}), sx({"a", "b", "c"})},
                CollapseStep{sx({"a"}), sx({"a", "c"})}};
  cert.kind_filter = std::set<CollapseKind>{{2, 0}, {2, 1}};
  auto text = write_collapse_certificate(cert);
  CHECK(text.find("kinds: (2,0),(2,1)") == 0);
  CHECK(text.find("C a b | a b c") != std::string::npos);
  auto back = parse_collapse_certificate(text);
  CHECK(back.steps.size() == 2);
  CHECK(back.steps[0].free_face == sx({"a", "b"}));
  CHECK(back.steps[1].containing_facet == sx({"a", "c"}));
  REQUIRE(back.kind_filter.has_value());
  CHECK(back.kind_filter->count({2, 1}) == 1);
  CHECK_THROWS_AS(parse_collapse_certificate("C a b\n"), InvalidInput);
}

TEST_CASE("workspace incremental queries match complex-level queries") {
  auto D = fan(4);
  CollapseWorkspace ws(D);
  CHECK(ws.alive_faces() == D.faces().size());
  auto pairs_ws = ws.free_pairs();
  auto pairs_cx = free_faces(D);
  CHECK(pairs_ws == pairs_cx);
  auto step = ws.collapse_through(sx({"v1", "v2"}));
  CHECK(step.containing_facet == sx({"o", "v1", "v2"}));
  auto after = apply_step(D, step);
  CHECK(ws.current() == after);
  CHECK(ws.free_pairs() == free_faces(after));
}
