#include "doctest.h"

#include "shard/complex.hpp"
#include "shard/scx.hpp"

using namespace shard;

namespace {

SimplicialComplex boundary_of_tetra() {
  return SimplicialComplex::from_facets(
      {sx({"a", "b", "c"}), sx({"a", "b", "d"}), sx({"a", "c", "d"}), sx({"b", "c", "d"})});
}

}  // namespace

TEST_CASE("simplex basics") {
  CHECK(make_simplex({"b", "a", "b"}) == sx({"a", "b"}));
  CHECK(dim_of(sx({"a"})) == 0);
  CHECK(dim_of(sx({"a", "b", "c"})) == 2);
  CHECK(is_face_of(sx({"a", "c"}), sx({"a", "b", "c"})));
  CHECK(!is_face_of(sx({"a", "e"}), sx({"a", "b", "c"})));
  CHECK(to_string(sx({"b", "a"})) == "a b");
  CHECK(simplex_union(sx({"a", "b"}), sx({"b", "c"})) == sx({"a", "b", "c"}));
  CHECK(simplex_intersection(sx({"a", "b"}), sx({"b", "c"})) == std::vector<Vertex>{"b"});
  CHECK(all_subfaces(sx({"a", "b", "c"})).size() == 7);
}

TEST_CASE("from_facets absorbs non-maximal faces and orders facets") {
  auto K = SimplicialComplex::from_facets({sx({"a", "b"}), sx({"a", "b", "c"}), sx({"d"})});
  REQUIRE(K.facets().size() == 2);
  CHECK(K.facets()[0] == sx({"d"}));
  CHECK(K.facets()[1] == sx({"a", "b", "c"}));
  CHECK_THROWS_AS(SimplicialComplex::from_facets({}), EmptyComplex);
}

TEST_CASE("face lattice in (dim, lex) order") {
  auto K = SimplicialComplex::from_facets({sx({"a", "b", "c"})});
  const auto& faces = K.faces();
  REQUIRE(faces.size() == 7);
  CHECK(faces[0] == sx({"a"}));
  CHECK(faces[2] == sx({"c"}));
  CHECK(faces[3] == sx({"a", "b"}));
  CHECK(faces[6] == sx({"a", "b", "c"}));
  CHECK(K.contains(sx({"b", "c"})));
  CHECK(!K.contains(sx({"a", "d"})));
  CHECK(K.is_facet(sx({"a", "b", "c"})));
  CHECK(!K.is_facet(sx({"a", "b"})));
}

TEST_CASE("dimension, purity, f-vector, euler characteristic") {
  auto S = boundary_of_tetra();
  CHECK(S.dimension() == 2);
  CHECK(S.is_pure());
  CHECK(S.f_vector() == std::vector<long>{4, 6, 4});
  CHECK(S.euler_characteristic() == 2);

  auto mixed = SimplicialComplex::from_facets({sx({"a", "b", "c"}), sx({"c", "d"})});
  CHECK(!mixed.is_pure());
  CHECK(SimplicialComplex().dimension() == -1);
}

TEST_CASE("connected components") {
  auto K = SimplicialComplex::from_facets({sx({"a", "b"}), sx({"c", "d"})});
  CHECK(K.connected_components() == 2);
  CHECK(boundary_of_tetra().connected_components() == 1);
}

TEST_CASE("pseudomanifold and boundary") {
  auto S = boundary_of_tetra();
  CHECK(S.is_pseudomanifold());
  CHECK(S.boundary().empty());

  auto two = SimplicialComplex::from_facets({sx({"a", "b", "c"}), sx({"b", "c", "d"})});
  CHECK(two.is_pseudomanifold());
  auto bd = two.boundary();
  CHECK(bd.facets().size() == 4);  // the four non-shared edges
  CHECK(bd.contains(sx({"a", "b"})));
  CHECK(!bd.contains(sx({"b", "c"})));

  auto book = SimplicialComplex::from_facets(
      {sx({"a", "b", "x"}), sx({"a", "b", "y"}), sx({"a", "b", "z"})});
  CHECK(!book.is_pseudomanifold());

  auto mixed = SimplicialComplex::from_facets({sx({"a", "b", "c"}), sx({"c", "d"})});
  CHECK_THROWS_AS(mixed.is_pseudomanifold(), NotPure);

  auto solid = SimplicialComplex::from_facets({sx({"a", "b", "c", "d"})});
  CHECK(solid.boundary() == boundary_of_tetra());
}

TEST_CASE("star and link") {
  auto S = boundary_of_tetra();
  auto st = S.star(sx({"a"}));
  CHECK(st.facets().size() == 3);
  auto lk = S.link(sx({"a"}));
  CHECK(lk == SimplicialComplex::from_facets({sx({"b", "c"}), sx({"b", "d"}), sx({"c", "d"})}));
  CHECK(S.link(sx({"a", "b"})) == SimplicialComplex::from_facets({sx({"c"}), sx({"d"})}));
  CHECK_THROWS_AS(S.link(sx({"a", "e"})), NotAFace);
}

TEST_CASE("generated_by takes the downward closure") {
  auto S = boundary_of_tetra();
  auto sub = S.generated_by({sx({"a", "b", "c"}), sx({"c", "d"})});
  CHECK(sub.facets().size() == 2);
  CHECK(sub.contains(sx({"a"})));
  CHECK(!sub.contains(sx({"a", "d"})));
  CHECK_THROWS_AS(S.generated_by({sx({"a", "e"})}), NotAFace);
}

TEST_CASE("cone") {
  auto S = boundary_of_tetra();
  auto C = SimplicialComplex::cone("o", S);
  CHECK(C.dimension() == 3);
  CHECK(C.facets().size() == 4);
  CHECK(C.euler_characteristic() == 1);  // cones are contractible
  CHECK_THROWS_AS(SimplicialComplex::cone("a", S), DuplicateVertex);
}

TEST_CASE("relabel") {
  auto K = SimplicialComplex::from_facets({sx({"a", "b", "c"})});
  auto R = K.relabel({{"a", "x"}});
  CHECK(R.contains(sx({"x", "b"})));
  CHECK(!R.contains(sx({"a"})));
  // Collapsing two vertices of one simplex is not a relabeling.
  CHECK_THROWS_AS(K.relabel({{"a", "b"}}), DuplicateVertex);
}

TEST_CASE("glue along an expected shared subcomplex") {
  auto K1 = SimplicialComplex::from_facets({sx({"a", "b", "c"})});
  auto K2 = SimplicialComplex::from_facets({sx({"x", "y", "z"})});
  auto res = SimplicialComplex::glue(K1, K2, {{"x", "b"}, {"y", "c"}},
                                     std::vector<Simplex>{sx({"b", "c"})});
  CHECK(res.complex.facets().size() == 2);
  CHECK(res.complex.contains(sx({"b", "c", "z"})));
  CHECK(res.intersection == SimplicialComplex::from_facets({sx({"b", "c"})}));
}

TEST_CASE("glue flags accidental shared simplices") {
  // K1 is a triangle boundary; gluing an edge across two of its vertices
  // accidentally doubles the chord ac, which the expected list rules out.
  auto K1 = SimplicialComplex::from_facets({sx({"a", "b"}), sx({"b", "c"}), sx({"a", "c"})});
  auto K2 = SimplicialComplex::from_facets({sx({"x", "y"})});
  CHECK_THROWS_AS(SimplicialComplex::glue(K1, K2, {{"x", "a"}, {"y", "c"}},
                                          std::vector<Simplex>{sx({"a"}), sx({"c"})}),
                  GluingConflict);
  // Without the expected list the same gluing is accepted and reported.
  auto res = SimplicialComplex::glue(K1, K2, {{"x", "a"}, {"y", "c"}});
  CHECK(res.intersection.contains(sx({"a", "c"})));
}

TEST_CASE("scx round trip with marks and meta") {
  Bundle b;
  b.complex = boundary_of_tetra();
  b.marks["rim"] = {sx({"a", "b"}), sx({"b", "c"})};
  b.meta["kind"] = "demo";
  auto text = write_scx(b);
  auto back = parse_scx(text);
  CHECK(back.complex == b.complex);
  REQUIRE(back.has_mark("rim"));
  CHECK(back.marks.at("rim") == b.marks.at("rim"));
  CHECK(back.meta.at("kind") == "demo");
  CHECK_THROWS(parse_scx("@mark m\na zz qq\n"));
}
