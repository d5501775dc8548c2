#include "shard/gadgets_thin.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "internal/panel_grid.hpp"
#include "shard/polytopal.hpp"

namespace shard {

using internal::P3;
using internal::PanelGrid;
using internal::grid_cycle;
using internal::grid_segment;
using internal::vname;

GadgetBundle bipyramid() {
  GadgetBundle b;
  b.complex = SimplicialComplex::from_facets({
      sx({"u", "v", "a+", "a-"}),
      sx({"u", "w", "a+", "a-"}),
      sx({"v", "w", "a+", "a-"}),
  });
  b.marks["constraint"] = {sx({"u", "v"}), sx({"u", "w"}), sx({"v", "w"}),
                           sx({"v", "a+"}), sx({"v", "a-"})};
  // The profile is stable: the three triangle-boundary edges sit in a single
  // tetrahedron each, as does every triangle with two triangle-boundary
  // vertices and one apex.
  b.marks["free"] = {sx({"u", "v"}),        sx({"u", "w"}),        sx({"v", "w"}),
                     sx({"u", "v", "a+"}),  sx({"u", "v", "a-"}),  sx({"u", "w", "a+"}),
                     sx({"u", "w", "a-"}),  sx({"v", "w", "a+"}),  sx({"v", "w", "a-"})};
  // What remains after collapsing away one apex side; the other apex keeps
  // only its v-edge. Collapsing to residue_a+ removes the a+ side interior.
  b.marks["residue_a+"] = {sx({"v", "a+"}), sx({"u", "v", "a-"}), sx({"u", "w", "a-"}),
                           sx({"v", "w", "a-"})};
  b.marks["residue_a-"] = {sx({"v", "a-"}), sx({"u", "v", "a+"}), sx({"u", "w", "a+"}),
                           sx({"v", "w", "a+"})};
  b.meta["gadget"] = "bipyramid";
  return b;
}

/*
 * The one-free-edge house is a two-room box [0,W] x [0,D] x [0,2] on the
 * integer grid:
 *   - floor (z=0), middle floor (z=1), roof (z=2), four outer walls;
 *   - tunnel A: hole in floor and middle floor over [1,2]x[2,3], square tube
 *     through the lower room (entry into the upper room from below);
 *   - tunnel B: hole in roof and middle floor over [3,4]x[2,3], square tube
 *     through the upper room (entry into the lower room from above);
 *   - three interior membranes running from the tunnel tube corners to the
 *     back wall y=D: two in the lower room (planes x=1 and x=2) and one in
 *     the upper room (plane x=3);
 *   - a missing "door" cell in the back wall (x in [1,2], z in [0,1]),
 *     whose side rims are covered by the two lower membranes and whose top
 *     rim is covered by the middle floor.
 * The floor edge under the door is then the unique free face f, and the
 * complex collapses starting only there: the collapse front eats the folded
 * box surface and the membranes fall last (their attachment lines have floor
 * on both sides). The lower wall L carrying the marked trees is the floor.
 *
 * The central path runs from a = (2,D,0) one step in to the bend (2,D-1,0)
 * and then right along the row y = D-1 to b. Splitting-star edges leave b to
 * the right; for k >= 2 the floor column [3,4] x [1,D-1] is a single tall
 * polygon so that the triangulation cones it from b, and every second cone
 * edge is a star edge (adjacent cone edges share a triangle, alternating
 * ones do not). Crossing circles are vertical cross-sections x = x0 of the
 * box surface at even columns x0 = 4, 6, ..., crossing the central path once;
 * the two-column spacing keeps two circles (and a circle and the bend)
 * out of any common square. The triangulation
 * order puts the bend, b and the path/circle crossing vertices first so that
 * each grid square's diagonal separates the marked edges on its boundary.
 */
GadgetBundle thin_1house(int branches, int circles) {
  const int k = branches, m = circles;
  if (k < 1) throw InvalidParams("thin_1house: need at least one star edge");
  if (m < 0) throw InvalidParams("thin_1house: negative circle count");
  if (k > 1 && m > 0)
    throw InvalidParams("thin_1house: branches > 1 and circles > 0 are mutually exclusive");

  const int D = std::max(4, 2 * k);  // box depth; rows y in [0,D]
  const int yp = D - 1;              // the central-path row
  const int bx = m > 0 ? 2 * m + 4 : 3;  // branch vertex column
  const int W = bx + 2;              // box width; star endpoints stay interior
  const bool fan = k >= 2;

  PanelGrid g;
  g.rect('z', 0, 0, W, 0, D); g.cut('z', 0, 1, 2);                      // floor, tunnel-A hole
  g.rect('z', 1, 0, W, 0, D); g.cut('z', 1, 1, 2); g.cut('z', 1, 3, 2); // middle floor
  g.rect('z', 2, 0, W, 0, D); g.cut('z', 2, 3, 2);                      // roof, tunnel-B hole
  g.rect('x', 0, 0, D, 0, 2); g.rect('x', W, 0, D, 0, 2);               // side walls
  g.rect('y', 0, 0, W, 0, 2); g.rect('y', D, 0, W, 0, 2);               // front/back walls
  g.rect('x', 1, 2, 3, 0, 1); g.rect('x', 2, 2, 3, 0, 1);               // tube A
  g.rect('y', 2, 1, 2, 0, 1); g.rect('y', 3, 1, 2, 0, 1);
  g.rect('x', 3, 2, 3, 1, 2); g.rect('x', 4, 2, 3, 1, 2);               // tube B
  g.rect('y', 2, 3, 4, 1, 2); g.rect('y', 3, 3, 4, 1, 2);
  g.rect('x', 1, 3, D, 0, 1);                                           // lower membranes
  g.rect('x', 2, 3, D, 0, 1);
  g.rect('x', 3, 3, D, 1, 2);                                           // upper membrane
  g.cut('y', D, 1, 0);                                                  // the door
  if (fan)  // replace the floor column right of b by one tall fan polygon
    for (int y = 1; y < yp; ++y) g.cut('z', 0, 3, y);

  auto poly = g.polytopal();
  if (fan) {
    std::vector<Vertex> cycle;
    for (int y = 1; y <= yp; ++y) cycle.push_back(vname({4, y, 0}));
    for (int y = yp; y >= 1; --y) cycle.push_back(vname({3, y, 0}));
    poly.cells.push_back(make_polygon("fan", cycle));
  }

  const P3 a{2, D, 0}, bend{2, yp, 0}, b{bx, yp, 0};
  std::vector<Vertex> priority = {vname({1, yp, 0}), vname(bend), vname(b)};
  for (int i = 0; i < m; ++i) priority.push_back(vname({2 * i + 4, yp, 0}));
  SimplicialComplex tri =
      canonical_triangulation(poly, g.order_with_priority(priority)).complex;

  GadgetBundle bundle;
  bundle.complex = tri;
  const Simplex f = make_simplex({vname({1, D, 0}), vname(a)});
  bundle.marks["free"] = {f};

  std::vector<Simplex> path = grid_segment(a, bend);
  auto rest = grid_segment(bend, b);
  path.insert(path.end(), rest.begin(), rest.end());
  bundle.marks["central_path"] = path;

  std::vector<Simplex> star;
  if (fan) {
    for (int j = 0; j < k; ++j)
      star.push_back(make_simplex({vname(b), vname({4, yp - 2 * j, 0})}));
  } else {
    star.push_back(make_simplex({vname(b), vname({bx + 1, yp, 0})}));
  }
  bundle.marks["splitting_star"] = star;

  std::vector<Simplex> tree = path;
  tree.insert(tree.end(), star.begin(), star.end());
  bundle.marks["central_tree"] = tree;

  std::vector<Simplex> floor_faces;
  for (const auto& t : tri.faces_of_dim(2)) {
    bool flat = true;
    for (const auto& v : t) flat = flat && v.size() > 2 && v.substr(v.size() - 2) == ".0";
    if (flat) floor_faces.push_back(t);
  }
  bundle.marks["lower_wall"] = floor_faces;

  for (int i = 0; i < m; ++i) {
    const int x0 = 2 * i + 4;
    bundle.marks["circle" + std::to_string(i)] =
        grid_cycle({{x0, 0, 0}, {x0, D, 0}, {x0, D, 2}, {x0, 0, 2}});
  }

  bundle.meta["gadget"] = "1house";
  bundle.meta["k"] = std::to_string(k);
  bundle.meta["m"] = std::to_string(m);
  bundle.meta["a"] = vname(a);
  bundle.meta["b"] = vname(b);
  return bundle;
}

namespace {

// Rename every vertex of a triangulated complex through `map`; vertices not
// in the map get `prefix` prepended. Used to glue independently built grid
// pieces along shared vertex names.
SimplicialComplex relabel(const SimplicialComplex& complex, const std::string& prefix,
                          const std::map<Vertex, Vertex>& map) {
  auto rename = [&](const Vertex& v) {
    auto it = map.find(v);
    return it != map.end() ? it->second : prefix + v;
  };
  std::vector<Simplex> facets;
  for (const auto& t : complex.faces_of_dim(2)) {
    std::vector<Vertex> vs;
    for (const auto& v : t) vs.push_back(rename(v));
    facets.push_back(make_simplex(vs));
  }
  return SimplicialComplex::from_facets(facets);
}

// A blade is a one-tunnel house: a two-room box W x D x 2 with floor, middle
// floor, intact roof, a single tunnel from a floor hole up through the lower
// room, the two membranes running from the tunnel to the back wall, and the
// back door between them carrying the single free edge f = (1,D,0)-(2,D,0).
// (Unlike thin_1house there is no second tunnel: the roof stays whole so the
// middle floor's outer rim contracts across it, which keeps the blade's first
// homology trivial after the front is opened.) The lower row of the front
// wall is opened up (x in [1,W-1], z in [0,1]) and the rim of that opening --
// left jamb, bottom edge path, right jamb -- is glued onto the hub path `arc`
// (W+1 vertices, jambs included), so the opening contributes no free face.
// The marked path runs from the rim vertex (2,0,0) straight back along the
// floor column x = 2 to f's endpoint a = (2,D,0). The priority list cones
// every floor square touching that column from a path vertex, so each
// triangle sees at most one marked edge.
SimplicialComplex blade_house(int W, const std::string& prefix, const std::vector<Vertex>& arc) {
  const int D = 4;
  PanelGrid g;
  g.rect('z', 0, 0, W, 0, D); g.cut('z', 0, 1, 2);                       // floor, tunnel hole
  g.rect('z', 1, 0, W, 0, D); g.cut('z', 1, 1, 2);                       // middle floor
  g.rect('z', 2, 0, W, 0, D);                                            // roof
  g.rect('x', 0, 0, D, 0, 2); g.rect('x', W, 0, D, 0, 2);                // side walls
  g.rect('y', 0, 0, W, 0, 2); g.rect('y', D, 0, W, 0, 2);                // front/back walls
  g.rect('x', 1, 2, 3, 0, 1); g.rect('x', 2, 2, 3, 0, 1);                // tunnel
  g.rect('y', 2, 1, 2, 0, 1); g.rect('y', 3, 1, 2, 0, 1);
  g.rect('x', 1, 3, D, 0, 1); g.rect('x', 2, 3, D, 0, 1);                // membranes
  g.cut('y', D, 1, 0);                                                   // the back door
  for (int x = 1; x < W - 1; ++x) g.cut('y', 0, x, 0);                   // the front opening

  std::vector<Vertex> priority = {vname({2, D, 0}), vname({2, 3, 0}), vname({2, 2, 0}),
                                  vname({2, 1, 0}), vname({2, 0, 0})};
  SimplicialComplex tri =
      canonical_triangulation(g.polytopal(), g.order_with_priority(priority)).complex;
  std::map<Vertex, Vertex> glue;
  glue[vname({1, 0, 1})] = arc.front();
  for (int x = 1; x <= W - 1; ++x) glue[vname({x, 0, 0})] = arc[x];
  glue[vname({W - 1, 0, 1})] = arc.back();
  return relabel(tri, prefix, glue);
}


}  // namespace

/*
 * The turbine is a hub-and-blades complex. The hub is a 4x4 grid disk with
 * barycenter c = (2,2); its boundary splits into three arcs of 5, 5 and 6
 * edges, and each arc is glued to the full front-opening rim of one blade
 * (a one-house with widths 5, 5, 6). Every blade keeps its own back-door
 * free edge f_i, so the free faces of the turbine are exactly f1, f2, f3.
 *
 * The marked tree: e is a pendant edge at c, and each path pi_i runs from c
 * through two hub edges to a landing vertex one step inside blade i's arc,
 * then continues through the blade floor to f_i's endpoint. Because each
 * landing sits one edge past the start of its arc, the hub sector between
 * two landings borders the tail of one blade's arc and the first two rim
 * edges of the next blade. Collapsing can only start at a free f_i; that
 * blade collapses away (the one-house dynamics), its arc edges free the
 * neighbouring sectors, and each burnt sector exposes the jamb of the next
 * blade around -- so all three blades fall in cyclic order from any starting
 * f_i while the other f_j survive as bare edges. This realizes a collapse to
 * the tree together with any proper subset of {f1, f2, f3}.
 */
GadgetBundle thin_turbine() {
  PanelGrid g;
  g.rect('z', 0, 0, 4, 0, 4);
  const std::vector<Vertex> priority = {
      vname({2, 2, 0}),                    // c: cones all four central squares
      vname({2, 1, 0}), vname({2, 3, 0}),  // spoke bends: cone the marked diagonals
      vname({0, 2, 0}), vname({1, 2, 0}), vname({3, 2, 0})};
  SimplicialComplex hub_tri =
      canonical_triangulation(g.polytopal(), g.order_with_priority(priority)).complex;

  auto T = [](int x, int y) { return "T." + std::to_string(x) + "." + std::to_string(y); };
  std::map<Vertex, Vertex> hub_names;
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; y <= 4; ++y) hub_names[vname({x, y, 0})] = T(x, y);
  SimplicialComplex hub = relabel(hub_tri, "", hub_names);

  // Rim images: [left jamb top, bottom rim vertices, right jamb top]; the
  // blade's marked path enters at the third vertex (the landing).
  const std::vector<Vertex> arc1 = {T(4, 1), T(4, 0), T(3, 0), T(2, 0), T(1, 0), T(0, 0)};
  const std::vector<Vertex> arc2 = {T(0, 0), T(0, 1), T(0, 2), T(0, 3), T(0, 4), T(1, 4)};
  const std::vector<Vertex> arc3 = {T(1, 4), T(2, 4), T(3, 4), T(4, 4), T(4, 3), T(4, 2),
                                    T(4, 1)};
  std::vector<Simplex> facets = hub.faces_of_dim(2);
  for (const auto& piece : {blade_house(5, "A.", arc1), blade_house(5, "B.", arc2),
                            blade_house(6, "C.", arc3)}) {
    auto tris = piece.faces_of_dim(2);
    facets.insert(facets.end(), tris.begin(), tris.end());
  }

  GadgetBundle bundle;
  bundle.complex = SimplicialComplex::from_facets(facets);

  auto edge = [](const Vertex& u, const Vertex& v) { return make_simplex({u, v}); };
  auto blade_path = [&edge](const std::string& p, const Vertex& landing) {
    return std::vector<Simplex>{edge(landing, p + "2.1.0"), edge(p + "2.1.0", p + "2.2.0"),
                                edge(p + "2.2.0", p + "2.3.0"), edge(p + "2.3.0", p + "2.4.0")};
  };
  const Simplex f1 = edge("A.1.4.0", "A.2.4.0");
  const Simplex f2 = edge("B.1.4.0", "B.2.4.0");
  const Simplex f3 = edge("C.1.4.0", "C.2.4.0");
  bundle.marks["e"] = {edge(T(2, 2), T(3, 2))};
  bundle.marks["pi1"] = {edge(T(2, 2), T(2, 1)), edge(T(2, 1), T(3, 0))};
  for (const auto& s : blade_path("A.", T(3, 0))) bundle.marks["pi1"].push_back(s);
  bundle.marks["pi2"] = {edge(T(2, 2), T(1, 2)), edge(T(1, 2), T(0, 2))};
  for (const auto& s : blade_path("B.", T(0, 2))) bundle.marks["pi2"].push_back(s);
  bundle.marks["pi3"] = {edge(T(2, 2), T(2, 3)), edge(T(2, 3), T(3, 4))};
  for (const auto& s : blade_path("C.", T(3, 4))) bundle.marks["pi3"].push_back(s);
  bundle.marks["f1"] = {f1};
  bundle.marks["f2"] = {f2};
  bundle.marks["f3"] = {f3};
  bundle.marks["free"] = {f1, f2, f3};
  std::vector<Simplex> tree = bundle.marks["e"];
  for (const auto* name : {"pi1", "pi2", "pi3", "f1", "f2", "f3"})
    for (const auto& s : bundle.marks[name]) tree.push_back(s);
  bundle.marks["central_tree"] = tree;

  bundle.meta["gadget"] = "turbine";
  bundle.meta["c"] = T(2, 2);
  bundle.meta["y1"] = T(3, 0);
  bundle.meta["y2"] = T(0, 2);
  bundle.meta["y3"] = T(3, 4);
  bundle.meta["m1"] = T(0, 0);
  bundle.meta["m2"] = T(1, 4);
  bundle.meta["m3"] = T(4, 1);
  return bundle;
}

FreeProfileReport check_free_profile(const GadgetBundle& bundle) {
  FreeProfileReport report;
  report.free_faces = free_faces(bundle.complex);
  auto it = bundle.marks.find("free");
  if (it != bundle.marks.end()) report.declared = it->second;
  std::set<Simplex, FaceLess> declared(report.declared.begin(), report.declared.end());
  std::set<Simplex, FaceLess> actual;
  for (const auto& [face, facet] : report.free_faces) {
    actual.insert(face);
    if (!declared.count(face)) report.undeclared.push_back(face);
  }
  for (const auto& face : report.declared)
    if (!actual.count(face)) report.missing.push_back(face);
  report.ok = report.undeclared.empty() && report.missing.empty();
  return report;
}

CollapseCertificate collapse_to_marked(const GadgetBundle& bundle,
                                       const std::vector<std::string>& target_marks,
                                       std::uint64_t budget) {
  std::vector<Simplex> generators;
  for (const auto& name : target_marks) {
    auto it = bundle.marks.find(name);
    if (it == bundle.marks.end()) throw InvalidParams("collapse_to_marked: no mark named " + name);
    generators.insert(generators.end(), it->second.begin(), it->second.end());
  }
  if (generators.empty()) throw InvalidParams("collapse_to_marked: empty target");
  SimplicialComplex target = bundle.complex.generated_by(generators);

  CollapseSearchResult result = search_collapse(bundle.complex, target, std::nullopt, budget);
  if (result.status != SearchStatus::Found) {
    std::ostringstream msg;
    msg << "collapse_to_marked: search "
        << (result.status == SearchStatus::Exhausted ? "exhausted its budget" : "proved no collapse")
        << " for target {";
    for (size_t i = 0; i < target_marks.size(); ++i) msg << (i ? " " : "") << target_marks[i];
    msg << "} after " << result.nodes << " nodes";
    throw CounterexampleToLemma(msg.str());
  }
  VerifyReport check = verify_certificate(bundle.complex, result.certificate, target);
  if (!check.ok)
    throw CounterexampleToLemma("collapse_to_marked: found certificate failed replay: " + check.reason);
  return result.certificate;
}

}  // namespace shard
