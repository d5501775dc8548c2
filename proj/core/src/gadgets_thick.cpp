#include "shard/gadgets_thick.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "internal/cell_order.hpp"
#include "internal/house_plan.hpp"

namespace shard {

GadgetBundle triangular_prism(const std::array<bool, 3>& diagonals) {
  // Boundary triangles: subdivided bottom (apex a) and top (apex a'), plus
  // the three side rectangles with the chosen diagonals.
  std::vector<Simplex> boundary = {sx({"a", "b", "c"}),    sx({"a", "c", "d"}),
                                   sx({"a", "b", "d"}),    sx({"a'", "b'", "c'"}),
                                   sx({"a'", "c'", "d'"}), sx({"a'", "b'", "d'"})};
  const std::array<std::array<std::string, 4>, 3> rects = {{
      {"b'", "c'", "c", "b"},  // cycle of rectangle 0
      {"c'", "d'", "d", "c"},
      {"d'", "b'", "b", "d"},
  }};
  std::vector<Simplex> rect_tris;
  for (int i = 0; i < 3; ++i) {
    const auto& [p, q, r, s] = std::tie(rects[i][0], rects[i][1], rects[i][2], rects[i][3]);
    if (!diagonals[i]) {  // diagonal p-r
      rect_tris.push_back(sx({p, q, r}));
      rect_tris.push_back(sx({p, r, s}));
    } else {  // diagonal q-s
      rect_tris.push_back(sx({p, q, s}));
      rect_tris.push_back(sx({q, r, s}));
    }
  }
  boundary.insert(boundary.end(), rect_tris.begin(), rect_tris.end());

  std::vector<Simplex> facets;
  for (const auto& t : boundary) {
    std::vector<Vertex> vs(t.begin(), t.end());
    vs.push_back("e");
    facets.push_back(make_simplex(vs));
  }

  GadgetBundle b;
  b.complex = SimplicialComplex::from_facets(facets);
  b.marks["outer"] = {sx({"a'", "b'", "c'"}), sx({"a'", "c'", "d'"}), sx({"a", "b", "c"}),
                      sx({"a", "c", "d"})};
  b.marks["rectangles"] = rect_tris;
  b.marks["triple_bottom"] = {sx({"a", "b", "c", "e"}), sx({"a", "b", "d", "e"}),
                              sx({"a", "c", "d", "e"})};
  b.marks["triple_top"] = {sx({"a'", "b'", "c'", "e"}), sx({"a'", "b'", "d'", "e"}),
                           sx({"a'", "c'", "d'", "e"})};
  b.meta["gadget"] = "triangular_prism";
  return b;
}

GadgetBundle conjunction_cone(int k) {
  if (k < 2) throw InvalidParams("conjunction_cone: k must be >= 2");
  // (k+1)-gon vertex cycle w-, w+, v1, ..., v(k-1); edge eps_i joins the
  // i-th and (i+1)-st vertices of the cycle (eps0 = w-w+, epsk closes it).
  std::vector<Vertex> cycle = {"w-", "w+"};
  for (int i = 1; i <= k - 1; ++i) cycle.push_back("v" + std::to_string(i));
  auto eps = [&](int i) { return make_simplex({cycle[i], cycle[(i + 1) % (k + 1)]}); };

  GadgetBundle b;
  std::vector<Simplex> facets;
  for (int i = 1; i <= k - 1; ++i) {
    Simplex tetra = make_simplex({"d", "w-", cycle[i], cycle[i + 1]});
    facets.push_back(tetra);
    b.marks["Delta" + std::to_string(i)] = {tetra};
  }
  b.complex = SimplicialComplex::from_facets(facets);
  for (const auto& e : b.complex.faces_of_dim(1))
    if (std::count(e.begin(), e.end(), "d")) b.marks["d_edges"].push_back(e);
  for (int i = 0; i <= k; ++i) {
    const Simplex edge = eps(i);
    b.marks["d_triangles"].push_back(make_simplex({"d", edge[0], edge[1]}));
  }
  b.meta["gadget"] = "conjunction_cone";
  b.meta["k"] = std::to_string(k);
  return b;
}

namespace {

/// Closure of the triangles lying in exactly one tetrahedron.
SimplicialComplex boundary_of(const SimplicialComplex& K) {
  std::map<Simplex, int, FaceLess> count;
  for (const auto& tet : K.faces_of_dim(3))
    for (std::size_t skip = 0; skip < 4; ++skip) {
      std::vector<Vertex> vs;
      for (std::size_t i = 0; i < 4; ++i)
        if (i != skip) vs.push_back(tet[i]);
      ++count[make_simplex(vs)];
    }
  std::vector<Simplex> tris;
  for (const auto& [t, c] : count)
    if (c == 1) tris.push_back(t);
  return SimplicialComplex::from_facets(tris);
}

std::vector<Simplex> proper_faces(const Simplex& tet) {
  std::vector<Simplex> out;
  for (unsigned mask = 1; mask + 1 < (1u << tet.size()); ++mask) {
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < tet.size(); ++i)
      if (mask >> i & 1) vs.push_back(tet[i]);
    out.push_back(make_simplex(vs));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// thick 1-house
// ---------------------------------------------------------------------------

namespace {

using internal::B3;
using internal::bv;
using internal::CellAnalysis;
using internal::HousePlan;
using internal::P3;
using internal::square_triangles;

std::string brick_id(const B3& b) {
  return "b." + std::to_string(b[0]) + "." + std::to_string(b[1]) + "." + std::to_string(b[2]);
}

/// Everything thick_1house and shell_off need about the assembled house;
/// fully determined by the case, so shell_off can re-derive it.
struct HouseBuild {
  HousePlan plan;
  PolytopalComplex gamma;
  TotalOrder ord;
  CanonicalTriangulation ct;
  std::set<Vertex> class_singleton, class_edge;
  std::vector<bool> diag_main;  // per lower_wall brick (outgoing only)
};

HouseBuild build_house(const ThickCase& c) {
  HouseBuild hb;
  hb.plan = internal::plan_house(c);
  const HousePlan& h = hb.plan;

  std::vector<Vertex> head;
  if (c.kind == ThickCase::Blocker) {
    const B3 p6 = h.brick_P6();
    head = {bv(p6[0], 1, p6[2]), "d+", "d-"};  // apex p, then the pushed pair
  }
  const std::vector<Vertex> priority = {h.e(), h.d(), h.bp(), h.ap()};

  hb.diag_main.assign(h.lower_wall.size(), true);
  if (c.kind == ThickCase::Outgoing) {
    // The facade diagonals are fixed from the all-cube order, then baked into
    // the prism cells (after which the squares are no longer faces at all).
    PolytopalComplex cubes = h.grid.polytopal();
    TotalOrder ord0 = CellAnalysis(cubes).order(head, priority);
    for (std::size_t i = 0; i < h.lower_wall.size(); ++i) {
      const auto sq = h.facade_square(h.lower_wall[i][0], h.lower_wall[i][2]);
      std::size_t first = 0;
      for (std::size_t j = 1; j < 4; ++j)
        if (ord0.rank(sq[j]) < ord0.rank(sq[first])) first = j;
      hb.diag_main[i] = (first % 2 == 0);  // corners 0,2 lie on the main diagonal
    }
  }

  hb.gamma = internal::house_cells(h, hb.diag_main);
  CellAnalysis analysis(hb.gamma);
  std::tie(hb.class_singleton, hb.class_edge) = analysis.corner_classes();
  hb.ord = analysis.order(head, priority);
  hb.ct = canonical_triangulation(hb.gamma, hb.ord);
  return hb;
}

}  // namespace

GadgetBundle thick_1house(const ThickCase& c) {
  HouseBuild hb = build_house(c);
  const HousePlan& h = hb.plan;
  const SimplicialComplex& K = hb.ct.complex;

  GadgetBundle bundle;
  bundle.complex = K;

  auto sq_tris = [&](std::vector<Simplex>& out, int col, int row) {
    auto [t1, t2] = square_triangles(K, h.facade_square(col, row));
    out.push_back(t1);
    out.push_back(t2);
  };
  auto quad_tris = [&](std::vector<Simplex>& out, const std::array<Vertex, 4>& corners) {
    auto [t1, t2] = square_triangles(K, corners);
    out.push_back(t1);
    out.push_back(t2);
  };
  auto add_all = [](std::vector<Simplex>& out, const std::vector<Simplex>& in) {
    out.insert(out.end(), in.begin(), in.end());
  };

  // tau and J. J wraps the two bricks right of the door: the facade squares
  // of F_right and F_upright plus the door jamb (the side of F_upright that
  // faces the gap); tau is the triangle e e' d' of F's top square.
  const Simplex tau = make_simplex({h.e(), h.ep(), h.dp()});
  if (!K.contains(tau)) throw BuildError("thick_1house: door-top triangle e e' d' missing");
  std::vector<Simplex> J;
  sq_tris(J, h.hax + 1, h.WH + 1);  // b c f e
  sq_tris(J, h.hax + 1, h.WH + 2);  // e f h g
  quad_tris(J, {h.e(), h.ep(), h.g(), h.gp()});
  for (const auto& diag : {Simplex{make_simplex({h.e(), h.cc()})}, make_simplex({h.e(), h.h()}),
                           make_simplex({h.e(), h.gp()})})
    if (!K.contains(diag)) throw BuildError("thick_1house: required diagonal " + to_string(diag) + " missing");
  const Simplex jamb_drop = make_simplex({h.e(), h.ep(), h.gp()});
  std::vector<Simplex> Jminus;
  for (const auto& t : J)
    if (!(t == jamb_drop)) Jminus.push_back(t);
  if (Jminus.size() + 1 != J.size()) throw BuildError("thick_1house: dropped jamb triangle not in J");
  bundle.marks["tau"] = {tau};
  bundle.marks["J"] = J;

  // P6 pieces of the blocker: its bent facade quadrilaterals, and its
  // tetrahedra (all through the apex p).
  std::vector<Simplex> p6_front, p6_tets;
  if (c.kind == ThickCase::Blocker) {
    const B3 p6 = h.brick_P6();
    const Vertex fbl = bv(p6[0], 0, p6[2]), fbr = bv(p6[0] + 1, 0, p6[2]);
    const Vertex ftl = bv(p6[0], 0, p6[2] + 1), ftr = bv(p6[0] + 1, 0, p6[2] + 1);
    quad_tris(p6_front, {fbl, ftl, "d+", "d-"});
    quad_tris(p6_front, {fbr, ftr, "d+", "d-"});
    const Vertex apex = bv(p6[0], 1, p6[2]);
    for (const auto& [tet, id] : hb.ct.provenance)
      if (id == "P6") {
        if (std::find(tet.begin(), tet.end(), apex) == tet.end())
          throw BuildError("thick_1house: P6 not triangulated as a cone with apex p");
        p6_tets.push_back(tet);
      }
    bundle.marks["P6"] = p6_tets;
  }

  // Front side: the facade triangles of the lower wall.
  std::vector<Simplex> front;
  for (const auto& b : h.lower_wall) {
    if (c.kind == ThickCase::Blocker && b == h.brick_P6()) {
      add_all(front, p6_front);
      continue;
    }
    sq_tris(front, b[0], b[2]);
  }
  bundle.marks["front_side"] = front;

  std::set<std::string> lw_ids;
  for (const auto& b : h.lower_wall) {
    lw_ids.insert(brick_id(b));
    const std::string base = "p." + std::to_string(b[0]) + "." + std::to_string(b[2]);
    lw_ids.insert(base + ".a");
    lw_ids.insert(base + ".b");
  }
  if (c.kind == ThickCase::Blocker) lw_ids.insert("P6");
  std::vector<Simplex> lw_tets;
  for (const auto& [tet, id] : hb.ct.provenance)
    if (lw_ids.count(id)) lw_tets.push_back(tet);
  bundle.marks["lower_wall"] = lw_tets;

  // Case-specific marks, attachment and shelling complexes.
  std::vector<Simplex> attachment;
  std::vector<std::vector<Simplex>> shellings;
  switch (c.kind) {
    case ThickCase::Splitter: {
      std::vector<Simplex> base;
      for (int i = 1; i <= c.k; ++i) {
        std::vector<Simplex> s;
        sq_tris(s, 3 * i, 3);
        bundle.marks["S" + std::to_string(i)] = s;
        add_all(base, s);
      }
      std::vector<Simplex> r1, r2;
      for (int x = 3; x <= std::max(9, 3 * c.k); ++x) sq_tris(r1, x, 4);
      sq_tris(r2, h.hax + 1, 5);
      sq_tris(r2, h.hax + 1, 6);
      bundle.marks["R1"] = r1;
      bundle.marks["R2"] = r2;
      add_all(base, r1);
      add_all(base, r2);
      attachment = base;
      add_all(attachment, J);
      attachment.push_back(tau);
      shellings.resize(2, base);
      add_all(shellings[0], J);
      add_all(shellings[1], Jminus);
      break;
    }
    case ThickCase::Incoming: {
      std::vector<Simplex> r1, r2, s;
      for (int x = 8; x <= 3 * c.k + 13; ++x) sq_tris(r1, x, 4);
      sq_tris(r2, h.hax + 1, 5);
      sq_tris(r2, h.hax + 1, 6);
      sq_tris(s, 3 * c.k + 14, 4);
      bundle.marks["R1"] = r1;
      bundle.marks["R2"] = r2;
      bundle.marks["S"] = s;
      attachment = r1;
      add_all(attachment, r2);
      add_all(attachment, s);
      for (int i = 1; i <= c.k; ++i) {
        const int ci = 3 * i + 11;
        std::vector<Simplex> ring;
        // Front and back wall faces of the column, floor to roof.
        for (int z = 0; z <= h.ZT; ++z) {
          quad_tris(ring, {bv(ci, 0, z), bv(ci + 1, 0, z), bv(ci + 1, 0, z + 1), bv(ci, 0, z + 1)});
          quad_tris(ring, {bv(ci, h.DY + 2, z), bv(ci + 1, h.DY + 2, z), bv(ci + 1, h.DY + 2, z + 1),
                           bv(ci, h.DY + 2, z + 1)});
        }
        // Roof top and floor bottom of the column.
        for (int y = 0; y <= h.DY + 1; ++y) {
          quad_tris(ring, {bv(ci, y, h.ZT + 1), bv(ci + 1, y, h.ZT + 1), bv(ci + 1, y + 1, h.ZT + 1),
                           bv(ci, y + 1, h.ZT + 1)});
          quad_tris(ring, {bv(ci, y, 0), bv(ci + 1, y, 0), bv(ci + 1, y + 1, 0), bv(ci, y + 1, 0)});
        }
        bundle.marks["A" + std::to_string(i)] = ring;
        add_all(attachment, ring);
      }
      // The chimney: the boundary faces of the tube-B assembly (ring B, its
      // membrane, and the slab/roof bricks around the two tube-B holes).
      {
        std::set<std::string> chim;
        for (int dx = -1; dx <= 1; ++dx)
          for (int dy = -1; dy <= 1; ++dy) {
            if (!(dx == 0 && dy == 0)) chim.insert(brick_id({h.hbx + dx, 3 + dy, h.MS + 1}));
            chim.insert(brick_id({h.hbx + dx, 3 + dy, h.MS}));
            chim.insert(brick_id({h.hbx + dx, 3 + dy, h.ZT}));
          }
        chim.insert(brick_id({h.hbx, 1, h.MS + 1}));
        CellAnalysis analysis(hb.gamma);
        std::vector<Simplex> chimney;
        for (std::size_t ci = 0; ci < hb.gamma.cells.size(); ++ci) {
          if (!chim.count(hb.gamma.cells[ci].id)) continue;
          for (const auto& f : analysis.boundary_faces_of(ci)) {
            std::array<Vertex, 4> corners;
            if (f.size() != 4) continue;
            std::copy(f.begin(), f.end(), corners.begin());
            quad_tris(chimney, corners);
          }
        }
        bundle.marks["chimney"] = chimney;
      }
      add_all(attachment, J);
      attachment.push_back(tau);
      shellings.resize(2, r1);
      add_all(shellings[0], r2);
      add_all(shellings[0], s);
      add_all(shellings[0], Jminus);
      add_all(shellings[1], r2);
      add_all(shellings[1], Jminus);
      break;
    }
    case ThickCase::Outgoing: {
      std::vector<Simplex> r;
      for (int z = 4; z <= h.WH; ++z) sq_tris(r, h.hax + 1, z);
      // opq: the triangle of the facade square below R containing their
      // shared edge.
      std::vector<Simplex> below;
      sq_tris(below, h.hax + 1, 3);
      const Simplex shared_edge = make_simplex({bv(h.hax + 1, 0, 4), bv(h.hax + 2, 0, 4)});
      const Simplex opq = is_face_of(shared_edge, below[0]) ? below[0] : below[1];
      if (!is_face_of(shared_edge, opq)) throw BuildError("thick_1house: opq does not meet R in an edge");
      bundle.marks["R"] = r;
      bundle.marks["opq"] = {opq};
      attachment = r;
      add_all(attachment, J);
      attachment.push_back(tau);
      attachment.push_back(opq);
      shellings.resize(1, r);
      shellings[0].push_back(opq);
      add_all(shellings[0], Jminus);
      break;
    }
    case ThickCase::Blocker: {
      // S1..S8 run down the facade column right of the door (S1 = the first
      // square of J); S6 is the bent facade of P6. The triangle d* e'* e* of
      // S9 sits on the edge shared with S8.
      std::vector<Simplex> s1(J.begin(), J.begin() + 2);
      bundle.marks["S1"] = s1;
      std::vector<Simplex> s2to8;
      for (int i = 2; i <= 8; ++i) {
        std::vector<Simplex> s;
        if (i == 6)
          s = p6_front;
        else
          sq_tris(s, h.hax + 1, 13 - i);
        bundle.marks["S" + std::to_string(i)] = s;
        add_all(s2to8, s);
      }
      std::vector<Simplex> s9;
      sq_tris(s9, h.hax + 1, 4);
      const Simplex top_edge = make_simplex({bv(h.hax + 1, 0, 5), bv(h.hax + 2, 0, 5)});
      const Simplex tstar = is_face_of(top_edge, s9[0]) ? s9[0] : s9[1];
      if (!is_face_of(top_edge, tstar)) throw BuildError("thick_1house: S9 triangle misses S8");
      bundle.marks["d*e*e*"] = {tstar};
      attachment = {tau};
      add_all(attachment, J);
      add_all(attachment, s1);
      add_all(attachment, s2to8);
      attachment.push_back(tstar);
      shellings.resize(3);
      shellings[0] = s2to8;
      shellings[0].push_back(tstar);
      shellings[1] = shellings[0];
      add_all(shellings[1], p6_tets);
      shellings[2] = {tstar};
      add_all(shellings[2], J);
      add_all(shellings[2], s1);
      add_all(shellings[2], s2to8);
      add_all(shellings[2], p6_tets);
      break;
    }
  }
  auto dedupe = [](std::vector<Simplex>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(attachment);
  bundle.marks["attachment"] = attachment;
  for (std::size_t i = 0; i < shellings.size(); ++i) {
    dedupe(shellings[i]);
    bundle.marks["shelling" + std::to_string(i)] = shellings[i];
  }

  // The realized order and its classes, for the rule-order audit.
  for (const auto& v : hb.class_singleton) bundle.marks["order_class_singleton"].push_back(Simplex{v});
  for (const auto& v : hb.class_edge) bundle.marks["order_class_edge"].push_back(Simplex{v});
  {
    std::ostringstream oss;
    for (std::size_t i = 0; i < hb.ord.order.size(); ++i) {
      if (i) oss << ' ';
      oss << hb.ord.order[i];
    }
    bundle.meta["vertex_order"] = oss.str();
  }

  static const char* names[] = {"splitter", "incoming", "outgoing", "blocker"};
  bundle.meta["gadget"] = "thick_1house";
  bundle.meta["case"] = names[c.kind];
  bundle.meta["k"] = std::to_string(c.k);
  bundle.meta["front_side"] = std::to_string(h.FX) + "x" + std::to_string(h.WH);
  bundle.meta["door_column"] = std::to_string(h.hax);
  bundle.meta["shelling_count"] = std::to_string(shellings.size());
  return bundle;
}

// ---------------------------------------------------------------------------
// blockedness
// ---------------------------------------------------------------------------

BlockednessReport blockedness_check(const GadgetBundle& bundle,
                                    const std::vector<Simplex>& excluded) {
  if (!bundle.has_mark("attachment"))
    throw InvalidParams("blockedness_check: bundle has no attachment mark");
  const SimplicialComplex bd = boundary_of(bundle.complex);
  const SimplicialComplex attachment = bundle.mark_subcomplex("attachment");
  const std::set<Simplex, FaceLess> excl(excluded.begin(), excluded.end());

  // Faces certainly on the boundary of every admissible ambient ball: the
  // gadget-boundary triangles outside the attachment complex (the ambient
  // ball can only be glued on along the attachment) together with all their
  // subfaces.
  std::set<Simplex, FaceLess> forced_faces;
  for (const auto& t : bd.facets())
    if (!attachment.contains(t)) {
      forced_faces.insert(t);
      for (const auto& g : proper_faces(t)) forced_faces.insert(g);
    }

  BlockednessReport report;
  for (const auto& tet : bundle.complex.faces_of_dim(3)) {
    ++report.tetrahedra_checked;
    std::vector<Simplex> upper;
    std::set<Simplex, FaceLess> lower;
    bool contradiction = false;
    for (const auto& f : proper_faces(tet)) {
      if (!bd.contains(f)) continue;
      const bool is_excluded = f.size() == 3 && excl.count(f) > 0;
      if (!is_excluded) upper.push_back(f);
      if (forced_faces.count(f)) {
        if (is_excluded) contradiction = true;
        lower.insert(f);
      }
    }
    if (contradiction) continue;  // the trace must contain an excluded face: never free

    // Optional faces, by dimension so prefixes of the enumeration order can
    // be checked for downward closure incrementally.
    std::vector<Simplex> optional;
    for (const auto& f : upper)
      if (!lower.count(f)) optional.push_back(f);
    std::sort(optional.begin(), optional.end(),
              [](const Simplex& x, const Simplex& y) { return x.size() < y.size(); });

    bool disk_found = false;
    SimplicialComplex witness;
    // Enumerate every downward-closed L <= S <= U.
    std::vector<char> take(optional.size(), 0);
    auto closed_under = [&](std::size_t idx) {
      for (const auto& g : proper_faces(optional[idx])) {
        if (lower.count(g)) continue;
        bool found = false;
        for (std::size_t j = 0; j < idx; ++j)
          if (take[j] && optional[j] == g) { found = true; break; }
        if (!found) return false;
      }
      return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
      if (disk_found) return;
      if (idx == optional.size()) {
        std::vector<Simplex> gen(lower.begin(), lower.end());
        for (std::size_t j = 0; j < optional.size(); ++j)
          if (take[j]) gen.push_back(optional[j]);
        if (gen.empty()) return;
        SimplicialComplex S = SimplicialComplex::from_facets(gen);
        if (S.dimension() == 2 && is_disk(S)) {
          disk_found = true;
          witness = S;
        }
        return;
      }
      take[idx] = 0;
      rec(idx + 1);
      if (!disk_found && closed_under(idx)) {
        take[idx] = 1;
        rec(idx + 1);
        take[idx] = 0;
      }
    };
    rec(0);
    if (disk_found) report.witnesses.emplace_back(tet, witness);
  }
  report.ok = report.witnesses.empty();
  return report;
}

// ---------------------------------------------------------------------------
// shell-off
// ---------------------------------------------------------------------------

namespace {

/// Greedy phase-guided shelling-down of K (gadget + cone) removing `removal`,
/// leaving everything else. Keys order the removal attempts; legality of each
/// step is the pure-codimension-1 intersection condition that
/// verify_shelling_down checks.
struct ShellScheduler {
  std::vector<Simplex> tets;          // all facets of K
  std::vector<char> removable;        // per tet
  std::vector<char> gone;             // per tet
  std::vector<std::array<long, 2>> key;  // (phase, subkey) per tet
  // Interned subfaces: per tet its 14 proper faces, as ids; per subface the
  // bitmask of the tet's 4 triangles containing it.
  std::vector<std::array<int, 14>> sub_ids;
  std::vector<std::array<unsigned, 14>> tri_mask;
  std::vector<int> face_count;  // remaining facets containing the face

  explicit ShellScheduler(const std::vector<Simplex>& all) : tets(all) {
    removable.assign(tets.size(), 0);
    gone.assign(tets.size(), 0);
    key.assign(tets.size(), {0, 0});
    std::map<Simplex, int, FaceLess> intern;
    sub_ids.resize(tets.size());
    tri_mask.resize(tets.size());
    std::vector<std::vector<Simplex>> faces_of(tets.size());
    for (std::size_t i = 0; i < tets.size(); ++i) {
      faces_of[i] = proper_faces(tets[i]);
      for (std::size_t s = 0; s < faces_of[i].size(); ++s) {
        auto [it, fresh] = intern.emplace(faces_of[i][s], static_cast<int>(intern.size()));
        sub_ids[i][s] = it->second;
      }
    }
    face_count.assign(intern.size(), 0);
    for (std::size_t i = 0; i < tets.size(); ++i) {
      // Triangles of the tet are the subfaces of size 3; record containment.
      std::array<int, 4> tri_slots{};
      int nt = 0;
      for (std::size_t s = 0; s < faces_of[i].size(); ++s)
        if (faces_of[i][s].size() == 3) tri_slots[nt++] = static_cast<int>(s);
      for (std::size_t s = 0; s < faces_of[i].size(); ++s) {
        ++face_count[sub_ids[i][s]];
        unsigned m = 0;
        for (int t = 0; t < 4; ++t)
          if (is_face_of(faces_of[i][s], faces_of[i][tri_slots[t]])) m |= 1u << t;
        tri_mask[i][s] = m;
      }
    }
  }

  bool legal(std::size_t i) const {
    unsigned ridge = 0;
    for (std::size_t s = 0; s < 14; ++s)
      if (tets[i].size() == 4 && sub_ids[i][s] >= 0 && face_count[sub_ids[i][s]] >= 2 &&
          (tri_mask[i][s] & (tri_mask[i][s] - 1)) == 0 && tri_mask[i][s] != 0 &&
          // a subface equal to one of the tet's triangles has a single bit
          false)
        (void)0;
    // Shared triangles first.
    for (std::size_t s = 0; s < 14; ++s) {
      // triangles are exactly the subfaces whose mask is a single bit equal
      // to themselves; recompute instead from sizes below.
      (void)s;
    }
    // (see legal_impl)
    return legal_impl(i, ridge);
  }

  bool legal_impl(std::size_t i, unsigned&) const {
    unsigned ridges = 0;
    int tri_no = 0;
    for (std::size_t s = 0; s < 14; ++s) {
      if (tri_mask[i][s] == 0) continue;  // never happens: every face is in some triangle
      (void)s;
    }
    // Pass 1: find shared triangles.
    tri_no = 0;
    std::array<int, 14> sizes{};
    // sizes are implicit: a subface is one of the 4 triangles iff its mask is
    // a single bit AND it is maximal; we tracked triangles during build via
    // slot order, so just recompute by mask popcount == 1 and self-containing.
    // Simpler: triangles are the subfaces whose mask has exactly one bit and
    // which equal that triangle; during construction triangle slots got mask
    // = own bit only. Identify them as the 4 slots with single-bit masks that
    // appear exactly once per bit.
    std::array<int, 4> tri_slot = {-1, -1, -1, -1};
    for (std::size_t s = 0; s < 14; ++s) {
      unsigned m = tri_mask[i][s];
      if (m != 0 && (m & (m - 1)) == 0) {
        int b = __builtin_ctz(m);
        if (tri_slot[b] == -1 || true) {
          // the triangle itself is the largest face with that single bit;
          // record the slot with max... see note below.
        }
      }
    }
    (void)tri_no;
    (void)ridges;
    (void)tri_slot;
    return false;
  }
};

}  // namespace

ShellingCertificate shell_off(const GadgetBundle& bundle, const std::string& shelling_mark) {
  (void)bundle;
  (void)shelling_mark;
  throw BuildError("shell_off: not implemented yet");
}

GadgetBundle thick_turbine() { throw BuildError("thick_turbine: not implemented yet"); }

}  // namespace shard
