/**
 * @file house_plan.hpp
 * @brief Internal brick layout of the thick 1-house. The house is a hollow
 *        two-storey block: a full floor slab, a continuous one-brick
 *        perimeter wall, a middle slab, and a full roof. Two vertical tubes
 *        connect the storeys to the outside: tube A rises from a floor hole
 *        through the lower room (walled by a ring of bricks) and opens
 *        through the middle slab into the upper room; tube B drops from a
 *        roof hole through the upper room (its own ring) into the lower
 *        room. A door brick F sits in the front wall under a missing wall
 *        brick (the gap); behind the gap a one-brick-wide empty shaft runs
 *        down to the floor, walled on both sides by membrane columns that
 *        also tie the front wall to ring A. A single membrane brick ties the
 *        front wall to ring B upstairs. The front faces of the front-wall
 *        bricks in rows 1..WH form the facade ("lower wall") that carries the
 *        case-specific attachment squares.
 *
 * Cells are unit cubes except: the outgoing case splits every lower-wall
 * brick into two triangular prisms along its facade diagonal (mirroring the
 * split into the front faces of the membrane bricks behind them), and the
 * blocker case replaces the S6 brick by the cell P6 whose facade square is
 * bent forward along the vertical midline d+ d-.
 */
#ifndef SHARD_INTERNAL_HOUSE_PLAN_HPP
#define SHARD_INTERNAL_HOUSE_PLAN_HPP

#include <array>
#include <string>
#include <vector>

#include "internal/brick_grid.hpp"
#include "internal/cell_order.hpp"
#include "shard/gadgets_thick.hpp"

namespace shard::internal {

inline Simplex pts_to_simplex(const std::vector<P3>& pts) {
  std::vector<Vertex> vs;
  vs.reserve(pts.size());
  for (const auto& p : pts) vs.push_back(vname(p));
  return make_simplex(vs);
}

struct HousePlan {
  ThickCase c;
  int WH = 0;   ///< lower-wall height (facade rows 1..WH)
  int FX = 0;   ///< lower-wall width (facade columns 1..FX)
  int DY = 6;   ///< interior depth
  int MS = 0;   ///< z-level of the middle slab (WH + 3)
  int ZT = 0;   ///< z-level of the roof (MS + 2)
  int hax = 0;  ///< tube-A / door column
  int hbx = 0;  ///< tube-B column (hax + 3)
  BrickGrid grid;
  std::vector<B3> lower_wall;  ///< front-wall bricks (x, 0, z), x in 1..FX, z in 1..WH

  B3 brick_F() const { return {hax, 0, WH + 1}; }
  B3 brick_Fdown() const { return {hax, 0, WH}; }
  B3 brick_Fright() const { return {hax + 1, 0, WH + 1}; }
  B3 brick_Fupright() const { return {hax + 1, 0, WH + 2}; }
  B3 brick_P6() const { return {hax + 1, 0, WH - 4}; }  // blocker only (facade row 13-6)

  // The door-square corners and their neighbours (primes sit one step into
  // the house, at y = 1).
  Vertex a() const { return bv(hax, 0, WH + 1); }
  Vertex b() const { return bv(hax + 1, 0, WH + 1); }
  Vertex d() const { return bv(hax, 0, WH + 2); }
  Vertex e() const { return bv(hax + 1, 0, WH + 2); }
  Vertex ap() const { return bv(hax, 1, WH + 1); }
  Vertex bp() const { return bv(hax + 1, 1, WH + 1); }
  Vertex dp() const { return bv(hax, 1, WH + 2); }
  Vertex ep() const { return bv(hax + 1, 1, WH + 2); }
  Vertex cc() const { return bv(hax + 2, 0, WH + 1); }
  Vertex f() const { return bv(hax + 2, 0, WH + 2); }
  Vertex g() const { return bv(hax + 1, 0, WH + 3); }
  Vertex h() const { return bv(hax + 2, 0, WH + 3); }
  Vertex gp() const { return bv(hax + 1, 1, WH + 3); }
  Vertex fp() const { return bv(hax + 2, 1, WH + 2); }

  /// Facade square (col, row): the front face of brick (col, 0, row).
  std::array<Vertex, 4> facade_square(int col, int row) const {
    return {bv(col, 0, row), bv(col + 1, 0, row), bv(col + 1, 0, row + 1), bv(col, 0, row + 1)};
  }
};

inline HousePlan plan_house(const ThickCase& c) {
  HousePlan h;
  h.c = c;
  switch (c.kind) {
    case ThickCase::Splitter:
      if (c.k < 1) throw InvalidParams("thick_1house: splitter needs k >= 1");
      h.WH = 6;
      h.FX = std::max(11, 3 * c.k + 2);
      h.hax = (h.FX + 1) / 2;
      break;
    case ThickCase::Incoming:
      if (c.k < 0) throw InvalidParams("thick_1house: incoming needs k >= 0");
      h.WH = 6;
      h.FX = 3 * c.k + 17;
      h.hax = 7;
      break;
    case ThickCase::Outgoing:
      if (c.k < 1) throw InvalidParams("thick_1house: outgoing needs k >= 1");
      h.WH = c.k + 3;
      h.FX = 11;
      h.hax = 6;
      break;
    case ThickCase::Blocker:
      h.WH = 11;
      h.FX = 11;
      h.hax = 6;
      break;
  }
  h.MS = h.WH + 3;
  h.ZT = h.MS + 2;
  h.hbx = h.hax + 3;
  if (h.hbx + 2 > h.FX + 1) throw BuildError("thick_1house: tube B leaves the footprint");

  BrickGrid& g = h.grid;
  // Floor slab with the tube-A hole.
  g.box(0, h.FX + 1, 0, h.DY + 1, 0, 0);
  g.cut(h.hax, 3, 0);
  // Perimeter walls, full height between floor and roof, with the door gap
  // one row above the door brick F.
  g.box(0, 0, 0, h.DY + 1, 1, h.ZT - 1);
  g.box(h.FX + 1, h.FX + 1, 0, h.DY + 1, 1, h.ZT - 1);
  g.box(1, h.FX, 0, 0, 1, h.ZT - 1);
  g.box(1, h.FX, h.DY + 1, h.DY + 1, 1, h.ZT - 1);
  g.cut(h.hax, 0, h.WH + 2);
  // Middle slab (interior footprint) with the tube-A mouth and tube-B hole.
  g.box(1, h.FX, 1, h.DY, h.MS, h.MS);
  g.cut(h.hax, 3, h.MS);
  g.cut(h.hbx, 3, h.MS);
  // Roof with the tube-B hole.
  g.box(0, h.FX + 1, 0, h.DY + 1, h.ZT, h.ZT);
  g.cut(h.hbx, 3, h.ZT);
  // Ring A around the tube-A column, and the two membrane columns walling
  // the shaft behind the door (the shaft column (hax, 1, *) stays empty).
  g.box(h.hax - 1, h.hax + 1, 2, 4, 1, h.MS - 1);
  for (int z = 1; z <= h.MS - 1; ++z) g.cut(h.hax, 3, z);
  g.box(h.hax - 1, h.hax - 1, 1, 1, 1, h.MS - 1);
  g.box(h.hax + 1, h.hax + 1, 1, 1, 1, h.MS - 1);
  // Ring B around the tube-B column in the upper room, plus its single
  // membrane brick to the front wall.
  g.box(h.hbx - 1, h.hbx + 1, 2, 4, h.MS + 1, h.MS + 1);
  g.cut(h.hbx, 3, h.MS + 1);
  g.add(h.hbx, 1, h.MS + 1);

  for (int x = 1; x <= h.FX; ++x)
    for (int z = 1; z <= h.WH; ++z) h.lower_wall.push_back({x, 0, z});
  return h;
}

/// Triangular prism over a facade triangle (points in the y = 0 plane),
/// extruded one unit into the house (y = 1).
inline Polytope facade_prism(const std::string& id, const std::array<P3, 3>& front) {
  std::array<P3, 3> back;
  for (int i = 0; i < 3; ++i) back[i] = {front[i].x, 1, front[i].z};
  Polytope P;
  P.id = id;
  std::vector<P3> all;
  for (int i = 0; i < 3; ++i) {
    P.faces.push_back(pts_to_simplex({front[i]}));
    P.faces.push_back(pts_to_simplex({back[i]}));
    all.push_back(front[i]);
    all.push_back(back[i]);
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    P.faces.push_back(pts_to_simplex({front[i], front[j]}));
    P.faces.push_back(pts_to_simplex({back[i], back[j]}));
    P.faces.push_back(pts_to_simplex({front[i], back[i]}));
    P.faces.push_back(pts_to_simplex({front[i], front[j], back[i], back[j]}));
  }
  P.faces.push_back(pts_to_simplex({front[0], front[1], front[2]}));
  P.faces.push_back(pts_to_simplex({back[0], back[1], back[2]}));
  P.faces.push_back(pts_to_simplex(all));
  return P;
}

/// A brick's cube with its front square (low-y side) replaced by the two
/// triangles of the given diagonal, matching the prisms of the lower-wall
/// brick in front of it.
inline Polytope split_front_cube(const B3& b, bool diag_main) {
  Polytope P = BrickGrid::cube(b);
  const P3 c00{b[0], b[1], b[2]}, c10{b[0] + 1, b[1], b[2]};
  const P3 c01{b[0], b[1], b[2] + 1}, c11{b[0] + 1, b[1], b[2] + 1};
  const Simplex front = pts_to_simplex({c00, c10, c01, c11});
  P.faces.erase(std::remove(P.faces.begin(), P.faces.end(), front), P.faces.end());
  if (diag_main) {  // diagonal c00 - c11
    P.faces.push_back(pts_to_simplex({c00, c11}));
    P.faces.push_back(pts_to_simplex({c00, c10, c11}));
    P.faces.push_back(pts_to_simplex({c00, c01, c11}));
  } else {  // diagonal c10 - c01
    P.faces.push_back(pts_to_simplex({c10, c01}));
    P.faces.push_back(pts_to_simplex({c00, c10, c01}));
    P.faces.push_back(pts_to_simplex({c10, c11, c01}));
  }
  return P;
}

/// The blocker's cell P6: the S6 brick with the midpoints of the top and
/// bottom edges of its facade square pushed forward (vertices d+, d-), so
/// the facade becomes two forward-bent quadrilaterals. The top and bottom
/// faces grow triangular lips (the pentagon areas swept by the push),
/// carried as separate faces so the neighbouring bricks keep their plain
/// square faces.
inline Polytope p6_cell(const B3& b) {
  Polytope P = BrickGrid::cube(b);
  P.id = "P6";
  const P3 fbl{b[0], 0, b[2]}, fbr{b[0] + 1, 0, b[2]};          // facade bottom corners
  const P3 ftl{b[0], 0, b[2] + 1}, ftr{b[0] + 1, 0, b[2] + 1};  // facade top corners
  const Simplex facade = pts_to_simplex({fbl, fbr, ftl, ftr});
  P.faces.erase(std::remove(P.faces.begin(), P.faces.end(), facade), P.faces.end());
  const Vertex dplus = "d+", dminus = "d-";
  const Vertex vfbl = vname(fbl), vfbr = vname(fbr), vftl = vname(ftl), vftr = vname(ftr);
  P.faces.push_back(make_simplex({dplus}));
  P.faces.push_back(make_simplex({dminus}));
  P.faces.push_back(make_simplex({dplus, dminus}));
  P.faces.push_back(make_simplex({vftl, dplus}));
  P.faces.push_back(make_simplex({vftr, dplus}));
  P.faces.push_back(make_simplex({vfbl, dminus}));
  P.faces.push_back(make_simplex({vfbr, dminus}));
  P.faces.push_back(make_simplex({vftl, vftr, dplus}));    // top lip
  P.faces.push_back(make_simplex({vfbl, vfbr, dminus}));   // bottom lip
  P.faces.push_back(make_simplex({vfbl, vftl, dplus, dminus}));  // bent facade, left
  P.faces.push_back(make_simplex({vfbr, vftr, dplus, dminus}));  // bent facade, right
  // New top face of the cell lists the two pushed vertices too.
  for (auto& f : P.faces)
    if (f.size() == 8) {
      std::vector<Vertex> vs(f.begin(), f.end());
      vs.push_back(dplus);
      vs.push_back(dminus);
      f = make_simplex(vs);
    }
  return P;
}

/// The polytopal cell complex of the house: cubes, with the case-specific
/// replacements. `diag_main[i]` gives the facade diagonal of lower_wall[i]
/// in the outgoing case (ignored otherwise).
inline PolytopalComplex house_cells(const HousePlan& h, const std::vector<bool>& diag_main) {
  std::set<B3> skip;
  std::vector<Polytope> extra;
  if (h.c.kind == ThickCase::Outgoing) {
    for (std::size_t i = 0; i < h.lower_wall.size(); ++i) {
      const B3& b = h.lower_wall[i];
      skip.insert(b);
      const P3 c00{b[0], 0, b[2]}, c10{b[0] + 1, 0, b[2]};
      const P3 c01{b[0], 0, b[2] + 1}, c11{b[0] + 1, 0, b[2] + 1};
      const std::string base = "p." + std::to_string(b[0]) + "." + std::to_string(b[2]);
      if (diag_main[i]) {
        extra.push_back(facade_prism(base + ".a", {c00, c10, c11}));
        extra.push_back(facade_prism(base + ".b", {c00, c01, c11}));
      } else {
        extra.push_back(facade_prism(base + ".a", {c00, c10, c01}));
        extra.push_back(facade_prism(base + ".b", {c10, c11, c01}));
      }
      const B3 behind{b[0], 1, b[2]};
      if (h.grid.has(behind)) {
        skip.insert(behind);
        extra.push_back(split_front_cube(behind, diag_main[i]));
      }
    }
  }
  if (h.c.kind == ThickCase::Blocker) {
    skip.insert(h.brick_P6());
    extra.push_back(p6_cell(h.brick_P6()));
  }
  PolytopalComplex gamma = h.grid.polytopal_without(skip);
  for (auto& P : extra) gamma.cells.push_back(std::move(P));
  return gamma;
}

}  // namespace shard::internal

#endif  // SHARD_INTERNAL_HOUSE_PLAN_HPP
