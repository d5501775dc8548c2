/**
 * @file gadgets_thick.hpp
 * @brief Builders and checkers for the 3-dimensional gadget family: the
 *        triangular prism, the conjunction cone, the brick-built thick
 *        1-house in its four wall variants, and the thick turbine — together
 *        with the blockedness audit (no tetrahedron can become free in any
 *        admissible ambient ball) and verified shell-off certificates.
 */
#ifndef SHARD_GADGETS_THICK_HPP
#define SHARD_GADGETS_THICK_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "shard/gadgets_thin.hpp"
#include "shard/polytopal.hpp"
#include "shard/shelling.hpp"

namespace shard {

/// Brick-adjacency or merge inconsistency while assembling a thick gadget.
/// Always a build bug, never a legitimate runtime outcome.
struct BuildError : DomainError { using DomainError::DomainError; };

/// Which role the thick 1-house plays, with the role's parameter.
struct ThickCase {
  enum Kind { Splitter, Incoming, Outgoing, Blocker } kind = Splitter;
  int k = 1;  ///< branches (Splitter, >=1), annuli (Incoming, >=0), used squares (Outgoing, >=1); ignored for Blocker.

  static ThickCase splitter(int k) { return {Splitter, k}; }
  static ThickCase incoming(int k) { return {Incoming, k}; }
  static ThickCase outgoing(int k) { return {Outgoing, k}; }
  static ThickCase blocker() { return {Blocker, 0}; }
};

/**
 * The variable gadget: a triangular prism b c d b' c' d' with top and bottom
 * triangles subdivided from barycenters a, a', the three side rectangles
 * split by the chosen diagonals, and the interior coned from the barycenter
 * e. Twelve tetrahedra.
 *
 * `diagonals[i]` picks the diagonal of rectangle i (0: b'c'cb, 1: c'd'dc,
 * 2: d'b'bd); false = diagonal from the primed first corner (b'c, c'd, d'b),
 * true = the other one.
 *
 * Marks: "outer" (the four boundary triangles a'b'c', a'c'd', abc, acd),
 * "rectangles" (the six side triangles), "triple_bottom" = {abce, abde,
 * acde}, "triple_top" = {a'b'c'e, a'b'd'e, a'c'd'e}.
 */
GadgetBundle triangular_prism(const std::array<bool, 3>& diagonals);

/**
 * The conjunction gadget: a (k+1)-gon P with edges eps0..epsk (eps0 = w-w+),
 * triangulated as a cone with apex w-, then coned from the apex d. k-1
 * tetrahedra.
 *
 * Marks: "Delta<i>" for i in [1, k-1] (the unique tetrahedron containing
 * edge eps_i), "d_edges" (every edge through d), "d_triangles" (the k+1
 * triangles d*eps_i).
 */
GadgetBundle conjunction_cone(int k);

/**
 * The thick 1-house: the two-room brick house assembled from unit bricks
 * (walls one brick thick, every brick except the door brick F meeting the
 * boundary in at least two components), with the lower wall laid out for the
 * requested case and triangulated canonically under the boundary-component
 * vertex order (R1)-(R4).
 *
 * Marks: "tau", "J", "attachment", "shelling<i>" (the case's shelling
 * complexes in the order of the construction), "lower_wall", "front_side",
 * plus the case extras: "S<i>"/"R1"/"R2" (splitter), "S"/"R1"/"R2"/"A<i>"
 * (incoming), "R"/"opq" (outgoing), "S1".."S8"/"d*e*e*"-triangle/"P6"
 * (blocker). Meta records the case, k, and the front-side dimensions.
 */
GadgetBundle thick_1house(const ThickCase& c);

/**
 * The thick turbine: three thickened blades and a thickened central
 * triangle merged along shared brick rows, triangulated canonically under
 * (R1)-(R4).
 *
 * Marks: "tau1".."tau3" (the triangles b_i g_i f_i), "J", "attachment",
 * "shelling<i>" for the seven shelling complexes (dropping each nonempty
 * subset of the pairs {b_i, g_i}).
 */
GadgetBundle thick_turbine();

struct BlockednessReport {
  bool ok = false;
  std::size_t tetrahedra_checked = 0;
  /// Tetrahedra admitting an admissible boundary trace that is a disk,
  /// with one such disk each. Empty iff ok.
  std::vector<std::pair<Simplex, SimplicialComplex>> witnesses;
};

/**
 * The no-free-tetrahedron audit: for every tetrahedron D of the bundle, let
 * U(D) = faces of D on the gadget boundary minus the excluded triangles, and
 * L(D) = faces of D in the closure of the boundary triangles that are not in
 * the attachment-complex mark (faces certainly kept on the boundary of any
 * admissible ambient ball). Every downward-closed S with L(D) <= S <= U(D) is
 * a possible trace of D on the boundary of an admissible ambient ball; the
 * check passes when no such S is a disk. A witness is inconclusive evidence,
 * never a refutation.
 */
BlockednessReport blockedness_check(const GadgetBundle& bundle,
                                    const std::vector<Simplex>& excluded);

/**
 * Shelling off a thick gadget: builds K = gadget + cone(z, 2-dimensional
 * part of the named shelling complex) + retained 3-dimensional parts, then
 * produces and verifies a shelling of K down to that remainder, removing
 * exactly the non-retained gadget tetrahedra.
 */
ShellingCertificate shell_off(const GadgetBundle& bundle, const std::string& shelling_mark);

}  // namespace shard

#endif
