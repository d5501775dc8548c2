/**
 * @file gadgets_thin.hpp
 * @brief Builders and checkers for the 2-dimensional gadget family: the
 *        bipyramid variable gadget, the one-free-edge house, and the
 *        three-blade turbine. Each builder returns a Bundle whose marks name
 *        the distinguished subcomplexes (free edges, walls, trees, circles).
 */
#ifndef SHARD_GADGETS_THIN_HPP
#define SHARD_GADGETS_THIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "shard/collapse.hpp"
#include "shard/complex.hpp"
#include "shard/scx.hpp"

namespace shard {

/// Gadgets travel as a complex + named marked subcomplexes + parameters.
using GadgetBundle = Bundle;

struct InvalidParams : DomainError { using DomainError::DomainError; };

/// A gadget failed a property its construction is supposed to guarantee.
/// Always a build bug, never a legitimate runtime outcome.
struct CounterexampleToLemma : DomainError { using DomainError::DomainError; };

/**
 * The variable gadget: join of the boundary of triangle uvw with the edge
 * a+a-. Simplices are exactly the unions s∪t with s a proper subset of
 * {u,v,w} and t ⊆ {a+,a-}; three tetrahedra total.
 *
 * Marks: "constraint" (the five edges uv, uw, vw, va+, va- that every other
 * gadget may touch), "free" (the full free-face profile), and the two
 * one-sided collapse residues "residue_a+" / "residue_a-" (what remains after
 * collapsing away the opposite side).
 */
GadgetBundle bipyramid();

/**
 * The one-free-edge house: a two-room box complex whose only free face is the
 * single marked edge f, and which collapses onto marked trees drawn in its
 * lower wall L.
 *
 * `branches` = number of edges of the splitting star (k >= 1); `circles` =
 * number of crossing circles (m >= 0). Not both may exceed their base value
 * (k > 1 together with m > 0 is rejected), matching how the gadget is used.
 *
 * Marks: "free" = {f}; "lower_wall"; "central_path" (edge path from the right
 * endpoint of f to the branch vertex b); "splitting_star" (k edges at b);
 * "central_tree" (path + star); "circle<i>" for i in [0, m).
 */
GadgetBundle thin_1house(int branches, int circles);

/**
 * The three-blade turbine: a central triangle (vertices y1 y2 y3, midpoints
 * m1 m2 m3, barycenter c) with a house-like blade glued along each half-edge
 * pair, whose free faces are exactly the three marked blade edges f1 f2 f3,
 * and which collapses onto the central tree plus any proper subset of
 * {f1, f2, f3}.
 *
 * Marks: "free" = {f1, f2, f3}; "e"; "f1".."f3"; "pi1".."pi3" (tree paths
 * from c into the blades); "central_tree" (e + m_i c edges + paths).
 */
GadgetBundle thin_turbine();

struct FreeProfileReport {
  bool ok = false;
  /// Current free faces of the bundle's complex, with containing facets.
  std::vector<std::pair<Simplex, Simplex>> free_faces;
  /// Faces of the "free" mark (empty when the mark is absent).
  std::vector<Simplex> declared;
  std::vector<Simplex> undeclared;  ///< free but not declared
  std::vector<Simplex> missing;     ///< declared but not free
};

/// Compares the actual free-face profile against the bundle's "free" mark.
FreeProfileReport check_free_profile(const GadgetBundle& bundle);

/**
 * Collapse the bundle's complex onto the subcomplex generated by the union of
 * the named marks. The returned certificate is verified before returning;
 * search failure within `budget` node expansions throws CounterexampleToLemma.
 */
CollapseCertificate collapse_to_marked(const GadgetBundle& bundle,
                                       const std::vector<std::string>& target_marks,
                                       std::uint64_t budget = 50'000'000);

}  // namespace shard

#endif
