#pragma once

/// Shelling-down/up verification and search, free facets of 3-balls, exact
/// small-scale disk recognition, PL-shelling verification, and the bridge from
/// restricted collapses to shellings of 2-complexes.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "shard/collapse.hpp"
#include "shard/complex.hpp"
#include "shard/simplex.hpp"

namespace shard {

/// Up-shelling order does not cover all facets.
struct IncompleteOrder : DomainError {
  using DomainError::DomainError;
};

/// free_facets on a complex without boundary.
struct NoBoundary : DomainError {
  using DomainError::DomainError;
};

/// A collapse certificate uses step kinds outside the allowed set.
struct KindViolation : DomainError {
  using DomainError::DomainError;
};

/**
 * A shelling-down certificate: the removed prefix F1,...,Fk in removal order,
 * plus the subcomplex that remains. Valid when, writing F_{k+1},...,F_m for
 * the target facets, each K[F_i] ∩ K[F_{i+1},...,F_m] is pure of dimension
 * d-1 (with K pure d-dimensional).
 */
struct ShellingCertificate {
  std::vector<Simplex> ordered_facets;
  SimplicialComplex target;
};

/// Verification outcome with the first failing removal index (0-based) on
/// failure.
struct ShellingVerifyReport {
  bool ok = false;
  std::size_t failing_index = 0;
  std::string reason;
};

/**
 * Checks a shelling-down certificate against K: removed facets are distinct
 * facets of K, the target is exactly what remains, and every removal meets
 * the pure (d-1)-dimensional intersection condition.
 */
ShellingVerifyReport verify_shelling_down(const SimplicialComplex& K, const ShellingCertificate& cert);

/**
 * Checks an up-shelling order F1,...,Fm covering all facets of K: valid iff
 * m == 1 or Fm,...,F2 is a shelling down to K[F1].
 */
bool verify_shelling_up(const SimplicialComplex& K, const std::vector<Simplex>& order);

/**
 * Converts an up-shelling order F1,...,Fm into the dual down certificate
 * (Fm,...,F2 removed, target K[F1]). Throws IncompleteOrder if the order
 * does not cover the facets of K exactly once each.
 */
ShellingCertificate duality(const SimplicialComplex& K, const std::vector<Simplex>& up_order);

/**
 * Exact combinatorial disk recognition, dispatched on dimension:
 *  - dim 2: pure, connected, every edge in <= 2 triangles, Euler
 *    characteristic 1, every vertex link a single path (boundary vertices) or
 *    single cycle (interior vertices), and the boundary edges form one cycle;
 *  - dim 1: path recognition (connected, max degree 2, two endpoints);
 *  - anything else: false.
 */
bool is_disk(const SimplicialComplex& K);

/**
 * Facets F of a pure 3-pseudomanifold B with nonempty boundary such that
 * F ∩ ∂B is a 2-disk (computed as the intersection subcomplex of ∂F with ∂B).
 * These are the facets whose removal keeps the complex a ball when B is one.
 * Throws NoBoundary for closed pseudomanifolds.
 */
std::vector<Simplex> free_facets(const SimplicialComplex& B);

enum class ShellSearchStatus { Found, Exhausted, NotShellable };

struct ShellingSearchResult {
  ShellSearchStatus status = ShellSearchStatus::NotShellable;
  ShellingCertificate certificate;  ///< valid when status == Found
  std::uint64_t nodes = 0;
};

/**
 * Exact backtracking search for a shelling down of K to the given subcomplex
 * (or, in the second form, to any remaining subcomplex with `target_size`
 * facets). A transposition table caches exhausted remaining-facet sets, so
 * NotShellable is only reported after full exhaustion within budget.
 *
 * `free_facet_pruning`: for pure 3-dimensional pseudomanifolds with boundary,
 * restricts candidates to free_facets of the current remainder (sound for
 * balls); std::nullopt applies it exactly in that case, false disables it for
 * inputs that are not known to be balls.
 */
ShellingSearchResult search_shelling(const SimplicialComplex& K, const SimplicialComplex& target,
                                     std::uint64_t budget,
                                     std::optional<bool> free_facet_pruning = std::nullopt);
ShellingSearchResult search_shelling(const SimplicialComplex& K, std::size_t target_size,
                                     std::uint64_t budget,
                                     std::optional<bool> free_facet_pruning = std::nullopt);

/**
 * Bridge from restricted collapses to shellings: if a pure 2-complex K
 * collapses to a single triangle using only (2,0) and (2,1) steps, the
 * triangles in removal order form a shelling down to that triangle. The
 * certificate is re-verified before being returned. Throws KindViolation if
 * other step kinds occur, InvalidInput if the certificate is invalid or does
 * not end at the closure of `final_triangle`.
 */
ShellingCertificate shelling_from_restricted_collapse(const SimplicialComplex& K,
                                                      const CollapseCertificate& cert,
                                                      const Simplex& final_triangle);

/**
 * One step of a PL shelling: a set of tetrahedra B removed together, with a
 * shelling certificate of B down to a single facet certifying that B is a
 * ball.
 */
struct PLShellingStep {
  std::vector<Simplex> ball_facets;
  ShellingCertificate ball_certificate;
};

struct PLVerifyReport {
  bool ok = false;
  std::size_t failing_index = 0;
  std::string reason;
};

/**
 * Verifies a PL shelling of a pure 3-complex K down to `target`: at each step
 * the remainder decomposes as L ∪ B with B the declared facets, B certified a
 * ball by its shelling-to-one-facet certificate, and L ∩ B a 2-disk; after
 * all steps the remainder equals `target`.
 */
PLVerifyReport verify_pl_shelling(const SimplicialComplex& K, const std::vector<PLShellingStep>& steps,
                                  const SimplicialComplex& target);

/**
 * Local freeness test for a tetrahedron abcd with apex d whose edges ad, bd,
 * cd lie on the boundary of the ambient ball: freeness is impossible when at
 * least two of the triangles abd, acd, bcd are off the boundary (the shared
 * region then cannot be a 2-disk). Inputs are faces of the abstract
 * tetrahedron on vertices a, b, c, d.
 */
bool tetra_free_predicate(const std::set<Simplex, FaceLess>& edges_on_boundary,
                          const std::set<Simplex, FaceLess>& triangles_on_boundary);

/// Text form: header `S target: <k facets follow>`, then the k target facets,
/// then the removed facets one per line in removal order.
std::string write_shelling_certificate(const ShellingCertificate& cert);
ShellingCertificate parse_shelling_certificate(const std::string& text);

}  // namespace shard
