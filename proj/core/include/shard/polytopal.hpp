#pragma once

/// Combinatorial polytopal complexes (explicit face lists, no geometry),
/// canonical (first-vertex pulling) triangulations from a total vertex order,
/// prisms over polygonal complexes, and the cone-decomposition shelling of a
/// canonically triangulated polytope glued along a disk.

#include <map>
#include <string>
#include <vector>

#include "shard/complex.hpp"
#include "shard/shelling.hpp"
#include "shard/simplex.hpp"

namespace shard {

struct InvalidPolytope : DomainError {
  using DomainError::DomainError;
};

/**
 * A combinatorial polytope: an explicit list of nonempty faces (vertex sets)
 * closed under the face relation. The list must contain every vertex as a
 * singleton and the full vertex set as the top face; the intersection of two
 * listed faces must be a listed face or empty.
 */
struct Polytope {
  std::string id;
  std::vector<Simplex> faces;

  /// The unique inclusion-maximal face. Throws InvalidPolytope if it is not
  /// listed or not unique.
  const Simplex& top() const;
};

/// A finite collection of polytopal cells whose faces pairwise intersect in a
/// common (listed) face or not at all.
struct PolytopalComplex {
  std::vector<Polytope> cells;

  /// All distinct faces across all cells, in (dim, lex) order.
  std::vector<Simplex> all_faces() const;
  std::vector<Vertex> vertices() const;
  /// Checks every structural invariant; throws InvalidPolytope with a witness.
  void validate() const;
};

/// Convenience constructor for a polygonal cell from its boundary cycle.
Polytope make_polygon(const std::string& id, const std::vector<Vertex>& cycle);

/// A total order on the vertices of a polytopal complex.
struct TotalOrder {
  std::vector<Vertex> order;

  /// Position of v; throws InvalidInput for unknown vertices.
  std::size_t rank(const Vertex& v) const;
};

struct CanonicalTriangulation {
  SimplicialComplex complex;
  /// Top-dimensional simplex -> id of the cell it triangulates.
  std::map<Simplex, std::string, FaceLess> provenance;
};

/**
 * Canonical triangulation: every face of dimension > 1 is triangulated as the
 * cone from its first vertex (in `ord`) over the already-triangulated facets
 * that miss that vertex. Deterministic; triangulations of shared faces of
 * adjacent cells coincide by construction.
 */
CanonicalTriangulation canonical_triangulation(const PolytopalComplex& gamma, const TotalOrder& ord);

/**
 * Prisms over every cell of a polygonal (pure 2-dimensional) complex: each
 * polygon F becomes the prism with faces {s, s~, s ∪ s~} for every face s of
 * F, where s~ is the copy of s with `suffix` appended to each vertex label.
 */
PolytopalComplex prism_over(const PolytopalComplex& K, const std::string& suffix = "'");

/**
 * Shelling off a canonically triangulated polytope: K = L ∪ P with L pure
 * 3-dimensional, P the triangulation of a polytope as a cone with apex
 * `apex`, and L ∩ P a 2-disk inside ∂P. Returns a verified shelling-down
 * certificate of K to L removing exactly the tetrahedra of P, built per the
 * boundary decomposition into W (at apex, in L), X (at apex, not in L),
 * Y (off apex, in L), Z (off apex, not in L): shell W, extend over Y, extend
 * over Z, then cone the Y ∪ Z triangle order with the apex.
 */
ShellingCertificate shell_canonical(const SimplicialComplex& K, const SimplicialComplex& P,
                                    const Vertex& apex, const SimplicialComplex& L);

/**
 * Extendable shellability of disks and spheres, constructively: completes a
 * valid partial up-shelling (an order prefix) of a triangulated 2-disk or
 * 2-sphere to a full up-shelling, greedily with backtracking. Throws
 * InvalidInput if D is neither a disk nor a sphere, or the prefix is invalid.
 */
std::vector<Simplex> shell_disk_extend(const SimplicialComplex& D, const std::vector<Simplex>& partial);

/// `.plx` text form: per cell a `P <id>` header followed by one face per
/// line; cells separated by blank lines.
std::string write_plx(const PolytopalComplex& gamma);
PolytopalComplex parse_plx(const std::string& text);

}  // namespace shard
