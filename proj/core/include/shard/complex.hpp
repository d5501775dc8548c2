/**
 * @file complex.hpp
 * @brief Immutable abstract simplicial complexes stored by facets, with a
 *        cached face lattice and the structural predicates used throughout.
 */
#ifndef SHARD_COMPLEX_HPP
#define SHARD_COMPLEX_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "shard/simplex.hpp"

namespace shard {

struct EmptyComplex : DomainError { using DomainError::DomainError; };
struct NotAFace : DomainError { using DomainError::DomainError; };
struct NotPure : DomainError { using DomainError::DomainError; };
struct NotPseudomanifold : DomainError { using DomainError::DomainError; };
struct DuplicateVertex : DomainError { using DomainError::DomainError; };
struct GluingConflict : DomainError { using DomainError::DomainError; };

/**
 * Immutable simplicial complex. The face lattice is computed lazily and
 * cached; all iteration orders are deterministic (dimension, then lex).
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  ///< The empty complex (dim -1).

  /// Inclusion-maximal inputs become facets; non-maximal inputs are absorbed.
  static SimplicialComplex from_facets(std::vector<Simplex> facets);

  /// Facets in (dim, lex) order.
  const std::vector<Simplex>& facets() const { return facets_; }
  /// Every nonempty face, in (dim, lex) order. Cached after first call.
  const std::vector<Simplex>& faces() const;
  /// Vertex labels in lex order.
  std::vector<Vertex> vertices() const;

  bool empty() const { return facets_.empty(); }
  bool contains(const Simplex& s) const;
  bool is_facet(const Simplex& s) const;
  int dimension() const;  ///< -1 for the empty complex.
  bool is_pure() const;
  std::vector<Simplex> faces_of_dim(int d) const;
  /// f_i = number of i-faces, i = 0..dim.
  std::vector<long> f_vector() const;
  long euler_characteristic() const;
  int connected_components() const;

  /// Pure + every (d-1)-face in <= 2 facets. Throws NotPure.
  bool is_pseudomanifold() const;
  /// Subcomplex generated by (d-1)-faces lying in exactly one facet.
  SimplicialComplex boundary() const;

  /// All facets F with s <= F.
  std::vector<Simplex> facets_containing(const Simplex& s) const;
  /// All faces strictly containing s.
  std::vector<Simplex> cofaces_of(const Simplex& s) const;

  /// K[theta_1, ..., theta_m]: downward closure of the given faces of K.
  SimplicialComplex generated_by(const std::vector<Simplex>& thetas) const;
  /// Closed star of s.
  SimplicialComplex star(const Simplex& s) const;
  /// Link of s.
  SimplicialComplex link(const Simplex& s) const;

  /// Cone apex * K. Throws DuplicateVertex if apex already occurs.
  static SimplicialComplex cone(const Vertex& apex, const SimplicialComplex& K);

  /// Rename vertices; map may be partial. Must stay injective on each simplex.
  SimplicialComplex relabel(const std::map<Vertex, Vertex>& m) const;

  struct GlueResult;

  /**
   * Union of K1 and K2 after renaming K2 through `identify`.
   * If `expected_shared` is given, every shared simplex must lie in the
   * closure of that list, otherwise GluingConflict names a witness (the
   * accidental-chord situation).
   */
  static GlueResult glue(const SimplicialComplex& K1, const SimplicialComplex& K2,
                         const std::map<Vertex, Vertex>& identify,
                         const std::optional<std::vector<Simplex>>& expected_shared = std::nullopt);

  bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

 private:
  std::vector<Simplex> facets_;
  mutable std::shared_ptr<const std::vector<Simplex>> face_cache_;
  mutable std::shared_ptr<const std::set<Simplex, FaceLess>> face_set_cache_;

  const std::set<Simplex, FaceLess>& face_set() const;
};

struct SimplicialComplex::GlueResult {
  SimplicialComplex complex;       ///< The union after identification.
  SimplicialComplex intersection;  ///< Shared subcomplex (may be empty).
};

}  // namespace shard

#endif
