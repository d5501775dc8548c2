/**
 * @file collapse.hpp
 * @brief Free faces, elementary collapses, collapse certificates, bounded
 *        exact collapsibility search, and the constructive disk-to-tree
 *        collapse (only (2,0)/(2,1) steps).
 */
#ifndef SHARD_COLLAPSE_HPP
#define SHARD_COLLAPSE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shard/complex.hpp"

namespace shard {

struct NotFree : DomainError { using DomainError::DomainError; };
struct InvalidInput : DomainError { using DomainError::DomainError; };

/// One elementary collapse: remove free_face and every coface.
struct CollapseStep {
  Simplex free_face;
  Simplex containing_facet;  ///< the unique facet containing free_face
};

/// (dim containing facet, dim free face); (2,1) = edge free in a triangle.
using CollapseKind = std::pair<int, int>;

struct CollapseCertificate {
  std::vector<CollapseStep> steps;
  /// When set, every step's kind must belong to this set.
  std::optional<std::set<CollapseKind>> kind_filter;
};

/// All (free face, unique containing facet) pairs, in (dim, lex) order of the
/// free face. All dimension gaps are included.
std::vector<std::pair<Simplex, Simplex>> free_faces(const SimplicialComplex& K);

/// Apply one step; throws NotFree with a diagnostic if invalid.
SimplicialComplex apply_step(const SimplicialComplex& K, const CollapseStep& step);

struct VerifyReport {
  bool ok = false;
  size_t failing_index = 0;  ///< meaningful when !ok; steps.size() = end-state mismatch
  std::string reason;
};

/// Replay `cert` from K; success iff all steps legal, kinds respected, and the
/// final complex equals `target` exactly.
VerifyReport verify_certificate(const SimplicialComplex& K, const CollapseCertificate& cert,
                                const SimplicialComplex& target);

enum class SearchStatus { Found, Exhausted, NoCollapse };

struct CollapseSearchResult {
  SearchStatus status = SearchStatus::NoCollapse;
  CollapseCertificate certificate;  ///< valid when status == Found
  std::uint64_t nodes = 0;          ///< node expansions used
};

/**
 * Exact depth-first search for a collapse K -> target, with a transposition
 * table keyed by the remaining face set. `budget` counts node expansions.
 * NoCollapse is only reported when the whole space was exhausted in budget.
 */
CollapseSearchResult search_collapse(const SimplicialComplex& K, const SimplicialComplex& target,
                                     const std::optional<std::set<CollapseKind>>& kind_filter,
                                     std::uint64_t budget);

/**
 * Exact search for a collapse of K to some single vertex (any vertex). This is
 * the right form for deciding collapsibility: fixing one vertex up front can
 * misreport complexes that only collapse to a different point.
 */
CollapseSearchResult search_collapse_to_point(const SimplicialComplex& K,
                                              const std::optional<std::set<CollapseKind>>& kind_filter,
                                              std::uint64_t budget);

/**
 * Constructive disk-to-tree collapse: D a triangulated 2-disk, T a tree (edge
 * list) in its 1-skeleton with >= 2 vertices. Output kinds are only
 * (2,0)/(2,1); follows the recursive proof (prefer disk-preserving collapses,
 * otherwise split at a wedge vertex).
 */
CollapseCertificate disk_to_tree(const SimplicialComplex& D, const std::vector<Simplex>& tree_edges);

/// Text form: optional header `kinds: (2,0),(2,1)`, then one line per step,
/// `C <free-face-vertices> | <containing-facet-vertices>`.
std::string write_collapse_certificate(const CollapseCertificate& cert);
CollapseCertificate parse_collapse_certificate(const std::string& text);

/**
 * Mutable replay/query workspace over an immutable complex. Used by the
 * engines and the reduction schedules; exposed because incremental free-face
 * queries during a long schedule are far cheaper than rebuilding complexes.
 */
class CollapseWorkspace {
 public:
  explicit CollapseWorkspace(const SimplicialComplex& K);

  size_t total_faces() const { return faces_.size(); }
  size_t alive_faces() const { return alive_count_; }
  bool alive(const Simplex& s) const;
  /// If s is free, returns its unique containing facet.
  std::optional<Simplex> free_in(const Simplex& s) const;
  /// All (free face, containing facet) pairs of the current complex.
  std::vector<std::pair<Simplex, Simplex>> free_pairs() const;
  /// Collapse through free face s (removes s and all alive cofaces).
  CollapseStep collapse_through(const Simplex& s);
  /// Current complex (reconstructed; prefer queries for hot paths).
  SimplicialComplex current() const;

  // --- integer-id layer (search internals; stable (dim,lex) face ids) ---
  int id_of(const Simplex& s) const;
  const Simplex& face_of(int id) const { return faces_[static_cast<size_t>(id)]; }
  bool alive_id(int id) const { return alive_[static_cast<size_t>(id)] != 0; }
  /// -1 if not free; else id of unique containing alive facet.
  int free_facet_id(int id) const;
  /// Removes face id and all alive cofaces; appends removed ids to `removed`.
  void remove_cascade(int id, std::vector<int>& removed);
  /// Undo a remove_cascade (ids must be exactly the removed list).
  void restore(const std::vector<int>& removed);
  const std::vector<int>& cofaces(int id) const { return super_[static_cast<size_t>(id)]; }
  const std::vector<int>& subfaces(int id) const { return sub_[static_cast<size_t>(id)]; }
  const std::vector<std::uint64_t>& alive_words() const { return alive_words_; }

 private:
  std::vector<Simplex> faces_;
  std::map<Simplex, int, FaceLess> index_;
  std::vector<std::vector<int>> sub_, super_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint64_t> alive_words_;
  std::vector<int> alive_cofaces_;  ///< per face: # alive strict cofaces
  size_t alive_count_ = 0;

  void kill(int id);
  void revive(int id);
};

}  // namespace shard

#endif
