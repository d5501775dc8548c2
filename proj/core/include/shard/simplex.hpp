/**
 * @file simplex.hpp
 * @brief Vertex labels and abstract simplices (sorted vertex sets).
 */
#ifndef SHARD_SIMPLEX_HPP
#define SHARD_SIMPLEX_HPP

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace shard {

/// A vertex is a whitespace-free string token.
using Vertex = std::string;

/// An abstract simplex: a sorted, duplicate-free, nonempty vertex list.
using Simplex = std::vector<Vertex>;

/// Domain error hierarchy root.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Normalize a vertex list into a simplex (sort + dedupe).
inline Simplex make_simplex(std::vector<Vertex> verts) {
  if (verts.empty()) throw DomainError("make_simplex: empty vertex list");
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return verts;
}

/// Convenience literal-ish constructor: sx({"a","b"}).
inline Simplex sx(std::initializer_list<Vertex> verts) {
  return make_simplex(std::vector<Vertex>(verts));
}

/// Dimension = |vertices| - 1.
inline int dim_of(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// Subset test on sorted vertex lists.
inline bool is_face_of(const Simplex& a, const Simplex& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Simplex simplex_union(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Intersection may be empty; caller must check before using as a simplex.
inline std::vector<Vertex> simplex_intersection(const Simplex& a, const Simplex& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Set difference a \ b.
inline std::vector<Vertex> simplex_difference(const Simplex& a, const Simplex& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Deterministic order used everywhere: by dimension, then lexicographic.
struct FaceLess {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Render "a b c".
inline std::string to_string(const Simplex& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i];
  }
  return out;
}

/// All nonempty proper and improper subsets of a simplex, smallest first.
std::vector<Simplex> all_subfaces(const Simplex& s);

}  // namespace shard

#endif
