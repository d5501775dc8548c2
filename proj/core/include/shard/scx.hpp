/**
 * @file scx.hpp
 * @brief `.scx` text format: one facet per line, `#` comments, and named
 *        marked subcomplexes in `@mark <name>` sections.
 */
#ifndef SHARD_SCX_HPP
#define SHARD_SCX_HPP

#include <map>
#include <string>
#include <vector>

#include "shard/complex.hpp"

namespace shard {

struct ParseError : DomainError { using DomainError::DomainError; };

/// A complex bundled with named marked subcomplexes and a parameter record.
struct Bundle {
  SimplicialComplex complex;
  /// mark name -> generating faces (downward-closed within the host).
  std::map<std::string, std::vector<Simplex>> marks;
  /// free-form parameter record, serialized as `@meta key value` lines.
  std::map<std::string, std::string> meta;

  /// Faces of a mark; throws NotAFace if the mark leaves the host complex.
  SimplicialComplex mark_subcomplex(const std::string& name) const;
  bool has_mark(const std::string& name) const { return marks.count(name) > 0; }
};

Bundle parse_scx(const std::string& text);
std::string write_scx(const Bundle& b);

}  // namespace shard

#endif
