#include "shard/scx.hpp"

#include <sstream>

namespace shard {

SimplicialComplex Bundle::mark_subcomplex(const std::string& name) const {
  auto it = marks.find(name);
  if (it == marks.end()) throw ParseError("no mark named " + name);
  return complex.generated_by(it->second);
}

Bundle parse_scx(const std::string& text) {
  Bundle b;
  std::vector<Simplex> facets;
  std::string current_mark;  // empty = facet section
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks[0] == "@mark") {
      if (toks.size() != 2)
        throw ParseError("line " + std::to_string(lineno) + ": @mark needs a name");
      current_mark = toks[1];
      b.marks[current_mark];  // allow empty marks
      continue;
    }
    if (toks[0] == "@meta") {
      if (toks.size() < 3)
        throw ParseError("line " + std::to_string(lineno) + ": @meta needs key and value");
      std::string val = toks[2];
      for (size_t i = 3; i < toks.size(); ++i) val += " " + toks[i];
      b.meta[toks[1]] = val;
      continue;
    }
    if (toks[0][0] == '@')
      throw ParseError("line " + std::to_string(lineno) + ": unknown directive " + toks[0]);
    Simplex s = make_simplex(toks);
    if (current_mark.empty())
      facets.push_back(std::move(s));
    else
      b.marks[current_mark].push_back(std::move(s));
  }
  if (facets.empty()) throw ParseError("scx: no facet lines");
  b.complex = SimplicialComplex::from_facets(std::move(facets));
  for (const auto& [name, fs] : b.marks)
    for (const auto& f : fs)
      if (!b.complex.contains(f))
        throw ParseError("mark " + name + ": face " + to_string(f) + " not in complex");
  return b;
}

std::string write_scx(const Bundle& b) {
  std::ostringstream out;
  for (const auto& [k, v] : b.meta) out << "@meta " << k << ' ' << v << '\n';
  for (const auto& f : b.complex.facets()) out << to_string(f) << '\n';
  for (const auto& [name, fs] : b.marks) {
    out << "@mark " << name << '\n';
    for (const auto& f : fs) out << to_string(f) << '\n';
  }
  return out.str();
}

}  // namespace shard
