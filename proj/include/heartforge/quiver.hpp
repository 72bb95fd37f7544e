#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "heartforge/field.hpp"

namespace heartforge {

struct Arrow {
  std::string name;
  std::size_t from = 0;  // source vertex index
  std::size_t to = 0;    // target vertex index
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  std::size_t vertex_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;
  bool is_acyclic() const;
  /// Length of the longest path; only meaningful for acyclic quivers.
  std::size_t longest_path_length() const;
  bool is_connected() const;  // as undirected graph
  std::vector<std::size_t> sources() const;
  std::vector<std::size_t> sinks() const;
};

/// One scalar multiple of a path, the path given by arrow names composed
/// left to right ([a, d] means traverse a, then d).
struct RelationTerm {
  Rat coeff;
  std::vector<std::string> arrows;
};

/// A relation is a linear combination of parallel paths of length >= 2.
using Relation = std::vector<RelationTerm>;

struct QuiverPresentation {
  FieldSpec field;
  Quiver quiver;
  std::vector<Relation> relations;
};

}  // namespace heartforge
