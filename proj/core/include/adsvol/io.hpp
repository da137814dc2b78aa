#pragma once

#include <string>

#include "adsvol/boundary.hpp"

namespace adsvol {

/// Reads a whole file; throws ErrorKind::Parse if it cannot be read.
std::string read_file(const std::string& path);

/// {"ambient_dim", "facets": [{"a", "b": [...], "c"}], "bound_box": {"min", "max"},
///  "lower_box": {"min", "max"} | "empty"}. Both boxes are optional.
GoodPolytope parse_polytope(const std::string& text);
std::string polytope_to_json(const GoodPolytope& P);

/// List of moves (or {"moves": [...]}) tagged "linear", "translation", "similarity", "inversion_j", "inversion_jminus".
IsometryWord parse_word(const std::string& text, int ambient_dim);
std::string word_to_json(const IsometryWord& w);

/// {"vertices": [[p, q], ...], "sides": [{"type": "segment"} | {"type": "conic", "a", "b": [b1, b2], "c"}]}.
BoundaryPolygon parse_polygon(const std::string& text);
std::string polygon_to_json(const BoundaryPolygon& G);

}  // namespace adsvol
