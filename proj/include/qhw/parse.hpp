#pragma once

#include <string>
#include <vector>

#include "qhw/rep.hpp"

namespace qw {

struct ParsedAlgebra {
  Field field = Field::rationals();
  Quiver quiver;
  std::vector<Relation> relations;
  std::optional<Poset> order;
};

// Text format (one directive per line, '#' starts a comment):
//   field Q            | field F5
//   vertex 1 2 3
//   arrow a : 1 -> 2
//   relation b*a
//   relation 1 b*a - 1 d*c       (coefficients integer or num/den, default 1)
//   order 1 < 2, 1 < 3
// `filename` is only used to prefix error messages (file:line).
ParsedAlgebra parse_algebra(const std::string& text, const std::string& filename = "<input>");

Algebra build_parsed(const ParsedAlgebra& pa, int max_nilpotency = 64);

struct ParsedPoset {
  std::vector<std::string> names;
  std::vector<int> heights;
  Poset poset;
};

// Text format:
//   element e height 0
//   cover e < s
// Declared heights must match the longest-chain height from the covers.
ParsedPoset parse_poset(const std::string& text, const std::string& filename = "<input>");

// Module list format (validated against the algebra: shapes + relations):
//   module M
//   dim 1 2            (vertex, dimension; omitted vertices are 0)
//   map a 1 2 3/2      (arrow, row, column (1-based), scalar)
//   end
std::vector<NamedRep> parse_modules(const std::string& text, const Algebra& A,
                                    const std::string& filename = "<input>");

std::string read_text_file(const std::string& path);

}  // namespace qw
