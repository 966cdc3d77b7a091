#pragma once

// One complex per line: `1,2,3;1,2,4;1,3,4;2,3,4`.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "surfenum/complex.hpp"

namespace surfenum {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses one line. Triangles must be written sorted (`1,2,3`, not `2,1,3`) and
/// the list must be strictly increasing. When `n` is absent the ground set is
/// {1..max label}. Diagnostics report 1-based line/column.
TriangleSet parse_complex(std::string_view text, std::optional<int> n = std::nullopt,
                          int line_number = 1);

std::string format_complex(const TriangleSet& c);

struct NumberedComplex {
  int line = 0;
  TriangleSet complex;
};

/// Reads every non-blank line that does not start with `#`.
std::vector<NumberedComplex> read_complexes(std::istream& in);
std::vector<NumberedComplex> read_complex_file(const std::string& path);

}  // namespace surfenum
