#pragma once

// Infix polynomial syntax: integers, a/b rationals, identifiers, + - * ^ and
// parentheses. Exponents are nonnegative integer literals.

#include <stdexcept>
#include <string>
#include <string_view>

#include "polyopt/mpoly.hpp"

namespace polyopt {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses `text` over `ring`; unknown identifiers are errors. `line` is only
/// used to label errors; columns are 1-based offsets into `text` plus
/// `column_offset`.
MPoly parse_polynomial(std::string_view text, const RingPtr& ring, int line = 1, int column_offset = 0);

}  // namespace polyopt
