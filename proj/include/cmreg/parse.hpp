#pragma once

#include "cmreg/polynomial.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cmreg {

/// Syntax or name error. `position()` is a 0-based byte offset into the
/// parsed line; `line()` is 1-based and 0 when parsing a lone polynomial.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0);

  std::size_t position() const { return position_; }
  std::size_t line() const { return line_; }

 private:
  std::size_t position_;
  std::size_t line_;
};

/// Grammar:
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ['^' nat]
///   coeff  := int ['/' nat]
/// Whitespace is ignored between tokens; `*` is required between factors.
Polynomial parse_polynomial(std::string_view text, const Ring& ring);

struct IdealFile {
  Ring ring;
  std::vector<Polynomial> generators;
};

/// Line 1 is `ring: x1 x2 ... xn`; every later nonempty line holds one
/// generator. `#` starts a comment.
IdealFile parse_ideal_file(std::string_view text);
IdealFile read_ideal_file(const std::filesystem::path& path);

std::string format_ideal_file(const Ring& ring, const std::vector<Polynomial>& gens);

}  // namespace cmreg
