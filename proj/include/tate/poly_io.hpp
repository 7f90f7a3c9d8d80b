#pragma once

#include "tate/polynomial.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tate {

/// Syntax or naming error with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses one polynomial over the given variables. Grammar: terms joined by
/// + or -, each term `[rational][*]var[^exp][*]var...`; whitespace is ignored.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

struct ParsedInput {
  std::vector<std::string> variables;
  std::vector<Polynomial> polynomials;
  std::vector<std::string> warnings;
};

/// Parses a generator list: one or more polynomials per line separated by
/// ';' or ',', '#' comments, and an optional `vars: a, b, c` line. Without a
/// declaration (or `declared`), variables are collected from the input:
/// sorted by index when all look like `<prefix><n>` with one prefix, in
/// order of first appearance otherwise. Zero polynomials are dropped with a
/// warning.
ParsedInput parse_input(std::string_view text,
                        const std::optional<std::vector<std::string>>& declared = std::nullopt);

std::string format_term(const Term& t, const std::vector<std::string>& variables);
/// Terms in descending order under `order`, or in reverse storage order
/// when no order is given.
std::string format_polynomial(const Polynomial& f, const std::vector<std::string>& variables,
                              const TateOrder* order = nullptr);

/// x1..xn (or x0..x{n-1} when `from_zero`).
std::vector<std::string> default_variable_names(std::size_t n, bool from_zero = false);

}  // namespace tate
