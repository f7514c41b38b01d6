#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "socle/polynomial.hpp"

namespace socle {

/// Syntax error with a 1-based source position.
class ParseError : public InputError {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_, column_;
};

/// Polynomial expression: integers, variable names, + - * ^, division by a
/// nonzero constant, parentheses, unary minus.
Polynomial parse_polynomial(const RingPtr& R, std::string_view text);
/// Comma-separated expressions; empty text gives an empty list.
std::vector<Polynomial> parse_polynomial_list(const RingPtr& R, std::string_view text);

struct NamedIdeal {
  std::string name;
  std::vector<Polynomial> gens;
};

/// A presented ring: field, variables, weights, defining ideal and named
/// ideal bindings.
struct RingFile {
  RingPtr ring;
  std::vector<Polynomial> quotient;
  std::vector<NamedIdeal> ideals;

  const NamedIdeal* find(const std::string& name) const;
};

RingFile parse_ring_file(std::string_view text);
std::string print_ring_file(const RingFile& file);
/// Same presentation, polynomials compared term by term.
bool structurally_equal(const RingFile& a, const RingFile& b);

}  // namespace socle
