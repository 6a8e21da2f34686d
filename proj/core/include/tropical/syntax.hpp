#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tropical/polynomial.hpp"

namespace tropical {

struct ParseOptions {
  /// Fixes the arity; variables beyond it are an ArityMismatch.
  std::optional<std::size_t> arity_hint;
  /// Full-close the parsed result. Products and powers are otherwise raw.
  bool reduced = false;
  /// Largest total degree any intermediate result may reach.
  unsigned max_degree = 1000;
  /// Largest number of terms any intermediate result may hold.
  std::size_t max_terms = 200000;
};

/// Grammar (see docs/grammar.md):
///   expr    = term { "+" term }
///   term    = factor { [ "*" ] factor }
///   factor  = primary [ "^" uint ]
///   primary = number | "-inf" | variable | "(" expr ")"
Polynomial parse_poly(std::string_view text, const ParseOptions& options = {});

/// Canonical text: graded-lex descending terms, "v" marks ghosts, "-inf" for the empty
/// polynomial. Variables are x, y, z for arity up to 3 and x1..xn beyond.
std::string format_poly(const Polynomial& f);

/// Variable name used by format_poly.
std::string variable_name(std::size_t arity, std::size_t index);

}  // namespace tropical
