#pragma once

#include "ci2/poly/polynomial.hpp"

#include <optional>
#include <string_view>

namespace ci2 {

/// Parse the text grammar
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := integer ['/' integer] | 'x' index ['^' exponent]
/// e.g. "3*x0^2*x1 - 1/2*x2^3". Without `n_vars` the ring is sized by the
/// largest index seen. Errors carry `line` and a 1-based column.
Polynomial parse_polynomial(std::string_view text, Field field, std::optional<std::size_t> n_vars = std::nullopt,
                            std::size_t line = 1);

/// Largest variable index mentioned in `text` plus one (0 if none); no validation.
std::size_t count_variables(std::string_view text);

}  // namespace ci2
