#pragma once

#include <iosfwd>
#include <optional>
#include <string_view>

#include "boolring/poly.hpp"

namespace boolring {

/// Parses one polynomial expression. Grammar (whitespace separated):
///   poly   := term ('+' term)*
///   term   := factor ('*' factor)*
///   factor := '1' | '0' | 'x'<digits> ['^'<digits>]
/// Variables are 1-based ("x1".."xN"); exponents reduce idempotently
/// (x1^3 == x1) and repeated variables within a term collapse. When `vars`
/// is given, indices beyond it are errors; otherwise the width is inferred
/// from the largest index seen (at least 1).
BoolPoly parse_poly(std::string_view text, std::optional<unsigned> vars = std::nullopt);

/// Reads the one-polynomial-per-line file format: optional leading
/// "vars <n>" line, '#' comments, UTF-8. `vars_override` wins over the
/// file's own declaration.
PolySystem parse_poly_file(std::istream& in,
                           std::optional<unsigned> vars_override = std::nullopt);

}  // namespace boolring
