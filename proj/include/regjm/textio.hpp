#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "regjm/arith.hpp"
#include "regjm/freemod.hpp"

namespace regjm {

/// Parses `3*x0^2*y1 - y2^3 + ...`. Whitespace is ignored; a coefficient may
/// appear as any factor of a term. Throws InvalidInput on malformed text and
/// HomogeneityError on non-homogeneous input.
Polynomial parse_polynomial(const RingContext& ring, std::string_view text);

/// Prints coefficients in the symmetric range (-p/2, p/2].
std::string format_polynomial(const RingContext& ring, const Polynomial& f);
std::string format_monomial(const RingContext& ring, const Monomial& m);

/// Matrix text format:
///
///     matrix <target twists> <- <source twists>
///     <column 0>
///     <column 1>
///     ...
///
/// where a column is `row: poly; row: poly; ...` or `0` for the zero column.
GradedMatrix parse_matrix(const RingContext& ring, std::string_view text);
std::string format_matrix(const RingContext& ring, const GradedMatrix& m);

/// Strips comments (`#` to end of line) and blank lines.
std::vector<std::string> content_lines(std::string_view text);

}  // namespace regjm
