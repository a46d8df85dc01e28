#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spread/poly.hpp"

namespace spread {

/// Ascending "c0 + c1*x + c2*x^2" with zero terms omitted and unit
/// coefficients elided, e.g. "9*x - 6*x^2 + x^3". The zero polynomial is "0".
std::string to_text(const Poly& p, std::string_view var = "x");

/// Ascending coefficients as decimal strings ("p" or "p/q").
std::vector<std::string> to_decimal_strings(const Poly& p);

/// Inverse of to_decimal_strings; nullopt if any entry fails to parse.
std::optional<Poly> from_decimal_strings(const std::vector<std::string>& coeffs);

}  // namespace spread
