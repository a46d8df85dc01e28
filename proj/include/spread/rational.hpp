#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace spread {

/// Exact rational coefficient. GMP keeps results of arithmetic in lowest
/// terms with a positive denominator.
using Coeff = mpq_class;

/// "p" or "p/q" in base 10, optional leading sign. Rejects q == 0.
std::optional<Coeff> parse_coeff(std::string_view text);

/// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string to_string(const Coeff& c);

inline bool is_integral(const Coeff& c) { return c.get_den() == 1; }

}  // namespace spread
