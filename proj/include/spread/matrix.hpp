#pragma once

#include <cstddef>

#include "spread/poly.hpp"

namespace spread {

/// 2x2 matrix with polynomial entries, row major.
struct PolyMatrix2 {
  Poly a11, a12, a21, a22;

  static PolyMatrix2 identity();

  Poly det() const { return a11 * a22 - a12 * a21; }

  friend PolyMatrix2 operator*(const PolyMatrix2& l, const PolyMatrix2& r);
  friend bool operator==(const PolyMatrix2&, const PolyMatrix2&) = default;
};

/// m^n by repeated squaring; m^0 is the identity.
PolyMatrix2 mat2_pow(const PolyMatrix2& m, std::size_t n);

}  // namespace spread
