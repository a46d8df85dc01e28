#include "spread/matrix.hpp"

namespace spread {

PolyMatrix2 PolyMatrix2::identity() {
  const Poly one = Poly::constant(Coeff(1));
  return {one, Poly{}, Poly{}, one};
}

PolyMatrix2 operator*(const PolyMatrix2& l, const PolyMatrix2& r) {
  return {l.a11 * r.a11 + l.a12 * r.a21, l.a11 * r.a12 + l.a12 * r.a22,
          l.a21 * r.a11 + l.a22 * r.a21, l.a21 * r.a12 + l.a22 * r.a22};
}

PolyMatrix2 mat2_pow(const PolyMatrix2& m, std::size_t n) {
  PolyMatrix2 result = PolyMatrix2::identity();
  PolyMatrix2 base = m;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace spread
