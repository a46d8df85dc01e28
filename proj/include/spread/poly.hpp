#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "spread/rational.hpp"

namespace spread {

/// Degree of a polynomial. The zero polynomial has a sentinel degree that
/// compares below every natural number.
class Degree {
 public:
  static constexpr Degree neg_infinity() noexcept { return Degree{}; }
  constexpr explicit Degree(std::size_t d) noexcept : finite_{true}, value_{d} {}

  constexpr bool is_finite() const noexcept { return finite_; }
  /// Throws std::logic_error on the sentinel.
  std::size_t value() const;

  friend constexpr auto operator<=>(const Degree&, const Degree&) = default;
  friend constexpr bool operator==(const Degree&, const Degree&) = default;

 private:
  constexpr Degree() noexcept = default;

  bool finite_ = false;
  std::size_t value_ = 0;
};

/// Dense univariate polynomial over the rationals, ascending degree order.
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Coeff> coeffs);

  static Poly constant(const Coeff& c);
  static Poly monomial(const Coeff& c, std::size_t k);
  static Poly x() { return monomial(Coeff(1), 1); }
  static Poly from_ints(std::initializer_list<long> ascending);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  Degree degree() const noexcept;
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Coeff> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero past the end.
  Coeff coeff(std::size_t k) const;
  /// Leading coefficient; zero for the zero polynomial.
  Coeff leading() const;

  bool is_integer() const;
  bool is_monic() const;

  Coeff eval(const Coeff& v) const;
  double eval_float(double v) const;

  Poly compose(const Poly& inner) const;
  Poly pow(std::size_t k) const;
  /// Divide by the leading coefficient. Zero stays zero.
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Coeff& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly p, const Coeff& c) { return p *= c; }
  friend Poly operator*(const Coeff& c, Poly p) { return p *= c; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<Coeff> coeffs_;
};

inline Poly operator+(Poly p, long c) { return p + Poly::constant(Coeff(c)); }
inline Poly operator+(long c, Poly p) { return std::move(p) + c; }
inline Poly operator-(Poly p, long c) { return p - Poly::constant(Coeff(c)); }
inline Poly operator-(long c, const Poly& p) { return Poly::constant(Coeff(c)) - p; }

inline Poly add(const Poly& p, const Poly& q) { return p + q; }
inline Poly sub(const Poly& p, const Poly& q) { return p - q; }
inline Poly neg(const Poly& p) { return -p; }
inline Poly mul(const Poly& p, const Poly& q) { return p * q; }
inline Poly scale(const Poly& p, const Coeff& c) { return p * c; }
inline Poly pow(const Poly& p, std::size_t k) { return p.pow(k); }
inline Poly compose(const Poly& outer, const Poly& inner) { return outer.compose(inner); }
inline Coeff eval(const Poly& p, const Coeff& v) { return p.eval(v); }
inline double eval_float(const Poly& p, double v) { return p.eval_float(v); }
inline Degree degree(const Poly& p) { return p.degree(); }
inline bool is_integer(const Poly& p) { return p.is_integer(); }
inline bool is_monic(const Poly& p) { return p.is_monic(); }

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Long division over the rationals. Throws DivisionByZero when q is zero.
DivMod divmod(const Poly& p, const Poly& q);

/// r with q*r == p. Throws NotDivisible or DivisionByZero.
Poly div_exact(const Poly& p, const Poly& q);

/// Monic gcd over Q. gcd(0, p) = monic(p), gcd(0, 0) = 0.
Poly gcd_monic(Poly p, Poly q);

/// e with e(x^2) == p. Throws ParityViolation if p has an odd-degree term.
Poly even_part(const Poly& p);
/// o with x*o(x^2) == p. Throws ParityViolation if p has an even-degree term.
Poly odd_part(const Poly& p);

/// den^d * p(num/den) with d = deg p, expanded as
/// sum_k p_k num^k den^(d-k). Zero for the zero polynomial.
Poly compose_laurent(const Poly& p, const Poly& num, const Poly& den);

}  // namespace spread
