#pragma once

#include <array>
#include <cstddef>

#include "spread/poly.hpp"

namespace spread {

/// a(x) + b(x)*sqrt(D(x)) with polynomial components over Q.
///
/// The radical is never evaluated: products use sqrt(D)^2 = D, so every
/// identity involving the characteristic roots can be checked exactly
/// without choosing a branch. Operands must share the radicand.
class QuadExt {
 public:
  explicit QuadExt(Poly radicand, Poly a = {}, Poly b = {});

  /// The base-field element p viewed in the extension over `radicand`.
  static QuadExt embed(const Poly& radicand, Poly p) { return QuadExt(radicand, std::move(p)); }

  const Poly& radicand() const noexcept { return radicand_; }
  const Poly& a() const noexcept { return a_; }
  const Poly& b() const noexcept { return b_; }

  QuadExt conj() const { return QuadExt(radicand_, a_, -b_); }
  /// a^2 - b^2 * D.
  Poly norm() const;
  QuadExt pow(std::size_t n) const;
  /// conj(u)/norm(u). Throws NonUnit unless the norm is a nonzero constant.
  QuadExt inv() const;

  QuadExt operator-() const { return QuadExt(radicand_, -a_, -b_); }
  friend QuadExt operator+(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator-(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator*(const QuadExt& u, const QuadExt& v);
  friend QuadExt operator*(const QuadExt& u, const Poly& p);
  friend QuadExt operator*(const Poly& p, const QuadExt& u) { return u * p; }

  friend bool operator==(const QuadExt&, const QuadExt&) = default;

 private:
  Poly radicand_;
  Poly a_;
  Poly b_;
};

inline QuadExt qe_add(const QuadExt& u, const QuadExt& v) { return u + v; }
inline QuadExt qe_sub(const QuadExt& u, const QuadExt& v) { return u - v; }
inline QuadExt qe_mul(const QuadExt& u, const QuadExt& v) { return u * v; }
inline QuadExt qe_conj(const QuadExt& u) { return u.conj(); }
inline QuadExt qe_pow(const QuadExt& u, std::size_t n) { return u.pow(n); }
inline Poly qe_norm(const QuadExt& u) { return u.norm(); }
inline QuadExt qe_inv(const QuadExt& u) { return u.inv(); }

/// A characteristic root and its conjugate.
struct UnitPair {
  QuadExt unit;
  QuadExt conjugate;
};

/// Roots of z^2 - x z - 1 over D = x^2 + 4.
UnitPair make_alpha();
/// Roots of z^2 - x z + 1 over D = x^2 - 4.
UnitPair make_beta();
/// Roots of z^2 - (2 - x) z + 1 over D = x^2 - 4x.
UnitPair make_lambda();

/// c0 + c1*sqrt(D1) + c2*sqrt(D2) + c3*sqrt(D1*D2).
///
/// D1, D2 and D1*D2 are assumed to be non-squares.
class BiQuadExt {
 public:
  BiQuadExt(Poly d1, Poly d2, std::array<Poly, 4> c);

  /// Sends a + b*sqrt(D1*D2) to (a, 0, 0, b). Throws RadicandMismatch when
  /// u's radicand is not D1*D2.
  static BiQuadExt embed(const Poly& d1, const Poly& d2, const QuadExt& u);

  const Poly& d1() const noexcept { return d1_; }
  const Poly& d2() const noexcept { return d2_; }
  const std::array<Poly, 4>& components() const noexcept { return c_; }

  BiQuadExt pow(std::size_t n) const;

  BiQuadExt operator-() const;
  friend BiQuadExt operator+(const BiQuadExt& u, const BiQuadExt& v);
  friend BiQuadExt operator-(const BiQuadExt& u, const BiQuadExt& v);
  friend BiQuadExt operator*(const BiQuadExt& u, const BiQuadExt& v);

  friend bool operator==(const BiQuadExt&, const BiQuadExt&) = default;

 private:
  void require_same(const BiQuadExt& other) const;

  Poly d1_;
  Poly d2_;
  std::array<Poly, 4> c_;
};

inline BiQuadExt bq_mul(const BiQuadExt& u, const BiQuadExt& v) { return u * v; }
inline BiQuadExt bq_pow(const BiQuadExt& u, std::size_t n) { return u.pow(n); }

struct BiUnitPair {
  BiQuadExt unit;
  BiQuadExt conjugate;
};

/// mu = (sqrt(x-4) + sqrt(x))/2 and mu_bar = (sqrt(x-4) - sqrt(x))/2 with
/// D1 = x, D2 = x - 4.
BiUnitPair make_mu();

}  // namespace spread
