#include "spread/quadext.hpp"

#include <utility>

#include "spread/error.hpp"

namespace spread {

namespace {

void require_radicand(const QuadExt& u, const QuadExt& v) {
  if (!(u.radicand() == v.radicand()))
    throw Error(Errc::RadicandMismatch, "quadratic extension operands over different radicands");
}

const Coeff kHalf(1, 2);

}  // namespace

QuadExt::QuadExt(Poly radicand, Poly a, Poly b)
    : radicand_(std::move(radicand)), a_(std::move(a)), b_(std::move(b)) {}

Poly QuadExt::norm() const { return a_ * a_ - b_ * b_ * radicand_; }

QuadExt QuadExt::pow(std::size_t n) const {
  QuadExt result(radicand_, Poly::constant(Coeff(1)));
  QuadExt base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

QuadExt QuadExt::inv() const {
  const Poly n = norm();
  if (n.is_zero() || n.degree() != Degree(0))
    throw Error(Errc::NonUnit, "norm is not a nonzero constant");
  const Coeff r = 1 / n.coeff(0);
  return QuadExt(radicand_, a_ * r, -(b_ * r));
}

QuadExt operator+(const QuadExt& u, const QuadExt& v) {
  require_radicand(u, v);
  return QuadExt(u.radicand_, u.a_ + v.a_, u.b_ + v.b_);
}

QuadExt operator-(const QuadExt& u, const QuadExt& v) {
  require_radicand(u, v);
  return QuadExt(u.radicand_, u.a_ - v.a_, u.b_ - v.b_);
}

QuadExt operator*(const QuadExt& u, const QuadExt& v) {
  require_radicand(u, v);
  return QuadExt(u.radicand_, u.a_ * v.a_ + u.b_ * v.b_ * u.radicand_, u.a_ * v.b_ + u.b_ * v.a_);
}

QuadExt operator*(const QuadExt& u, const Poly& p) { return QuadExt(u.radicand_, u.a_ * p, u.b_ * p); }

UnitPair make_alpha() {
  const Poly x = Poly::x();
  const Poly d = Poly::from_ints({4, 0, 1});
  QuadExt alpha(d, x * kHalf, Poly::constant(kHalf));
  return {alpha, alpha.conj()};
}

UnitPair make_beta() {
  const Poly x = Poly::x();
  const Poly d = Poly::from_ints({-4, 0, 1});
  QuadExt beta(d, x * kHalf, Poly::constant(kHalf));
  return {beta, beta.conj()};
}

UnitPair make_lambda() {
  const Poly d = Poly::from_ints({0, -4, 1});
  QuadExt lambda(d, Poly::from_ints({2, -1}) * kHalf, Poly::constant(kHalf));
  return {lambda, lambda.conj()};
}

BiQuadExt::BiQuadExt(Poly d1, Poly d2, std::array<Poly, 4> c)
    : d1_(std::move(d1)), d2_(std::move(d2)), c_(std::move(c)) {}

BiQuadExt BiQuadExt::embed(const Poly& d1, const Poly& d2, const QuadExt& u) {
  if (!(u.radicand() == d1 * d2))
    throw Error(Errc::RadicandMismatch, "embedding radicand must equal D1*D2");
  return BiQuadExt(d1, d2, {u.a(), Poly{}, Poly{}, u.b()});
}

void BiQuadExt::require_same(const BiQuadExt& other) const {
  if (!(d1_ == other.d1_) || !(d2_ == other.d2_))
    throw Error(Errc::RadicandMismatch, "biquadratic operands over different radicand pairs");
}

BiQuadExt BiQuadExt::pow(std::size_t n) const {
  BiQuadExt result(d1_, d2_, {Poly::constant(Coeff(1)), Poly{}, Poly{}, Poly{}});
  BiQuadExt base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

BiQuadExt BiQuadExt::operator-() const {
  return BiQuadExt(d1_, d2_, {-c_[0], -c_[1], -c_[2], -c_[3]});
}

BiQuadExt operator+(const BiQuadExt& u, const BiQuadExt& v) {
  u.require_same(v);
  return BiQuadExt(u.d1_, u.d2_,
                   {u.c_[0] + v.c_[0], u.c_[1] + v.c_[1], u.c_[2] + v.c_[2], u.c_[3] + v.c_[3]});
}

BiQuadExt operator-(const BiQuadExt& u, const BiQuadExt& v) { return u + (-v); }

// Basis 1, r1 = sqrt(D1), r2 = sqrt(D2), r3 = r1*r2:
//   r1^2 = D1, r2^2 = D2, r3^2 = D1*D2, r1*r3 = D1*r2, r2*r3 = D2*r1.
BiQuadExt operator*(const BiQuadExt& u, const BiQuadExt& v) {
  u.require_same(v);
  const auto& [u0, u1, u2, u3] = u.c_;
  const auto& [v0, v1, v2, v3] = v.c_;
  const Poly& d1 = u.d1_;
  const Poly& d2 = u.d2_;
  Poly c0 = u0 * v0 + d1 * (u1 * v1) + d2 * (u2 * v2) + d1 * d2 * (u3 * v3);
  Poly c1 = u0 * v1 + u1 * v0 + d2 * (u2 * v3 + u3 * v2);
  Poly c2 = u0 * v2 + u2 * v0 + d1 * (u1 * v3 + u3 * v1);
  Poly c3 = u0 * v3 + u3 * v0 + u1 * v2 + u2 * v1;
  return BiQuadExt(d1, d2, {std::move(c0), std::move(c1), std::move(c2), std::move(c3)});
}

BiUnitPair make_mu() {
  const Poly d1 = Poly::x();
  const Poly d2 = Poly::from_ints({-4, 1});
  const Poly half = Poly::constant(kHalf);
  BiQuadExt mu(d1, d2, {Poly{}, half, half, Poly{}});
  BiQuadExt mu_bar(d1, d2, {Poly{}, -half, half, Poly{}});
  return {mu, mu_bar};
}

}  // namespace spread
