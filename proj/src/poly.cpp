#include "spread/poly.hpp"

#include <stdexcept>
#include <utility>

#include "spread/error.hpp"
#include "spread/kernels.hpp"

namespace spread {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ParityViolation: return "ParityViolation";
    case Errc::RadicandMismatch: return "RadicandMismatch";
    case Errc::NonUnit: return "NonUnit";
    case Errc::PalindromeViolation: return "PalindromeViolation";
    case Errc::UnknownIdentity: return "UnknownIdentity";
    case Errc::InvalidBounds: return "InvalidBounds";
    case Errc::OutOfDomain: return "OutOfDomain";
  }
  return "Unknown";
}

std::size_t Degree::value() const {
  if (!finite_) throw std::logic_error("degree of the zero polynomial has no value");
  return value_;
}

Poly::Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Poly Poly::constant(const Coeff& c) { return Poly(std::vector<Coeff>{c}); }

Poly Poly::monomial(const Coeff& c, std::size_t k) {
  std::vector<Coeff> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::from_ints(std::initializer_list<long> ascending) {
  std::vector<Coeff> v;
  v.reserve(ascending.size());
  for (long c : ascending) v.emplace_back(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Degree Poly::degree() const noexcept {
  return coeffs_.empty() ? Degree::neg_infinity() : Degree(coeffs_.size() - 1);
}

Coeff Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff(0); }

Coeff Poly::leading() const { return coeffs_.empty() ? Coeff(0) : coeffs_.back(); }

bool Poly::is_integer() const {
  for (const auto& c : coeffs_)
    if (!is_integral(c)) return false;
  return true;
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

Coeff Poly::eval(const Coeff& v) const {
  Coeff acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

double Poly::eval_float(double v) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + it->get_d();
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly Poly::pow(std::size_t k) const {
  Poly result = Poly::constant(Coeff(1));
  Poly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Poly r = *this;
  const Coeff lead = leading();
  for (auto& c : r.coeffs_) c /= lead;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  *this = *this * rhs;
  return *this;
}

Poly& Poly::operator*=(const Coeff& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  Poly r;
  r.coeffs_ = kernels::convolve(lhs.coeffs_, rhs.coeffs_);
  r.trim();
  return r;
}

DivMod divmod(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero polynomial");
  const auto qc = q.coefficients();
  const std::size_t dq = qc.size() - 1;
  std::vector<Coeff> rem(p.coefficients().begin(), p.coefficients().end());
  if (rem.size() <= dq) return {Poly{}, p};

  std::vector<Coeff> quot(rem.size() - dq);
  const Coeff& lead = qc.back();
  for (std::size_t i = rem.size(); i-- > dq;) {
    if (sgn(rem[i]) == 0) continue;
    const Coeff f = rem[i] / lead;
    quot[i - dq] = f;
    for (std::size_t j = 0; j <= dq; ++j) rem[i - dq + j] -= f * qc[j];
  }
  rem.resize(dq);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly div_exact(const Poly& p, const Poly& q) {
  auto [quot, rem] = divmod(p, q);
  if (!rem.is_zero()) throw Error(Errc::NotDivisible, "nonzero remainder in exact division");
  return quot;
}

Poly gcd_monic(Poly p, Poly q) {
  p = p.monic();
  q = q.monic();
  while (!q.is_zero()) {
    Poly r = divmod(p, q).remainder.monic();
    p = std::move(q);
    q = std::move(r);
  }
  return p;
}

Poly even_part(const Poly& p) {
  const auto c = p.coefficients();
  std::vector<Coeff> out;
  out.reserve(c.size() / 2 + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 0) {
      out.push_back(c[i]);
    } else if (sgn(c[i]) != 0) {
      throw Error(Errc::ParityViolation, "odd-degree term in even_part");
    }
  }
  return Poly(std::move(out));
}

Poly odd_part(const Poly& p) {
  const auto c = p.coefficients();
  std::vector<Coeff> out;
  out.reserve(c.size() / 2 + 1);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i % 2 == 1) {
      out.push_back(c[i]);
    } else if (sgn(c[i]) != 0) {
      throw Error(Errc::ParityViolation, "even-degree term in odd_part");
    }
  }
  return Poly(std::move(out));
}

Poly compose_laurent(const Poly& p, const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "compose_laurent with zero denominator");
  if (p.is_zero()) return {};
  const auto c = p.coefficients();
  const std::size_t d = c.size() - 1;

  // den^(d-k) for k = d..0, built upward.
  std::vector<Poly> den_pows(d + 1);
  den_pows[0] = Poly::constant(Coeff(1));
  for (std::size_t j = 1; j <= d; ++j) den_pows[j] = den_pows[j - 1] * den;

  Poly acc;
  Poly num_pow = Poly::constant(Coeff(1));
  for (std::size_t k = 0; k <= d; ++k) {
    if (sgn(c[k]) != 0) acc += (num_pow * den_pows[d - k]) * c[k];
    if (k < d) num_pow = num_pow * num;
  }
  return acc;
}

}  // namespace spread
