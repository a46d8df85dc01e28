#include "spread/cyclofactor.hpp"

#include <mutex>
#include <numeric>
#include <string>

#include "spread/error.hpp"

namespace spread {

namespace {

void require_at_least(std::uint64_t n, std::uint64_t lo, const char* what) {
  if (n < lo)
    throw Error(Errc::OutOfDomain, std::string(what) + " requires n >= " + std::to_string(lo));
}

}  // namespace

std::uint64_t totient(std::uint64_t n) {
  require_at_least(n, 1, "totient");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Poly Factorization::product() const {
  Poly p = Poly::constant(Coeff(sign));
  for (const auto& f : factors) p = p * f.factor;
  return p;
}

Poly psi_from_palindrome(const Poly& cyclotomic, const FamilyCache& families) {
  const auto a = cyclotomic.coefficients();
  if (a.empty() || a.size() % 2 == 0)
    throw Error(Errc::PalindromeViolation, "expected a polynomial of even degree");
  const std::size_t m = (a.size() - 1) / 2;
  for (std::size_t k = 1; k <= m; ++k)
    if (a[m + k] != a[m - k])
      throw Error(Errc::PalindromeViolation, "coefficients " + std::to_string(m - k) + " and " +
                                                 std::to_string(m + k) + " differ");

  const Poly two_minus_x = Poly::from_ints({2, -1});
  Poly psi = Poly::constant(a[m]);
  for (std::size_t k = 1; k <= m; ++k)
    psi += families.lucas_minus(k).compose(two_minus_x) * a[m - k];
  return m % 2 == 0 ? psi : -psi;
}

Poly CycloTable::cyclotomic_locked(std::uint64_t n) const {
  if (auto it = cyclo_.find(n); it != cyclo_.end()) return it->second;
  Poly denom = Poly::constant(Coeff(1));
  for (auto d : divisors(n))
    if (d < n) denom = denom * cyclotomic_locked(d);
  Poly xn_minus_1 = Poly::monomial(Coeff(1), n) - 1;
  Poly c = div_exact(xn_minus_1, denom);
  cyclo_.emplace(n, c);
  return c;
}

Poly CycloTable::cyclotomic(std::uint64_t n) const {
  require_at_least(n, 1, "cyclotomic");
  {
    std::shared_lock lock(mutex_);
    if (auto it = cyclo_.find(n); it != cyclo_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  return cyclotomic_locked(n);
}

Poly CycloTable::minimal_phi(std::uint64_t n) const {
  require_at_least(n, 1, "minimal_phi");
  if (n == 1) return Poly::x();
  if (n == 2) return Poly::from_ints({-4, 1});
  {
    std::shared_lock lock(mutex_);
    if (auto it = phi_.find(n); it != phi_.end()) return it->second;
  }
  // Built outside the lock; a racing writer computes the same value.
  Poly psi = psi_from_palindrome(cyclotomic(n), families_);
  std::unique_lock lock(mutex_);
  return phi_.try_emplace(n, std::move(psi)).first->second;
}

Poly CycloTable::cap_phi(std::uint64_t n) const {
  Poly phi = minimal_phi(n);
  return n <= 2 ? phi : phi * phi;
}

Poly CycloTable::rho(std::uint64_t n) const {
  require_at_least(n, 2, "rho");
  if (n == 2) return Poly::x();
  return minimal_phi(n).compose(Poly::from_ints({4, 0, 1}));
}

Factorization CycloTable::factor_z(std::uint64_t n) const {
  require_at_least(n, 1, "factor_z");
  Factorization f;
  f.n = n;
  f.sign = n % 2 == 1 ? 1 : -1;
  for (auto d : divisors(n))
    f.factors.push_back({d, cap_phi(d), d <= 2 ? FactorRole::Linear : FactorRole::MinimalSquared});
  f.verified = f.product() == families_.herbig_z(n);
  return f;
}

Factorization CycloTable::factor_fib(std::uint64_t n) const {
  require_at_least(n, 1, "factor_fib");
  Factorization f;
  f.n = n;
  f.sign = 1;
  for (auto d : divisors(n))
    if (d > 1) f.factors.push_back({d, rho(d), FactorRole::Rho});
  f.verified = f.product() == families_.fib(n);
  return f;
}

CycloTable& shared_cyclo() {
  static CycloTable table(shared_families());
  return table;
}

}  // namespace spread
