#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <vector>

#include "spread/families.hpp"
#include "spread/poly.hpp"

namespace spread {

/// Euler's totient. Throws OutOfDomain for n == 0.
std::uint64_t totient(std::uint64_t n);

/// Divisors of n in increasing order, by trial division. Empty for n == 0.
std::vector<std::uint64_t> divisors(std::uint64_t n);

enum class FactorRole {
  Linear,          // Phi_1 = x, Phi_2 = x - 4
  MinimalSquared,  // Phi_d = phi_d^2, d >= 3
  Rho,             // rho_d in the Fibonacci product
};

struct FactorEntry {
  std::uint64_t d;
  Poly factor;
  FactorRole role;
};

/// target == sign * prod(factors). `verified` records the re-multiplication
/// check made when the factorization was built.
struct Factorization {
  std::uint64_t n = 0;
  int sign = 1;
  std::vector<FactorEntry> factors;
  bool verified = false;

  Poly product() const;
};

/// Builds the minimal polynomial of 4 sin^2(pi/n) from the palindromic
/// cyclotomic polynomial C_n (n >= 3): with m = deg(C_n)/2 and
/// C_n = sum a_i x^i, returns (-1)^m (a_m + sum_{k=1..m} a_{m-k} l_k(2-x)).
/// Throws PalindromeViolation if a_{m+k} != a_{m-k} for some k, or if the
/// degree of C_n is odd.
Poly psi_from_palindrome(const Poly& cyclotomic, const FamilyCache& families);

/// Memoized cyclotomic data. Thread-safe in the same way as FamilyCache.
class CycloTable {
 public:
  explicit CycloTable(const FamilyCache& families = shared_families()) : families_(families) {}
  CycloTable(const CycloTable&) = delete;
  CycloTable& operator=(const CycloTable&) = delete;

  const FamilyCache& families() const noexcept { return families_; }

  /// C_n = (x^n - 1) / prod_{d|n, d<n} C_d. n >= 1.
  Poly cyclotomic(std::uint64_t n) const;
  /// phi_n: x, x - 4, then the palindrome construction. n >= 1.
  Poly minimal_phi(std::uint64_t n) const;
  /// Phi_n: phi_n for n <= 2, phi_n^2 otherwise. n >= 1.
  Poly cap_phi(std::uint64_t n) const;
  /// rho_2 = x, rho_n = phi_n(x^2 + 4). n >= 2.
  Poly rho(std::uint64_t n) const;

  /// Z_n = (-1)^(n-1) prod_{d|n} Phi_d. n >= 1.
  Factorization factor_z(std::uint64_t n) const;
  /// F_n = prod_{d|n, d>1} rho_d. n >= 1.
  Factorization factor_fib(std::uint64_t n) const;

 private:
  Poly cyclotomic_locked(std::uint64_t n) const;

  const FamilyCache& families_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::uint64_t, Poly> cyclo_;
  mutable std::map<std::uint64_t, Poly> phi_;
};

CycloTable& shared_cyclo();

}  // namespace spread
