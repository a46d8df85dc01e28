#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "spread/poly.hpp"

namespace spread {

enum class FamilyKind {
  FibPlus,     // F_n = x F_{n-1} + F_{n-2}, F_0 = 0, F_1 = 1
  LucasPlus,   // L_n = x L_{n-1} + L_{n-2}, L_0 = 2, L_1 = x
  FibMinus,    // f_n = x f_{n-1} - f_{n-2}, f_0 = 0, f_1 = 1
  LucasMinus,  // l_n = x l_{n-1} - l_{n-2}, l_0 = 2, l_1 = x
  ChebyshevT,
  ChebyshevU,
  Spread,      // S_n = Z_n(4x)/4
  Herbig,      // Z_n = 2 - l_n(2 - x)
};

inline constexpr std::array kAllFamilies{
    FamilyKind::FibPlus,    FamilyKind::LucasPlus,  FamilyKind::FibMinus, FamilyKind::LucasMinus,
    FamilyKind::ChebyshevT, FamilyKind::ChebyshevU, FamilyKind::Spread,   FamilyKind::Herbig,
};

/// Short CLI name: fib, lucas, fibm, lucasm, chebt, chebu, spread, z.
std::string_view family_name(FamilyKind kind) noexcept;
std::optional<FamilyKind> parse_family(std::string_view name) noexcept;

/// Uncached bottom-up computation of one family member. Reference for the
/// cache and for tests.
Poly compute_family(FamilyKind kind, std::size_t n);

/// S_n = (1 - T_n(1 - 2x))/2, the Chebyshev route to the spread polynomials.
Poly spread_via_chebyshev(std::size_t n);

/// Memoized family tables, filled contiguously from index 0.
///
/// Readers share a lock; growing a table takes it exclusively. Values are
/// returned by copy so callers never alias cache storage.
class FamilyCache {
 public:
  FamilyCache() = default;
  FamilyCache(const FamilyCache&) = delete;
  FamilyCache& operator=(const FamilyCache&) = delete;

  Poly get(FamilyKind kind, std::size_t n) const;

  Poly fib(std::size_t n) const { return get(FamilyKind::FibPlus, n); }
  Poly lucas(std::size_t n) const { return get(FamilyKind::LucasPlus, n); }
  Poly fib_minus(std::size_t n) const { return get(FamilyKind::FibMinus, n); }
  Poly lucas_minus(std::size_t n) const { return get(FamilyKind::LucasMinus, n); }
  Poly cheb_t(std::size_t n) const { return get(FamilyKind::ChebyshevT, n); }
  Poly cheb_u(std::size_t n) const { return get(FamilyKind::ChebyshevU, n); }
  Poly spread(std::size_t n) const { return get(FamilyKind::Spread, n); }
  Poly herbig_z(std::size_t n) const { return get(FamilyKind::Herbig, n); }

  /// Overwrite one cached entry, filling the table up to n first. Used to
  /// check that the identity suite notices corrupted values.
  void inject(FamilyKind kind, std::size_t n, Poly value);

 private:
  std::vector<Poly>& table(FamilyKind kind) const;
  void extend_locked(FamilyKind kind, std::size_t n) const;

  mutable std::shared_mutex mutex_;
  mutable std::array<std::vector<Poly>, kAllFamilies.size()> tables_;
};

/// Process-wide cache behind the free functions below.
FamilyCache& shared_families();

inline Poly fib(std::size_t n) { return shared_families().fib(n); }
inline Poly lucas(std::size_t n) { return shared_families().lucas(n); }
inline Poly fib_minus(std::size_t n) { return shared_families().fib_minus(n); }
inline Poly lucas_minus(std::size_t n) { return shared_families().lucas_minus(n); }
inline Poly cheb_t(std::size_t n) { return shared_families().cheb_t(n); }
inline Poly cheb_u(std::size_t n) { return shared_families().cheb_u(n); }
inline Poly spread_poly(std::size_t n) { return shared_families().spread(n); }
inline Poly herbig_z(std::size_t n) { return shared_families().herbig_z(n); }

}  // namespace spread
