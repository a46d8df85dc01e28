#include "spread/families.hpp"

#include <mutex>
#include <stdexcept>
#include <utility>

namespace spread {

namespace {

struct Seed {
  Poly first;
  Poly second;
  Poly step;  // multiplier of the previous term
  int sign;   // sign of the term two back
};

Seed seed_for(FamilyKind kind) {
  const Poly x = Poly::x();
  const Poly zero;
  const Poly one = Poly::constant(Coeff(1));
  const Poly two = Poly::constant(Coeff(2));
  switch (kind) {
    case FamilyKind::FibPlus: return {zero, one, x, +1};
    case FamilyKind::LucasPlus: return {two, x, x, +1};
    case FamilyKind::FibMinus: return {zero, one, x, -1};
    case FamilyKind::LucasMinus: return {two, x, x, -1};
    case FamilyKind::ChebyshevT: return {one, x, x * Coeff(2), -1};
    case FamilyKind::ChebyshevU: return {one, x * Coeff(2), x * Coeff(2), -1};
    default: break;
  }
  throw std::logic_error("family has no three-term seed");
}

Poly next_term(const Seed& s, const Poly& prev, const Poly& prev2) {
  Poly r = s.step * prev;
  if (s.sign > 0) r += prev2; else r -= prev2;
  return r;
}

Poly herbig_from_lucas_minus(const Poly& ln) { return 2 - ln.compose(Poly::from_ints({2, -1})); }

Poly spread_from_herbig(const Poly& zn) {
  Poly s = zn.compose(Poly::from_ints({0, 4})) * Coeff(1, 4);
  if (!s.is_integer()) throw std::logic_error("spread polynomial with non-integer coefficient");
  return s;
}

}  // namespace

std::string_view family_name(FamilyKind kind) noexcept {
  switch (kind) {
    case FamilyKind::FibPlus: return "fib";
    case FamilyKind::LucasPlus: return "lucas";
    case FamilyKind::FibMinus: return "fibm";
    case FamilyKind::LucasMinus: return "lucasm";
    case FamilyKind::ChebyshevT: return "chebt";
    case FamilyKind::ChebyshevU: return "chebu";
    case FamilyKind::Spread: return "spread";
    case FamilyKind::Herbig: return "z";
  }
  return "?";
}

std::optional<FamilyKind> parse_family(std::string_view name) noexcept {
  for (auto k : kAllFamilies)
    if (family_name(k) == name) return k;
  return std::nullopt;
}

Poly compute_family(FamilyKind kind, std::size_t n) {
  if (kind == FamilyKind::Herbig) return herbig_from_lucas_minus(compute_family(FamilyKind::LucasMinus, n));
  if (kind == FamilyKind::Spread) return spread_from_herbig(compute_family(FamilyKind::Herbig, n));

  const Seed s = seed_for(kind);
  if (n == 0) return s.first;
  Poly prev2 = s.first;
  Poly prev = s.second;
  for (std::size_t i = 2; i <= n; ++i) {
    Poly cur = next_term(s, prev, prev2);
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

Poly spread_via_chebyshev(std::size_t n) {
  const Poly tn = compute_family(FamilyKind::ChebyshevT, n);
  return (1 - tn.compose(Poly::from_ints({1, -2}))) * Coeff(1, 2);
}

std::vector<Poly>& FamilyCache::table(FamilyKind kind) const {
  return tables_[static_cast<std::size_t>(kind)];
}

void FamilyCache::extend_locked(FamilyKind kind, std::size_t n) const {
  auto& t = table(kind);
  if (t.size() > n) return;

  if (kind == FamilyKind::Herbig) {
    extend_locked(FamilyKind::LucasMinus, n);
    const auto& l = table(FamilyKind::LucasMinus);
    for (std::size_t i = t.size(); i <= n; ++i) t.push_back(herbig_from_lucas_minus(l[i]));
    return;
  }
  if (kind == FamilyKind::Spread) {
    extend_locked(FamilyKind::Herbig, n);
    const auto& z = table(FamilyKind::Herbig);
    for (std::size_t i = t.size(); i <= n; ++i) t.push_back(spread_from_herbig(z[i]));
    return;
  }

  const Seed s = seed_for(kind);
  if (t.empty()) t.push_back(s.first);
  if (t.size() == 1 && n >= 1) t.push_back(s.second);
  while (t.size() <= n) {
    const std::size_t i = t.size();
    t.push_back(next_term(s, t[i - 1], t[i - 2]));
  }
}

Poly FamilyCache::get(FamilyKind kind, std::size_t n) const {
  {
    std::shared_lock lock(mutex_);
    const auto& t = table(kind);
    if (t.size() > n) return t[n];
  }
  std::unique_lock lock(mutex_);
  extend_locked(kind, n);
  return table(kind)[n];
}

void FamilyCache::inject(FamilyKind kind, std::size_t n, Poly value) {
  std::unique_lock lock(mutex_);
  extend_locked(kind, n);
  table(kind)[n] = std::move(value);
}

FamilyCache& shared_families() {
  static FamilyCache cache;
  return cache;
}

}  // namespace spread
