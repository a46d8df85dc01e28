#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spread/cyclofactor.hpp"
#include "spread/families.hpp"
#include "spread/rational.hpp"

namespace spread {

// One entry per checked identity.
// Statements involving square roots or quotients are checked in a
// radical-free, division-free form:
//
//   Binet7/Binet14    a^n - abar^n == F_n * (a - abar) in the extension
//   Thm1Unit30        Z_n * lambda^n == -(lambda^n - 1)^2
//   Thm1Sq29          Z_n(x^2 + 4) == (-1)^(n-1) (x^2 + 4) F_n(x)^2
//   Prop31a           even_part(F_{2n+1})(x - 4) == odd_part(l_{2n+1})
//   Prop31b           odd_part(F_{2n})(x - 4) == odd_part(f_{2n})
//   ZOddSq32a/32b     Z_{2n+1}(x^2) == l_{2n+1}^2, Z_{2n}(x^2) == f_{2n}^2 (4 - x^2)
//   Cheb17            2^(n-1) U_{n-1}(x/2) == 2^(n-1) f_n, 2 * 2^n T_n(x/2) == 2^n l_n
//   LaurentL19/24b    denominators cleared with compose_laurent
//   LambdaSub42/43    membership in the characteristic equation of lambda(y)
//   StrongDivZ        gcd compared after monic normalization
enum class IdentityId {
  Binet7,
  Lucas11,
  Matrix8,
  Cassini9,
  Binet14,
  Lucas16,
  Cheb17,
  LaurentL19,
  Double20,
  Compose21,
  Norm22,
  ZDef23,
  ZCompose24a,
  ZLaurent24b,
  LambdaRep25,
  ZRec26,
  Period26p,
  MuSquare28,
  Thm1Sq29,
  Thm1Unit30,
  Prop31a,
  Prop31b,
  ZOddSq32a,
  ZEvenSq32b,
  ZCassini33,
  Thm2Prod,
  Thm3Even38,
  Thm3Pow39,
  PhiPow40,
  CapPhiRec41,
  LambdaSub42,
  LambdaSub43,
  FibProd44,
  StrongDivF,
  StrongDivZ,
  TrigNumeric,
};

inline constexpr std::size_t kIdentityCount = 36;

extern const std::array<IdentityId, kIdentityCount> kAllIdentities;

std::string_view identity_name(IdentityId id) noexcept;
/// Case-insensitive lookup by name.
std::optional<IdentityId> parse_identity(std::string_view name) noexcept;
/// Same as parse_identity but throws UnknownIdentity.
IdentityId identity_from_name(std::string_view name);

/// Inclusive parameter range.
struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

/// Parameter ranges for one identity. Unset axes take the identity's
/// default; axes the identity does not use are ignored.
struct Bounds {
  std::optional<Range> n;
  std::optional<Range> m;
  std::optional<Range> k;
};

struct Param {
  std::string name;
  std::int64_t value;

  friend bool operator==(const Param&, const Param&) = default;
};

/// A single identity at a single parameter tuple.
struct Instance {
  IdentityId identity;
  std::vector<Param> params;
};

struct VerificationReport {
  IdentityId identity;
  std::vector<Param> params;
  bool passed = false;
  /// First failing difference; empty when passed.
  std::string witness;
};

enum class Execution { Serial, Parallel };

struct SuiteOptions {
  /// Caps on the default upper bounds. Identities whose range becomes empty
  /// under a cap are skipped.
  std::optional<std::int64_t> max_n;
  std::optional<std::int64_t> max_m;
  std::optional<std::int64_t> max_k;
  Execution execution = Execution::Parallel;
};

/// Default bounds; these are the acceptance bounds.
Bounds default_bounds(IdentityId id);

/// Z_0(v), ..., Z_{count-1}(v), evaluated through the three-term linear
/// recurrence with characteristic roots lambda(v), lambda_bar(v) and 1.
std::vector<Coeff> herbig_values(const Coeff& v, std::size_t count);

/// Smallest p >= 1 with Z_{i+p}(v) == Z_i(v) across the first max_terms
/// values, where 3p <= max_terms, that also holds on 3p further terms.
/// Throws OutOfDomain when max_terms < 2.
std::optional<std::size_t> detect_period(const Coeff& v, std::size_t max_terms);

/// Runs identity checks against a pair of caches.
class Verifier {
 public:
  Verifier(const FamilyCache& families, const CycloTable& cyclo) : fam_(families), cyc_(cyclo) {}

  /// Expands bounds into instances, in parameter order. Throws InvalidBounds
  /// on an empty or out-of-domain range (e.g. only even m for Thm3Even38).
  std::vector<Instance> plan(IdentityId id, const Bounds& bounds) const;

  /// Never throws for a well-formed instance; algebra errors are reported as
  /// failures.
  VerificationReport check(const Instance& instance) const;

  std::vector<VerificationReport> run(std::span<const Instance> instances,
                                      Execution execution = Execution::Parallel) const;

  std::vector<VerificationReport> verify(IdentityId id, const Bounds& bounds = {},
                                         Execution execution = Execution::Parallel) const;

  /// Every identity at its default bounds, capped by options.
  std::vector<VerificationReport> run_suite(const SuiteOptions& options = {}) const;

  /// The instances run_suite would execute.
  std::vector<Instance> plan_suite(const SuiteOptions& options) const;

 private:
  const FamilyCache& fam_;
  const CycloTable& cyc_;
};

/// Verifier over the process-wide caches.
const Verifier& shared_verifier();

inline std::vector<VerificationReport> verify(IdentityId id, const Bounds& bounds = {}) {
  return shared_verifier().verify(id, bounds);
}

inline std::vector<VerificationReport> run_suite(const SuiteOptions& options = {}) {
  return shared_verifier().run_suite(options);
}

/// "n=3 m=5" style rendering of a parameter list.
std::string format_params(std::span<const Param> params);

}  // namespace spread
