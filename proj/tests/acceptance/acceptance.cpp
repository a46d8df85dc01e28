// Acceptance checks. One line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "spread/cyclofactor.hpp"
#include "spread/families.hpp"
#include "spread/format.hpp"
#include "spread/identities.hpp"

using namespace spread;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

bool report(const char* id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_s > 0 && secs >= budget_s) out.require(false, "over time budget");
  std::printf("[%s] %s %s (%.3f s%s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs,
              budget_s > 0 ? (", budget " + std::to_string(static_cast<int>(budget_s)) + " s").c_str() : "",
              out.ok ? "" : " :: ", out.detail.c_str());
  return out.ok;
}

void match_table(Outcome& out, const char* label, std::size_t first, const std::vector<std::string>& want,
                 const std::function<Poly(std::size_t)>& gen) {
  for (std::size_t i = 0; i < want.size(); ++i) {
    const std::string got = to_text(gen(first + i));
    out.require(got == want[i], std::string(label) + "_" + std::to_string(first + i) + " = " + got +
                                    ", expected " + want[i]);
  }
}

Outcome tables() {
  Outcome out;
  const CycloTable& cyc = shared_cyclo();
  match_table(out, "F", 0, {"0", "1", "x", "1 + x^2", "2*x + x^3", "1 + 3*x^2 + x^4", "3*x + 4*x^3 + x^5"},
              [](std::size_t n) { return fib(n); });
  match_table(out, "L", 0,
              {"2", "x", "2 + x^2", "3*x + x^3", "2 + 4*x^2 + x^4", "5*x + 5*x^3 + x^5",
               "2 + 9*x^2 + 6*x^4 + x^6"},
              [](std::size_t n) { return lucas(n); });
  match_table(out, "f", 0,
              {"0", "1", "x", "-1 + x^2", "-2*x + x^3", "1 - 3*x^2 + x^4", "3*x - 4*x^3 + x^5",
               "-1 + 6*x^2 - 5*x^4 + x^6"},
              [](std::size_t n) { return fib_minus(n); });
  match_table(out, "l", 0,
              {"2", "x", "-2 + x^2", "-3*x + x^3", "2 - 4*x^2 + x^4", "5*x - 5*x^3 + x^5",
               "-2 + 9*x^2 - 6*x^4 + x^6"},
              [](std::size_t n) { return lucas_minus(n); });
  match_table(out, "Z", 0,
              {"0", "x", "4*x - x^2", "9*x - 6*x^2 + x^3", "16*x - 20*x^2 + 8*x^3 - x^4",
               "25*x - 50*x^2 + 35*x^3 - 10*x^4 + x^5"},
              [](std::size_t n) { return herbig_z(n); });
  match_table(out, "C", 1, {"-1 + x", "1 + x", "1 + x + x^2", "1 + x^2", "1 + x + x^2 + x^3 + x^4", "1 - x + x^2"},
              [&](std::size_t n) { return cyc.cyclotomic(n); });
  match_table(out, "phi", 1,
              {"x", "-4 + x", "-3 + x", "-2 + x", "5 - 5*x + x^2", "-1 + x", "-7 + 14*x - 7*x^2 + x^3",
               "2 - 4*x + x^2"},
              [&](std::size_t n) { return cyc.minimal_phi(n); });
  match_table(out, "rho", 2,
              {"x", "1 + x^2", "2 + x^2", "1 + 3*x^2 + x^4", "3 + x^2", "1 + 6*x^2 + 5*x^4 + x^6",
               "2 + 4*x^2 + x^4"},
              [&](std::size_t n) { return cyc.rho(n); });
  return out;
}

Outcome z_factorization() {
  Outcome out;
  const CycloTable& cyc = shared_cyclo();
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const Factorization f = cyc.factor_z(n);
    Poly prod = Poly::constant(Coeff(1));
    std::size_t deg_sum = 0;
    for (const auto& e : f.factors) {
      prod *= e.factor;
      deg_sum += e.factor.degree().value();
      if (e.d >= 3)
        out.require(e.factor == cyc.minimal_phi(e.d).pow(2), "Phi_" + std::to_string(e.d) + " != phi^2");
    }
    const Poly signed_z = (n % 2 == 1 ? Coeff(1) : Coeff(-1)) * herbig_z(n);
    out.require(prod == signed_z, "product mismatch at n=" + std::to_string(n));
    out.require(deg_sum == n, "degree sum mismatch at n=" + std::to_string(n));
    out.require(f.factors.size() == divisors(n).size(), "factor count at n=" + std::to_string(n));
  }
  return out;
}

Outcome fib_product() {
  Outcome out;
  const CycloTable& cyc = shared_cyclo();
  for (std::uint64_t n = 1; n <= 60; ++n) {
    Poly prod = Poly::constant(Coeff(1));
    for (auto d : divisors(n))
      if (d > 1) prod *= cyc.rho(d);
    out.require(prod == fib(n), "F_" + std::to_string(n) + " mismatch");
  }
  return out;
}

Outcome from_reports(const std::vector<VerificationReport>& reports, std::size_t expected_count) {
  Outcome out;
  out.require(reports.size() == expected_count,
              std::to_string(reports.size()) + " instances, expected " + std::to_string(expected_count));
  for (const auto& r : reports)
    out.require(r.passed, std::string(identity_name(r.identity)) + " " + format_params(r.params) + ": " + r.witness);
  return out;
}

Outcome suite() {
  using I = IdentityId;
  struct Item {
    I id;
    std::size_t count;
  };
  // Instance counts at the default bounds.
  const Item items[] = {
      {I::Cassini9, 64},   {I::ZRec26, 62},      {I::ZCassini33, 64},  {I::Norm22, 65},
      {I::Double20, 65},   {I::LaurentL19, 65},  {I::Thm1Sq29, 65},    {I::Thm1Unit30, 65},
      {I::Prop31a, 65},    {I::Prop31b, 65},     {I::ZOddSq32a, 65},   {I::ZEvenSq32b, 65},
      {I::Compose21, 169}, {I::ZCompose24a, 169}, {I::Thm3Even38, 5}, {I::Thm3Pow39, 12},
      {I::PhiPow40, 5},    {I::CapPhiRec41, 5},  {I::LambdaSub42, 1},  {I::LambdaSub43, 5},
      {I::MuSquare28, 1},
  };
  Outcome out;
  for (const auto& item : items) {
    const Outcome o = from_reports(verify(item.id), item.count);
    out.require(o.ok, std::string(identity_name(item.id)) + ": " + o.detail);
  }
  return out;
}

long fib_number(int n) {
  long long a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const long t = a + b;
    a = b;
    b = t;
  }
  return a;
}

Outcome z_at_five() {
  Outcome out;
  const long listed[] = {0, 1, -1, 4, -9, 25, -64, 169, -441};
  for (int n = 0; n < 9; ++n)
    out.require(herbig_z(n).eval(Coeff(5)) == Coeff(5 * listed[n]), "listed value at n=" + std::to_string(n));
  const auto rec = herbig_values(Coeff(5), 31);
  for (int n = 0; n <= 30; ++n) {
    const long f = fib_number(n);
    const Coeff want = Coeff(5) * Coeff(n % 2 == 1 ? 1 : -1) * Coeff(f) * Coeff(f);
    out.require(herbig_z(n).eval(Coeff(5)) == want, "Z_" + std::to_string(n) + "(5)");
    out.require(rec[n] == want, "recurrence value at n=" + std::to_string(n));
  }
  return out;
}

Outcome strong_div() {
  Bounds b;
  b.m = Range{1, 40};
  b.n = Range{1, 40};
  Outcome out;
  for (auto id : {IdentityId::StrongDivF, IdentityId::StrongDivZ}) {
    const Outcome o = from_reports(verify(id, b), 1600);
    out.require(o.ok, o.detail);
  }
  return out;
}

Outcome periods() {
  Outcome out;
  // Oracle: evaluate the polynomials directly and take the smallest shift that
  // fixes the first 40 values.
  const std::size_t expected[] = {1, 6, 4, 3, 2};
  for (long v = 0; v <= 4; ++v) {
    std::vector<Coeff> z;
    for (std::size_t n = 0; n < 40; ++n) z.push_back(herbig_z(n).eval(Coeff(v)));
    std::size_t oracle = 0;
    for (std::size_t p = 1; p < 40 && oracle == 0; ++p) {
      bool ok = true;
      for (std::size_t i = 0; i + p < z.size() && ok; ++i) ok = z[i] == z[i + p];
      if (ok) oracle = p;
    }
    out.require(oracle == expected[v], "oracle period at v=" + std::to_string(v));
    const auto p = detect_period(Coeff(v), 50);
    out.require(p.has_value() && *p == oracle, "detected period at v=" + std::to_string(v));
  }
  out.require(!detect_period(Coeff(5), 200).has_value(), "v=5 reported periodic");
  return out;
}

Outcome trig() { return from_reports(verify(IdentityId::TrigNumeric), 21); }

Outcome fault_injection() {
  FamilyCache fam;
  CycloTable cyc(fam);
  Poly z7 = compute_family(FamilyKind::Herbig, 7);
  std::vector<Coeff> c(z7.coefficients().begin(), z7.coefficients().end());
  c[3] += 1;
  fam.inject(FamilyKind::Herbig, 7, Poly(std::move(c)));
  const Verifier v(fam, cyc);
  Bounds b;
  b.n = Range{1, 12};
  Outcome out;
  bool caught = false;
  for (auto id : {IdentityId::Thm2Prod, IdentityId::ZRec26}) {
    Bounds ib = b;
    if (id == IdentityId::ZRec26) ib.n = Range{3, 12};
    for (const auto& r : v.verify(id, ib))
      if (!r.passed && !r.witness.empty()) caught = true;
  }
  out.require(caught, "corruption of Z_7 went unnoticed");
  return out;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= report("AC1", "table reproduction", 1.0, tables);
  ok &= report("AC2", "Z_n divisor factorization, n <= 60", 30.0, z_factorization);
  ok &= report("AC3", "F_n as product of rho_d, n <= 60", 0, fib_product);
  ok &= report("AC4", "identity suite at default bounds", 60.0, suite);
  ok &= report("AC5", "Z_n(5) against Fibonacci squares, n <= 30", 0, z_at_five);
  ok &= report("AC6", "strong divisibility, m, n <= 40", 0, strong_div);
  ok &= report("AC7", "periods of Z_n(v)", 0, periods);
  ok &= report("AC8", "trigonometric evaluation, n <= 20", 0, trig);
  ok &= report("AC9", "fault injection on Z_7", 0, fault_injection);
  std::printf("%s\n", ok ? "all criteria passed" : "some criteria failed");
  return ok ? 0 : 1;
}
