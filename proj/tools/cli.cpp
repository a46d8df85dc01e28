#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>

#include "spread/cyclofactor.hpp"
#include "spread/error.hpp"
#include "spread/families.hpp"
#include "spread/format.hpp"
#include "spread/identities.hpp"

namespace spread::cli {

namespace {

using json = nlohmann::json;

enum class Format { Text, Json };

/// Thrown for usage errors detected after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Poly generate(const std::string& family, std::uint64_t n) {
  if (auto kind = parse_family(family)) return shared_families().get(*kind, n);
  const CycloTable& cyc = shared_cyclo();
  if (family == "cyclotomic") return cyc.cyclotomic(n);
  if (family == "phi") return cyc.minimal_phi(n);
  if (family == "capphi") return cyc.cap_phi(n);
  if (family == "rho") return cyc.rho(n);
  throw UsageError("unknown family '" + family + "'");
}

std::string_view role_name(FactorRole role) {
  switch (role) {
    case FactorRole::Linear: return "linear";
    case FactorRole::MinimalSquared: return "minimal_squared";
    case FactorRole::Rho: return "rho";
  }
  return "?";
}

json params_json(std::span<const Param> params) {
  json j = json::object();
  for (const auto& p : params) j[p.name] = p.value;
  return j;
}

json report_json(const VerificationReport& r) {
  return {{"identity", identity_name(r.identity)},
          {"params", params_json(r.params)},
          {"passed", r.passed},
          {"witness", r.witness}};
}

Coeff parse_rational_arg(const std::string& text, const char* what) {
  auto c = parse_coeff(text);
  if (!c) throw UsageError(std::string("cannot parse ") + what + " '" + text + "' as a rational p/q");
  return *c;
}

// --max-X gives [default lo, X]; --X gives [X, X]. The exact value wins.
std::optional<Range> axis_bound(const std::optional<Range>& fallback, std::optional<std::int64_t> exact,
                                std::optional<std::int64_t> max) {
  if (exact) return Range{*exact, *exact};
  if (max && fallback) return Range{fallback->lo, *max};
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Fibonacci, Lucas, Chebyshev and spread polynomial toolkit", "spreadpoly"};
  app.fallthrough();
  app.require_subcommand(1);

  Format format = Format::Text;
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}};
  app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));

  std::string family;
  std::uint64_t index = 0;
  std::string at;
  std::string target;
  std::string identity;
  std::optional<std::int64_t> max_n, max_m, max_k, exact_n, exact_m, exact_k;
  bool serial = false;
  std::string period_x = "0";
  std::size_t max_terms = 50;

  auto* gen = app.add_subcommand("gen", "Print a family member");
  gen->add_option("family", family,
                  "fib lucas fibm lucasm chebt chebu spread z cyclotomic phi capphi rho")
      ->required();
  gen->add_option("n", index, "Index")->required();

  auto* factor = app.add_subcommand("factor", "Divisor-product factorization of Z_n or F_n");
  factor->add_option("target", target, "z or fib")->required()->check(CLI::IsMember({"z", "fib"}));
  factor->add_option("n", index, "Index (>= 1)")->required();

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a family member exactly at a rational");
  eval_cmd->add_option("family", family, "Family name")->required();
  eval_cmd->add_option("n", index, "Index")->required();
  eval_cmd->add_option("--at", at, "Point, as p or p/q")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check identities; exit 1 if any check fails");
  verify_cmd->add_option("identity", identity, "Identity name or 'all'")->required();
  verify_cmd->add_option("--max-n", max_n, "Upper bound for n");
  verify_cmd->add_option("--max-m", max_m, "Upper bound for m");
  verify_cmd->add_option("--max-k", max_k, "Upper bound for k");
  verify_cmd->add_option("--n", exact_n, "Check a single n");
  verify_cmd->add_option("--m", exact_m, "Check a single m");
  verify_cmd->add_option("--k", exact_k, "Check a single k");
  verify_cmd->add_flag("--serial", serial, "Run checks on one thread");

  auto* period = app.add_subcommand("period", "Detect the period of n -> Z_n(x)");
  period->add_option("--x", period_x, "Point, as p or p/q");
  period->add_option("--max-terms", max_terms, "Observation window")->check(CLI::Range(2, 100000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  const bool as_json = format == Format::Json;
  try {
    if (*gen) {
      const Poly p = generate(family, index);
      if (as_json) {
        out << json{{"kind", family}, {"params", {{"n", index}}}, {"coefficients", to_decimal_strings(p)}}.dump()
            << '\n';
      } else {
        out << to_text(p) << '\n';
      }
      return kExitOk;
    }

    if (*factor) {
      const CycloTable& cyc = shared_cyclo();
      const Factorization f = target == "z" ? cyc.factor_z(index) : cyc.factor_fib(index);
      if (as_json) {
        json factors = json::array();
        for (const auto& e : f.factors)
          factors.push_back({{"d", e.d}, {"role", role_name(e.role)}, {"coefficients", to_decimal_strings(e.factor)}});
        out << json{{"kind", "factor"},      {"target", target}, {"params", {{"n", index}}},
                    {"sign", f.sign},        {"factors", factors},
                    {"verified", f.verified}}
                   .dump()
            << '\n';
      } else {
        out << "sign: " << f.sign << '\n';
        if (f.factors.empty()) out << "(empty product: 1)\n";
        for (const auto& e : f.factors) out << e.d << ": " << to_text(e.factor) << '\n';
        out << "verified: " << (f.verified ? "true" : "false") << '\n';
      }
      return f.verified ? kExitOk : kExitFailed;
    }

    if (*eval_cmd) {
      const Coeff point = parse_rational_arg(at, "--at");
      const Coeff value = generate(family, index).eval(point);
      if (as_json) {
        out << json{{"kind", "eval"},
                    {"params", {{"family", family}, {"n", index}, {"at", to_string(point)}}},
                    {"value", to_string(value)}}
                   .dump()
            << '\n';
      } else {
        out << to_string(value) << '\n';
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      std::vector<VerificationReport> reports;
      const Execution exec = serial ? Execution::Serial : Execution::Parallel;
      if (identity == "all") {
        SuiteOptions opts;
        opts.max_n = exact_n ? exact_n : max_n;
        opts.max_m = exact_m ? exact_m : max_m;
        opts.max_k = exact_k ? exact_k : max_k;
        opts.execution = exec;
        reports = run_suite(opts);
      } else {
        const IdentityId id = identity_from_name(identity);
        const Bounds defaults = default_bounds(id);
        Bounds b;
        b.n = axis_bound(defaults.n, exact_n, max_n);
        b.m = axis_bound(defaults.m, exact_m, max_m);
        b.k = axis_bound(defaults.k, exact_k, max_k);
        reports = shared_verifier().verify(id, b, exec);
      }

      const auto failed = static_cast<std::size_t>(
          std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.passed; }));
      const std::size_t passed = reports.size() - failed;
      if (as_json) {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(report_json(r));
        out << json{{"reports", arr}, {"summary", {{"passed", passed}, {"failed", failed}}}}.dump() << '\n';
      } else {
        for (const auto& r : reports) {
          out << (r.passed ? "PASS " : "FAIL ") << identity_name(r.identity);
          if (!r.params.empty()) out << ' ' << format_params(r.params);
          if (!r.passed) out << " :: " << r.witness;
          out << '\n';
        }
        out << "summary: " << passed << " passed, " << failed << " failed\n";
      }
      return failed == 0 ? kExitOk : kExitFailed;
    }

    if (*period) {
      const Coeff v = parse_rational_arg(period_x, "--x");
      const auto p = detect_period(v, max_terms);
      const std::size_t shown = p ? std::min(max_terms, 3 * *p + 3) : max_terms;
      std::vector<std::string> values;
      for (const auto& z : herbig_values(v, shown)) values.push_back(to_string(z));
      if (as_json) {
        json j{{"kind", "period"},
               {"params", {{"x", to_string(v)}, {"max_terms", max_terms}}},
               {"period", p ? json(*p) : json(nullptr)},
               {"values", values}};
        out << j.dump() << '\n';
      } else {
        out << "period: " << (p ? std::to_string(*p) : std::string("none")) << '\n';
        out << "values:";
        for (std::size_t i = 0; i < values.size(); ++i) out << (i == 0 ? " " : ", ") << values[i];
        out << '\n';
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spread::cli
