#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"
#include "spread/cyclofactor.hpp"
#include "spread/families.hpp"
#include "spread/format.hpp"
#include "test_support.hpp"

using namespace spread;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream is(text);
  std::size_t n = 0;
  for (std::string line; std::getline(is, line);)
    if (line.rfind(prefix, 0) == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("gen") {
  CHECK(run({"gen", "z", "3"}).out == "9*x - 6*x^2 + x^3\n");
  CHECK(run({"gen", "fib", "0"}).out == "0\n");
  CHECK(run({"gen", "phi", "8"}).out == "2 - 4*x + x^2\n");
  CHECK(run({"gen", "rho", "7"}).out == "1 + 6*x^2 + 5*x^4 + x^6\n");
  CHECK(run({"gen", "cyclotomic", "6"}).out == "1 - x + x^2\n");
  CHECK(run({"gen", "spread", "2"}).out == "4*x - 4*x^2\n");

  CHECK(run({"gen", "nope", "3"}).code == cli::kExitUsage);
  CHECK(run({"gen", "rho", "1"}).code == cli::kExitUsage);
  CHECK(run({"gen", "phi", "0"}).code == cli::kExitUsage);
  CHECK(run({"gen", "z", "-1"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("gen json round-trips and agrees with text") {
  const char* families[] = {"fib", "lucas", "fibm", "lucasm", "chebt", "chebu", "spread", "z",
                            "cyclotomic", "phi", "capphi", "rho"};
  for (const char* fam : families) {
    for (const char* n : {"2", "7", "12"}) {
      CAPTURE(fam);
      CAPTURE(n);
      const auto j = run({"--format", "json", "gen", fam, n});
      REQUIRE(j.code == 0);
      const json doc = json::parse(j.out);
      CHECK(doc["kind"] == fam);
      CHECK(doc["params"]["n"] == std::stoi(n));
      const auto poly = from_decimal_strings(doc["coefficients"].get<std::vector<std::string>>());
      REQUIRE(poly.has_value());
      const auto text = run({"gen", fam, n});
      CHECK(text.out == to_text(*poly) + "\n");
    }
  }
  const json z3 = json::parse(run({"gen", "z", "3", "--format", "json"}).out);
  CHECK(z3["coefficients"] == json::array({"0", "9", "-6", "1"}));
}

TEST_CASE("factor") {
  const auto z4 = run({"factor", "z", "4"});
  CHECK(z4.code == 0);
  CHECK(z4.out == "sign: -1\n1: x\n2: -4 + x\n4: 4 - 4*x + x^2\nverified: true\n");

  const auto z3 = run({"factor", "z", "3"});
  CHECK(z3.out == "sign: 1\n1: x\n3: 9 - 6*x + x^2\nverified: true\n");

  const auto f1 = run({"--format", "json", "factor", "fib", "1"});
  const json doc = json::parse(f1.out);
  CHECK(doc["sign"] == 1);
  CHECK(doc["factors"].empty());
  CHECK(doc["verified"] == true);

  const json z4j = json::parse(run({"--format", "json", "factor", "z", "4"}).out);
  CHECK(z4j["sign"] == -1);
  REQUIRE(z4j["factors"].size() == 3);
  CHECK(z4j["factors"][2]["d"] == 4);
  CHECK(z4j["factors"][2]["coefficients"] == json::array({"4", "-4", "1"}));

  CHECK(run({"factor", "z", "0"}).code == cli::kExitUsage);
  CHECK(run({"factor", "lucas", "3"}).code == cli::kExitUsage);
}

TEST_CASE("eval") {
  CHECK(run({"eval", "z", "5", "--at", "5"}).out == "125\n");
  CHECK(run({"eval", "fib", "7", "--at", "1"}).out == "13\n");
  CHECK(run({"eval", "z", "4", "--at", "5"}).out == "-45\n");
  CHECK(run({"eval", "z", "2", "--at", "1/2"}).out == "7/4\n");
  const json doc = json::parse(run({"--format", "json", "eval", "z", "5", "--at", "5"}).out);
  CHECK(doc["value"] == "125");
  CHECK(run({"eval", "z", "5", "--at", "five"}).code == cli::kExitUsage);
  CHECK(run({"eval", "z", "5", "--at", "1/0"}).code == cli::kExitUsage);
}

TEST_CASE("verify") {
  const auto all = run({"verify", "all"});
  CHECK(all.code == cli::kExitOk);
  CHECK(count_lines_starting(all.out, "FAIL") == 0);
  CHECK(all.out.find("summary: ") != std::string::npos);

  const auto cassini = run({"verify", "cassini9", "--max-n", "64"});
  CHECK(cassini.code == 0);
  CHECK(count_lines_starting(cassini.out, "PASS Cassini9") == 64);
  CHECK(cassini.out.find("summary: 64 passed, 0 failed") != std::string::npos);

  const json doc = json::parse(run({"--format", "json", "verify", "Cassini9", "--max-n", "5"}).out);
  REQUIRE(doc["reports"].size() == 5);
  CHECK(doc["reports"][0]["identity"] == "Cassini9");
  CHECK(doc["reports"][0]["params"]["n"] == 1);
  CHECK(doc["reports"][0]["passed"] == true);
  CHECK(doc["reports"][0]["witness"] == "");
  CHECK(doc["summary"]["failed"] == 0);

  CHECK(run({"verify", "thm2prod", "--n", "12", "--serial"}).code == 0);
  CHECK(run({"verify", "nonsense"}).code == cli::kExitUsage);
  CHECK(run({"verify", "thm3even38", "--m", "4"}).code == cli::kExitUsage);
}

TEST_CASE("period") {
  const auto two = run({"period", "--x", "2", "--max-terms", "50"});
  CHECK(two.out.rfind("period: 4\nvalues: 0, 2, 4, 2, 0,", 0) == 0);
  CHECK(run({"period", "--x", "0"}).out.rfind("period: 1\n", 0) == 0);
  CHECK(run({"period", "--x", "3", "--max-terms", "50"}).out.rfind("period: 3\nvalues: 0, 3, 3, 0,", 0) == 0);
  const json none = json::parse(run({"--format", "json", "period", "--x", "5", "--max-terms", "30"}).out);
  CHECK(none["period"].is_null());
  CHECK(none["values"].size() == 30);
  const json four = json::parse(run({"--format", "json", "period", "--x", "4"}).out);
  CHECK(four["period"] == 2);
  CHECK(four["values"].size() == 9);
  CHECK(run({"period", "--x", "abc"}).code == cli::kExitUsage);
  CHECK(run({"period", "--max-terms", "1"}).code == cli::kExitUsage);
}
