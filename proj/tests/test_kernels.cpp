#include <doctest.h>

#include <omp.h>

#include <random>

#include "spread/kernels.hpp"
#include "test_support.hpp"

using namespace spread;

TEST_CASE("parallel convolution matches the serial reference") {
  omp_set_num_threads(4);
  std::mt19937 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const Poly a = testing::random_rational_poly(rng, 120);
    const Poly b = testing::random_rational_poly(rng, 120);
    const auto serial = kernels::convolve_serial(a.coefficients(), b.coefficients());
    const auto parallel = kernels::convolve_parallel(a.coefficients(), b.coefficients());
    CHECK(serial == parallel);
    CHECK(serial.size() == a.size() + b.size() - 1);
  }
}

TEST_CASE("empty operands") {
  const Poly p = Poly::from_ints({1, 2});
  CHECK(kernels::convolve_serial({}, p.coefficients()).empty());
  CHECK(kernels::convolve_parallel(p.coefficients(), {}).empty());
}

TEST_CASE("dispatching product agrees with the serial kernel above the threshold") {
  omp_set_num_threads(4);
  std::mt19937 rng(8);
  const Poly a = testing::random_poly(rng, 200);
  const Poly b = testing::random_poly(rng, 200);
  REQUIRE(a.size() * b.size() >= 1);
  const Poly expected(kernels::convolve_serial(a.coefficients(), b.coefficients()));
  CHECK(a * b == expected);
}

TEST_CASE("nested use inside a parallel region stays serial and exact") {
  omp_set_num_threads(4);
  const Poly a = Poly::from_ints({1, 1}).pow(70);
  const Poly b = Poly::from_ints({1, -1}).pow(70);
  const Poly expected = Poly::from_ints({1, 0, -1}).pow(70);
  int mismatches = 0;
#pragma omp parallel for reduction(+ : mismatches)
  for (int i = 0; i < 8; ++i) {
    if (!(a * b == expected)) ++mismatches;
  }
  CHECK(mismatches == 0);
}
