#include "spread/kernels.hpp"

#include <algorithm>

#include <omp.h>

namespace spread::kernels {

std::vector<Coeff> convolve_serial(std::span<const Coeff> a, std::span<const Coeff> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Coeff> out(a.size() + b.size() - 1);
  Coeff term;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      term = a[i] * b[j];
      out[i + j] += term;
    }
  }
  return out;
}

std::vector<Coeff> convolve_parallel(std::span<const Coeff> a, std::span<const Coeff> b) {
  if (a.empty() || b.empty()) return {};
  const auto na = static_cast<std::ptrdiff_t>(a.size());
  const auto nb = static_cast<std::ptrdiff_t>(b.size());
  const std::ptrdiff_t n_out = na + nb - 1;
  std::vector<Coeff> out(static_cast<std::size_t>(n_out));

#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < n_out; ++k) {
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, k - nb + 1);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(k, na - 1);
    Coeff acc(0);
    Coeff term;
    for (std::ptrdiff_t i = lo; i <= hi; ++i) {
      if (sgn(a[i]) == 0) continue;
      term = a[i] * b[k - i];
      acc += term;
    }
    out[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return out;
}

std::vector<Coeff> convolve(std::span<const Coeff> a, std::span<const Coeff> b) {
  if (a.size() * b.size() >= kParallelConvolveThreshold && !in_parallel() && max_threads() > 1)
    return convolve_parallel(a, b);
  return convolve_serial(a, b);
}

int max_threads() noexcept { return omp_get_max_threads(); }

bool in_parallel() noexcept { return omp_in_parallel() != 0; }

}  // namespace spread::kernels
