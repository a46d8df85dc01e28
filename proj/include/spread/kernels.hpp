#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spread/rational.hpp"

// Coefficient convolution kernels behind Poly multiplication. The serial
// version is the reference; the OpenMP version computes each output
// coefficient independently and must agree with it exactly.
namespace spread::kernels {

std::vector<Coeff> convolve_serial(std::span<const Coeff> a, std::span<const Coeff> b);
std::vector<Coeff> convolve_parallel(std::span<const Coeff> a, std::span<const Coeff> b);

/// Work size (|a|*|b|) at which Poly multiplication switches to the
/// parallel kernel. Ignored inside an active parallel region.
inline constexpr std::size_t kParallelConvolveThreshold = 64 * 64;

std::vector<Coeff> convolve(std::span<const Coeff> a, std::span<const Coeff> b);

int max_threads() noexcept;
bool in_parallel() noexcept;

}  // namespace spread::kernels
