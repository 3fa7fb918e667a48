#pragma once

#include <cstddef>

#include "sporadic/laurent.hpp"

// Multiplication kernels. multiply_serial is the reference; multiply_parallel
// shards the term pairs over OpenMP threads and must agree with it exactly.
namespace sporadic::kernels {

struct MultiplyOptions {
  // When set, product terms outside the box are discarded.
  const ExponentBox* window = nullptr;
  std::size_t term_cap = default_term_cap();
};

// Below this many term pairs the dispatcher stays serial.
inline constexpr std::size_t kParallelPairThreshold = std::size_t{1} << 16;

LaurentPoly multiply_serial(const LaurentPoly& a, const LaurentPoly& b, const MultiplyOptions& options = {});
LaurentPoly multiply_parallel(const LaurentPoly& a, const LaurentPoly& b, const MultiplyOptions& options = {});
LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b, const MultiplyOptions& options = {});

// Throws DimensionMismatch / ResourceError if a*b is not representable.
void check_product_bounds(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace sporadic::kernels
