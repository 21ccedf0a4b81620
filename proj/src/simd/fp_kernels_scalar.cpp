#include "pcentral/simd/fp_kernels.hpp"

namespace pcentral::simd {

namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len,
                 std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    dst[i] = static_cast<std::uint32_t>((std::uint64_t{dst[i]} + std::uint64_t{c} * src[i]) % p);
  }
}

void scale_scalar(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    dst[i] = static_cast<std::uint32_t>(std::uint64_t{c} * dst[i] % p);
  }
}

std::uint32_t dot_scalar(const std::uint32_t* x, const std::uint32_t* y, std::size_t len,
                         std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < len; ++i) acc += std::uint64_t{x[i]} * y[i];
  return static_cast<std::uint32_t>(acc % p);
}

}  // namespace

const FpKernels& scalar_kernels() {
  static const FpKernels k{axpy_scalar, scale_scalar, dot_scalar, "scalar"};
  return k;
}

}  // namespace pcentral::simd
