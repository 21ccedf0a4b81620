#pragma once

// Row kernels over Z/pZ used by the matrix layer. Every entry is a residue in
// [0, p) stored as uint32_t and p <= kMaxFieldPrime, so a*b fits in 32 bits.
//
// A scalar reference implementation always exists; an AVX2 variant is chosen
// at runtime when the CPU supports it. Both must agree bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace pcentral::simd {

struct FpKernels {
  // dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len,
               std::uint32_t p);
  // dst[i] = (c * dst[i]) mod p
  void (*scale)(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p);
  // sum_i x[i] * y[i] mod p
  std::uint32_t (*dot)(const std::uint32_t* x, const std::uint32_t* y, std::size_t len,
                       std::uint32_t p);
  std::string_view name;
};

const FpKernels& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const FpKernels* avx2_kernels();

// The kernels used by the library. Setting PCENTRAL_FORCE_SCALAR=1 in the
// environment pins the scalar reference.
const FpKernels& active_kernels();

}  // namespace pcentral::simd
