#include "pcentral/simd/fp_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define PCENTRAL_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace pcentral::simd {

#ifdef PCENTRAL_HAVE_AVX2_KERNELS

namespace {

// Float-quotient reduction is exact while every intermediate stays below 2^24.
constexpr std::uint32_t kFloatReduceMaxPrime = 4093;

__attribute__((target("avx2"))) inline __m256i reduce_small(__m256i x, __m256i pv, __m256 inv_p) {
  __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(_mm256_cvtepi32_ps(x), inv_p));
  __m256i r = _mm256_sub_epi32(x, _mm256_mullo_epi32(q, pv));
  // r is within one multiple of p of the true residue.
  __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, pv));
  __m256i over = _mm256_cmpgt_epi32(r, _mm256_sub_epi32(pv, _mm256_set1_epi32(1)));
  return _mm256_sub_epi32(r, _mm256_and_si256(over, pv));
}

__attribute__((target("avx2"))) void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                               std::uint32_t c, std::size_t len, std::uint32_t p) {
  std::size_t i = 0;
  if (p <= kFloatReduceMaxPrime) {
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    for (; i + 8 <= len; i += 8) {
      __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
      __m256i x = _mm256_add_epi32(d, _mm256_mullo_epi32(cv, s));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce_small(x, pv, inv_p));
    }
  }
  scalar_kernels().axpy(dst + i, src + i, c, len - i, p);
}

__attribute__((target("avx2"))) void scale_avx2(std::uint32_t* dst, std::uint32_t c,
                                                std::size_t len, std::uint32_t p) {
  std::size_t i = 0;
  if (p <= kFloatReduceMaxPrime) {
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    for (; i + 8 <= len; i += 8) {
      __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      __m256i x = _mm256_mullo_epi32(cv, d);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), reduce_small(x, pv, inv_p));
    }
  }
  scalar_kernels().scale(dst + i, c, len - i, p);
}

__attribute__((target("avx2"))) std::uint32_t dot_avx2(const std::uint32_t* x,
                                                       const std::uint32_t* y, std::size_t len,
                                                       std::uint32_t p) {
  // Products are < 2^32; accumulate them in 64-bit lanes, even and odd lanes separately.
  __m256i acc_even = _mm256_setzero_si256();
  __m256i acc_odd = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    acc_even = _mm256_add_epi64(acc_even, _mm256_mul_epu32(a, b));
    acc_odd = _mm256_add_epi64(acc_odd,
                               _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(acc_even, acc_odd));
  std::uint64_t acc = 0;
  for (std::uint64_t lane : lanes) acc = (acc + lane % p) % p;
  for (; i < len; ++i) acc += std::uint64_t{x[i]} * y[i];
  return static_cast<std::uint32_t>(acc % p);
}

}  // namespace

const FpKernels* avx2_kernels() {
  static const FpKernels k{axpy_avx2, scale_avx2, dot_avx2, "avx2"};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &k : nullptr;
}

#else

const FpKernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace pcentral::simd
