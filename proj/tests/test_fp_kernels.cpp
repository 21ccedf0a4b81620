#include <doctest.h>

#include <cstdlib>
#include <random>
#include <vector>

#include "pcentral/simd/fp_kernels.hpp"

using namespace pcentral::simd;

namespace {

std::vector<std::uint32_t> residues(std::mt19937_64& rng, std::size_t len, std::uint32_t p) {
  std::vector<std::uint32_t> v(len);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

void check_equivalent(const FpKernels& ref, const FpKernels& alt) {
  std::mt19937_64 rng(2024);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 4093u, 4099u, 65521u}) {
    for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 67u, 1000u}) {
      for (int rep = 0; rep < 4; ++rep) {
        const auto src = residues(rng, len, p);
        const auto dst = residues(rng, len, p);
        const auto c = static_cast<std::uint32_t>(rng() % p);
        // Extremes exercise the reduction boundary.
        const std::uint32_t coef = rep == 0 ? p - 1 : c;

        auto d1 = dst, d2 = dst;
        ref.axpy(d1.data(), src.data(), coef, len, p);
        alt.axpy(d2.data(), src.data(), coef, len, p);
        CHECK(d1 == d2);

        d1 = dst;
        d2 = dst;
        ref.scale(d1.data(), coef, len, p);
        alt.scale(d2.data(), coef, len, p);
        CHECK(d1 == d2);

        CHECK(ref.dot(src.data(), dst.data(), len, p) == alt.dot(src.data(), dst.data(), len, p));
      }
    }
  }
}

}  // namespace

TEST_CASE("scalar reference kernels") {
  const auto& k = scalar_kernels();
  std::vector<std::uint32_t> d{1, 2, 3}, s{2, 2, 2};
  k.axpy(d.data(), s.data(), 2, 3, 5);
  CHECK(d == std::vector<std::uint32_t>{0, 1, 2});
  k.scale(d.data(), 3, 3, 5);
  CHECK(d == std::vector<std::uint32_t>{0, 3, 1});
  CHECK(k.dot(d.data(), s.data(), 3, 5) == 3);
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
  const FpKernels* avx2 = avx2_kernels();
  if (avx2 == nullptr) {
    MESSAGE("AVX2 not available on this CPU; equivalence test skipped");
    return;
  }
  CHECK(avx2->name == "avx2");
  check_equivalent(scalar_kernels(), *avx2);
}

TEST_CASE("active kernels agree with the scalar reference") {
  check_equivalent(scalar_kernels(), active_kernels());
}

TEST_CASE("kernel selection honors PCENTRAL_FORCE_SCALAR") {
  if (std::getenv("PCENTRAL_FORCE_SCALAR") != nullptr) {
    CHECK(active_kernels().name == scalar_kernels().name);
  } else if (avx2_kernels() != nullptr) {
    CHECK(active_kernels().name == avx2_kernels()->name);
  }
}
