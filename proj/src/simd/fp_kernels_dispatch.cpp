#include <cstdlib>
#include <string_view>

#include "pcentral/simd/fp_kernels.hpp"

namespace pcentral::simd {

namespace {

const FpKernels& select_kernels() {
  const char* force = std::getenv("PCENTRAL_FORCE_SCALAR");
  if (force != nullptr && std::string_view(force) != "0") return scalar_kernels();
  if (const FpKernels* k = avx2_kernels()) return *k;
  return scalar_kernels();
}

}  // namespace

const FpKernels& active_kernels() {
  static const FpKernels& k = select_kernels();
  return k;
}

}  // namespace pcentral::simd
