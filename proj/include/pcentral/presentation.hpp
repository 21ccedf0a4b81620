#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "pcentral/cyclo.hpp"
#include "pcentral/fp_matrix.hpp"

namespace pcentral {

// Generators x_1..x_n over Q(rho) with
//   x_i x_j = rho^{C(i,j)} x_j x_i   and   x_k^p = alpha_k.
// C is alternating over Z/pZ; every alpha_k is nonzero.
class PCentralPresentation {
 public:
  // Throws ValidationError on any violated invariant.
  PCentralPresentation(std::uint32_t p, FpMatrix commutation, std::vector<CycloNum> alpha);

  std::uint32_t p() const { return p_; }
  std::size_t n() const { return alpha_.size(); }
  const FpMatrix& commutation() const { return c_; }
  const std::vector<CycloNum>& alpha() const { return alpha_; }

  bool operator==(const PCentralPresentation&) const = default;

 private:
  std::uint32_t p_;
  FpMatrix c_;
  std::vector<CycloNum> alpha_;
};

using PresentationPtr = std::shared_ptr<const PCentralPresentation>;

PresentationPtr make_presentation(std::uint32_t p, FpMatrix commutation,
                                  std::vector<CycloNum> alpha);

}  // namespace pcentral
