#include "pcentral/presentation.hpp"

#include <string>

#include "pcentral/errors.hpp"

namespace pcentral {

PCentralPresentation::PCentralPresentation(std::uint32_t p, FpMatrix commutation,
                                           std::vector<CycloNum> alpha)
    : p_(p), c_(std::move(commutation)), alpha_(std::move(alpha)) {
  require_field_prime(p_);
  if (c_.p() != p_) {
    throw ValidationError("commutation matrix is over Z/" + std::to_string(c_.p()) +
                          ", presentation is over p=" + std::to_string(p_));
  }
  if (c_.rows() != alpha_.size() || c_.cols() != alpha_.size()) {
    throw ValidationError("commutation matrix is " + std::to_string(c_.rows()) + "x" +
                          std::to_string(c_.cols()) + " but there are " +
                          std::to_string(alpha_.size()) + " generators");
  }
  require_alternating(c_);
  for (std::size_t k = 0; k < alpha_.size(); ++k) {
    if (alpha_[k].p() != p_) {
      throw ValidationError("alpha[" + std::to_string(k) + "] lives in Q(rho_" +
                            std::to_string(alpha_[k].p()) + ")");
    }
    if (alpha_[k].is_zero()) {
      throw ValidationError("alpha[" + std::to_string(k) + "] is zero; generators must be invertible");
    }
  }
}

PresentationPtr make_presentation(std::uint32_t p, FpMatrix commutation,
                                  std::vector<CycloNum> alpha) {
  return std::make_shared<const PCentralPresentation>(p, std::move(commutation), std::move(alpha));
}

}  // namespace pcentral
