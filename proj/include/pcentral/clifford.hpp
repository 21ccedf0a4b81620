#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "pcentral/cyclo.hpp"
#include "pcentral/presentation.hpp"

namespace pcentral {

using Exponents = std::vector<std::uint32_t>;

// An element of C(B): sum of coeff(e) * x_1^{e_1} ... x_n^{e_n}, normal order
// x_1 < x_2 < ... < x_n, exponents in [0, p-1], zero coefficients never stored.
class CliffordElement {
 public:
  using Terms = std::map<Exponents, CycloNum>;

  // The zero element.
  explicit CliffordElement(PresentationPtr pres);

  static CliffordElement scalar(PresentationPtr pres, const CycloNum& c);
  static CliffordElement generator(PresentationPtr pres, std::size_t k);
  // Exponents are reduced mod p.
  static CliffordElement monomial(PresentationPtr pres, Exponents exps);
  static CliffordElement monomial(PresentationPtr pres, Exponents exps, const CycloNum& coeff);

  const PresentationPtr& presentation() const { return pres_; }
  const Terms& terms() const { return terms_; }
  std::uint32_t p() const { return pres_->p(); }

  bool is_zero() const { return terms_.empty(); }
  // Support contained in the zero exponent vector (zero counts as scalar).
  bool is_scalar() const;
  // Throws ValidationError unless is_scalar().
  CycloNum scalar_value() const;
  CycloNum coefficient(const Exponents& exps) const;
  // The single monomial of a one-term element.
  std::optional<Exponents> as_monomial() const;

  CliffordElement operator+(const CliffordElement& o) const;
  CliffordElement operator-(const CliffordElement& o) const;
  CliffordElement operator-() const;
  CliffordElement operator*(const CliffordElement& o) const;
  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement scaled(const CycloNum& c) const;
  CliffordElement pow(std::uint64_t e) const;

  // For a p-central element with u^p = s != 0 returns u^{p-1} / s; otherwise
  // solves u * w = 1 in the left-regular representation.
  // Throws ValidationError if u is not invertible.
  CliffordElement inverse() const;
  CliffordElement inverse_by_linear_solve() const;

  // Same presentation (by value) and same terms.
  bool operator==(const CliffordElement& o) const;

 private:
  void check_same(const CliffordElement& o) const;
  void add_term(const Exponents& e, const CycloNum& c);

  PresentationPtr pres_;
  Terms terms_;
};

// Normal-ordered exact product. Throws UsageError across presentations.
CliffordElement mul(const CliffordElement& u, const CliffordElement& v);

// u multiplied by itself p times.
CliffordElement pth_power(const CliffordElement& u);

bool is_p_central(const CliffordElement& u);

// k with u v = rho^k v u, if any such k exists.
std::optional<std::uint32_t> commutation_exponent(const CliffordElement& u,
                                                  const CliffordElement& v);

std::ostream& operator<<(std::ostream& os, const CliffordElement& u);

}  // namespace pcentral
