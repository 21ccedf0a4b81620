#include "pcentral/decompose.hpp"

#include <string>

#include "pcentral/errors.hpp"

namespace pcentral {

bool GeneratorChange::verified() const {
  if (!phase_free) return false;
  for (const auto& r : certificate) {
    if (!r.verified) return false;
  }
  return true;
}

CycloNum monomial_pth_power_closed_form(const PCentralPresentation& pres, const Exponents& d) {
  CycloNum out = CycloNum::one(pres.p());
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] != 0) out *= pres.alpha()[k].pow(d[k]);
  }
  return out;
}

GeneratorChange change_generators(const PresentationPtr& pres, const FpMatrix& d) {
  const std::uint32_t p = pres->p();
  const std::size_t n = pres->n();
  if (d.p() != p || d.rows() != n || d.cols() != n) {
    throw ValidationError("generator change must be " + std::to_string(n) + "x" +
                          std::to_string(n) + " over Z/" + std::to_string(p));
  }
  if (!is_invertible(d)) throw ValidationError("generator change matrix is singular");

  GeneratorChange out;
  std::vector<CliffordElement> ys;
  std::vector<CycloNum> alpha;
  for (std::size_t i = 0; i < n; ++i) {
    Exponents e(d.row(i).begin(), d.row(i).end());
    CliffordElement y = CliffordElement::monomial(pres, e);
    CliffordElement power = pth_power(y);
    if (!power.is_scalar()) {
      throw std::logic_error("p-th power of a monomial generator is not central");
    }
    CycloNum a = power.scalar_value();
    if (p % 2 == 1 && a != monomial_pth_power_closed_form(*pres, e)) out.phase_free = false;
    alpha.push_back(std::move(a));
    out.generators.push_back(std::move(e));
    ys.push_back(std::move(y));
  }

  FpMatrix c2 = mat_mul(mat_mul(d, pres->commutation()), d.transpose());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::uint32_t k = c2(i, j);
      const bool ok = ys[i] * ys[j] == (ys[j] * ys[i]).scaled(CycloNum::root_power(p, k));
      out.certificate.push_back({i, j, k, ok});
    }
  }
  out.presentation = make_presentation(p, std::move(c2), std::move(alpha));
  return out;
}

Decomposition decompose(const PresentationPtr& pres) {
  const std::uint32_t p = pres->p();
  if (p == 2) throw UnsupportedError("decomposition is not implemented for p = 2");

  AlternatingReduction red = reduce_alternating(pres->commutation());
  GeneratorChange change = change_generators(pres, red.transform);
  if (!change.verified() || change.presentation->commutation() != red.canonical) {
    throw std::logic_error("decomposition certificate failed");
  }

  const auto& alpha = change.presentation->alpha();
  Decomposition out{red.transform, red.blocks, {}, {}, 0, std::move(change)};
  for (std::size_t k = 0; k < red.blocks; ++k) {
    out.symbols.emplace_back(alpha[2 * k], alpha[2 * k + 1]);
  }
  for (std::size_t i = 2 * red.blocks; i < pres->n(); ++i) {
    out.commutative.push_back({out.change.generators[i], alpha[i]});
  }
  mpz_ui_pow_ui(out.degree.get_mpz_t(), p, red.blocks);
  return out;
}

}  // namespace pcentral
