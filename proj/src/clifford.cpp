#include "pcentral/clifford.hpp"

#include <string>

#include "pcentral/errors.hpp"

namespace pcentral {

namespace {

struct MonomialProduct {
  Exponents exps;
  std::int64_t phase = 0;  // power of rho
  CycloNum factor;         // product of the alpha_j picked up by x_j^p reductions
};

// x^e * x^f: moving x_j^{f_j} left past x_i^{e_i} (i > j) costs rho^{e_i f_j C(i,j)}.
MonomialProduct multiply_monomials(const PCentralPresentation& pres, const Exponents& e,
                                   const Exponents& f) {
  const std::uint32_t p = pres.p();
  const FpMatrix& c = pres.commutation();
  const std::size_t n = pres.n();
  MonomialProduct out{Exponents(n), 0, CycloNum::one(p)};
  for (std::size_t i = 1; i < n; ++i) {
    if (e[i] == 0) continue;
    for (std::size_t j = 0; j < i; ++j) {
      if (f[j] != 0 && c(i, j) != 0) out.phase += std::int64_t{e[i]} * f[j] * c(i, j);
    }
  }
  out.phase %= p;
  for (std::size_t j = 0; j < n; ++j) {
    std::uint32_t s = e[j] + f[j];
    if (s >= p) {
      s -= p;
      out.factor *= pres.alpha()[j];
    }
    out.exps[j] = s;
  }
  return out;
}

std::size_t basis_size(const PCentralPresentation& pres) {
  std::size_t size = 1;
  for (std::size_t k = 0; k < pres.n(); ++k) {
    size *= pres.p();
    if (size > 4096) throw UnsupportedError("left-regular representation larger than 4096");
  }
  return size;
}

Exponents decode_index(std::size_t index, const PCentralPresentation& pres) {
  Exponents e(pres.n());
  for (std::size_t k = pres.n(); k-- > 0;) {
    e[k] = static_cast<std::uint32_t>(index % pres.p());
    index /= pres.p();
  }
  return e;
}

std::size_t encode_index(const Exponents& e, const PCentralPresentation& pres) {
  std::size_t index = 0;
  for (auto x : e) index = index * pres.p() + x;
  return index;
}

}  // namespace

CliffordElement::CliffordElement(PresentationPtr pres) : pres_(std::move(pres)) {
  if (!pres_) throw UsageError("null presentation");
}

CliffordElement CliffordElement::scalar(PresentationPtr pres, const CycloNum& c) {
  CliffordElement u(std::move(pres));
  u.add_term(Exponents(u.pres_->n(), 0), c);
  return u;
}

CliffordElement CliffordElement::generator(PresentationPtr pres, std::size_t k) {
  if (k >= pres->n()) throw UsageError("generator index " + std::to_string(k) + " out of range");
  Exponents e(pres->n(), 0);
  e[k] = 1;
  return monomial(std::move(pres), std::move(e));
}

CliffordElement CliffordElement::monomial(PresentationPtr pres, Exponents exps) {
  const CycloNum one = CycloNum::one(pres->p());
  return monomial(std::move(pres), std::move(exps), one);
}

CliffordElement CliffordElement::monomial(PresentationPtr pres, Exponents exps,
                                          const CycloNum& coeff) {
  if (exps.size() != pres->n()) {
    throw UsageError("monomial needs " + std::to_string(pres->n()) + " exponents");
  }
  for (auto& x : exps) x %= pres->p();
  CliffordElement u(std::move(pres));
  u.add_term(exps, coeff);
  return u;
}

void CliffordElement::add_term(const Exponents& e, const CycloNum& c) {
  if (c.p() != pres_->p()) throw UsageError("coefficient field does not match presentation");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CliffordElement::check_same(const CliffordElement& o) const {
  if (pres_ != o.pres_ && !(*pres_ == *o.pres_)) {
    throw UsageError("elements belong to different presentations");
  }
}

bool CliffordElement::is_scalar() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto x : terms_.begin()->first) {
    if (x != 0) return false;
  }
  return true;
}

CycloNum CliffordElement::scalar_value() const {
  if (!is_scalar()) throw ValidationError("element is not a scalar");
  return terms_.empty() ? CycloNum::zero(p()) : terms_.begin()->second;
}

CycloNum CliffordElement::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? CycloNum::zero(p()) : it->second;
}

std::optional<Exponents> CliffordElement::as_monomial() const {
  if (terms_.size() != 1) return std::nullopt;
  return terms_.begin()->first;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
  CliffordElement r = *this;
  r += o;
  return r;
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const { return *this + (-o); }

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
  check_same(o);
  CliffordElement r(pres_);
  for (const auto& [e, a] : terms_) {
    for (const auto& [f, b] : o.terms_) {
      MonomialProduct m = multiply_monomials(*pres_, e, f);
      CycloNum coeff = (a * b).times_root(m.phase);
      if (!m.factor.is_one()) coeff *= m.factor;
      r.add_term(m.exps, coeff);
    }
  }
  return r;
}

CliffordElement CliffordElement::scaled(const CycloNum& c) const {
  CliffordElement r(pres_);
  for (const auto& [e, a] : terms_) r.add_term(e, a * c);
  return r;
}

CliffordElement CliffordElement::pow(std::uint64_t e) const {
  CliffordElement result = scalar(pres_, CycloNum::one(p()));
  for (std::uint64_t i = 0; i < e; ++i) result = result * *this;
  return result;
}

CliffordElement CliffordElement::inverse() const {
  if (is_zero()) throw ValidationError("zero is not invertible");
  CliffordElement top = pow(p() - 1);
  CliffordElement power = top * *this;
  if (power.is_scalar()) {
    return top.scaled(power.scalar_value().inverse());
  }
  return inverse_by_linear_solve();
}

CliffordElement CliffordElement::inverse_by_linear_solve() const {
  const std::size_t dim = basis_size(*pres_);
  const std::uint32_t p = pres_->p();
  // Column j of the system is u * (basis element j); augmented with e_0.
  std::vector<std::vector<CycloNum>> a(dim, std::vector<CycloNum>(dim + 1, CycloNum::zero(p)));
  for (std::size_t j = 0; j < dim; ++j) {
    CliffordElement col = *this * monomial(pres_, decode_index(j, *pres_));
    for (const auto& [e, c] : col.terms_) a[encode_index(e, *pres_)][j] = c;
  }
  a[0][dim] = CycloNum::one(p);

  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    while (piv < dim && a[piv][col].is_zero()) ++piv;
    if (piv == dim) throw ValidationError("element is not invertible");
    std::swap(a[piv], a[col]);
    const CycloNum inv = a[col][col].inverse();
    for (std::size_t k = col; k <= dim; ++k) a[col][k] *= inv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const CycloNum f = a[r][col];
      for (std::size_t k = col; k <= dim; ++k) {
        if (!a[col][k].is_zero()) a[r][k] -= f * a[col][k];
      }
    }
  }
  CliffordElement w(pres_);
  for (std::size_t j = 0; j < dim; ++j) w.add_term(decode_index(j, *pres_), a[j][dim]);
  return w;
}

bool CliffordElement::operator==(const CliffordElement& o) const {
  return (pres_ == o.pres_ || *pres_ == *o.pres_) && terms_ == o.terms_;
}

CliffordElement mul(const CliffordElement& u, const CliffordElement& v) { return u * v; }

CliffordElement pth_power(const CliffordElement& u) { return u.pow(u.p()); }

bool is_p_central(const CliffordElement& u) { return pth_power(u).is_scalar(); }

std::optional<std::uint32_t> commutation_exponent(const CliffordElement& u,
                                                  const CliffordElement& v) {
  const CliffordElement uv = u * v;
  const CliffordElement vu = v * u;
  for (std::uint32_t k = 0; k < u.p(); ++k) {
    if (uv == vu.scaled(CycloNum::root_power(u.p(), k))) return k;
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const CliffordElement& u) {
  if (u.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : u.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      os << "*x" << (k + 1);
      if (e[k] > 1) os << "^" << e[k];
    }
  }
  return os;
}

}  // namespace pcentral
