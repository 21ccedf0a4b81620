#include "pcentral/core_identity.hpp"

#include <set>
#include <sstream>

namespace pcentral {

EisPolynomial EisPolynomial::constant(const EisensteinInt& c) {
  EisPolynomial p;
  p.add({0, 0, 0, 0}, c);
  return p;
}

EisPolynomial EisPolynomial::variable(Var v) {
  Monomial m{0, 0, 0, 0};
  m[v] = 1;
  EisPolynomial p;
  p.add(m, EisensteinInt(1));
  return p;
}

void EisPolynomial::add(const Monomial& m, const EisensteinInt& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

EisPolynomial EisPolynomial::operator+(const EisPolynomial& o) const {
  EisPolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

EisPolynomial EisPolynomial::operator-(const EisPolynomial& o) const {
  EisPolynomial r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, -c);
  return r;
}

EisPolynomial EisPolynomial::operator*(const EisPolynomial& o) const {
  EisPolynomial r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      for (std::size_t k = 0; k < 4; ++k) m[k] = m1[k] + m2[k];
      r.add(m, c1 * c2);
    }
  }
  return r;
}

EisPolynomial EisPolynomial::pow(unsigned e) const {
  EisPolynomial r = constant(EisensteinInt(1));
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

EisensteinInt EisPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? EisensteinInt(0) : it->second;
}

EisensteinInt EisPolynomial::evaluate(const std::array<EisensteinInt, 4>& point) const {
  EisensteinInt total(0);
  for (const auto& [m, c] : terms_) {
    EisensteinInt term = c;
    for (std::size_t k = 0; k < 4; ++k) {
      if (m[k] != 0) term *= point[k].pow(m[k]);
    }
    total += term;
  }
  return total;
}

std::string monomial_to_string(const EisPolynomial::Monomial& m) {
  static const char* names[4] = {"a", "b", "alpha", "beta"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < 4; ++k) {
    if (m[k] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << names[k];
    if (m[k] > 1) os << "^" << m[k];
  }
  if (first) os << "1";
  return os.str();
}

namespace {

using V = EisPolynomial;

V c(long a, long b = 0) { return V::constant(EisensteinInt(a, b)); }

}  // namespace

EisPolynomial core_identity_lhs() {
  const V a = V::variable(V::A), b = V::variable(V::B);
  const V alpha = V::variable(V::Alpha), beta = V::variable(V::Beta);
  return alpha * (a.pow(3) * alpha + b.pow(3) * beta).pow(3);
}

EisPolynomial core_identity_rhs(IdentityReading reading) {
  const V a = V::variable(V::A), b = V::variable(V::B);
  const V alpha = V::variable(V::Alpha), beta = V::variable(V::Beta);
  const V rho = c(0, 1);
  const V three_one_minus_rho = c(3, -3);
  // 1 - rho^{-1} = 1 - rho^2 = 2 + rho
  const V three_one_minus_rho_inv = c(6, 3);
  const unsigned k = reading == IdentityReading::Cubes ? 3 : 2;
  return alpha * (a.pow(3) * alpha + rho * b.pow(3) * beta).pow(3) +
         three_one_minus_rho * beta * (a.pow(2) * b * alpha).pow(k) +
         three_one_minus_rho_inv * alpha.pow(2) * beta.pow(2) * (a * b.pow(2)).pow(k);
}

IdentityReport verify_core_identity(IdentityReading reading) {
  IdentityReport report{reading, core_identity_lhs(), core_identity_rhs(reading), 0, {}};
  std::set<EisPolynomial::Monomial> support;
  for (const auto& [m, _] : report.lhs.terms()) support.insert(m);
  for (const auto& [m, _] : report.rhs.terms()) support.insert(m);
  report.monomials_compared = support.size();
  for (const auto& m : support) {
    EisensteinInt l = report.lhs.coefficient(m);
    EisensteinInt r = report.rhs.coefficient(m);
    if (!(l == r)) report.mismatches.push_back({m, std::move(l), std::move(r)});
  }
  return report;
}

}  // namespace pcentral
