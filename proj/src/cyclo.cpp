#include "pcentral/cyclo.hpp"

#include <sstream>

#include "pcentral/errors.hpp"
#include "pcentral/fp.hpp"

namespace pcentral {

namespace {

void require_cyclo_prime(std::uint32_t p) {
  if (!is_prime(p)) throw ValidationError("cyclotomic order " + std::to_string(p) + " is not prime");
}

// Folds a power-basis vector of any length onto 1, rho, ..., rho^{p-2}.
std::vector<mpq_class> reduce_power_basis(std::uint32_t p, const std::vector<mpq_class>& raw) {
  std::vector<mpq_class> folded(p);
  for (std::size_t i = 0; i < raw.size(); ++i) folded[i % p] += raw[i];
  const mpq_class top = folded[p - 1];
  folded.pop_back();
  if (top != 0) {
    for (auto& c : folded) c -= top;
  }
  return folded;
}

}  // namespace

CycloNum CycloNum::zero(std::uint32_t p) {
  require_cyclo_prime(p);
  return {p, std::vector<mpq_class>(p - 1)};
}

CycloNum CycloNum::one(std::uint32_t p) { return rational(p, 1); }

CycloNum CycloNum::rational(std::uint32_t p, const mpq_class& q) {
  CycloNum r = zero(p);
  r.coeffs_[0] = q;
  return r;
}

CycloNum CycloNum::root_power(std::uint32_t p, std::int64_t k) {
  return one(p).times_root(k);
}

CycloNum CycloNum::from_coeffs(std::uint32_t p, std::vector<mpq_class> coeffs) {
  require_cyclo_prime(p);
  if (coeffs.size() != p - 1) {
    throw UsageError("Q(rho) with p=" + std::to_string(p) + " needs " + std::to_string(p - 1) +
                     " coefficients, got " + std::to_string(coeffs.size()));
  }
  for (auto& c : coeffs) c.canonicalize();
  return {p, std::move(coeffs)};
}

CycloNum CycloNum::from_power_basis(std::uint32_t p, std::vector<mpq_class> coeffs) {
  require_cyclo_prime(p);
  for (auto& c : coeffs) c.canonicalize();
  return {p, reduce_power_basis(p, coeffs)};
}

void CycloNum::check_same(const CycloNum& o) const {
  if (p_ != o.p_) {
    throw UsageError("Q(rho) operands of different orders " + std::to_string(p_) + " and " +
                     std::to_string(o.p_));
  }
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

bool CycloNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

CycloNum CycloNum::operator+(const CycloNum& o) const {
  CycloNum r = *this;
  r += o;
  return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
  CycloNum r = *this;
  r -= o;
  return r;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  check_same(o);
  const std::size_t len = coeffs_.size();
  std::vector<mpq_class> raw(2 * len - 1);
  for (std::size_t i = 0; i < len; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < len; ++j) {
      if (o.coeffs_[j] == 0) continue;
      raw[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return {p_, reduce_power_basis(p_, raw)};
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }

CycloNum CycloNum::operator/(const CycloNum& o) const { return *this * o.inverse(); }

CycloNum CycloNum::scaled(const mpq_class& q) const {
  CycloNum r = *this;
  for (auto& c : r.coeffs_) c *= q;
  return r;
}

CycloNum CycloNum::times_root(std::int64_t k) const {
  const auto shift = static_cast<std::size_t>(reduce_mod(k, p_));
  std::vector<mpq_class> raw(p_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[(i + shift) % p_] = coeffs_[i];
  return {p_, reduce_power_basis(p_, raw)};
}

CycloNum CycloNum::pow(std::uint64_t e) const {
  CycloNum result = one(p_);
  CycloNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

CycloNum CycloNum::galois(std::uint32_t k) const {
  if (k % p_ == 0) throw UsageError("rho -> rho^0 is not an automorphism");
  std::vector<mpq_class> raw(p_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    raw[(i * k) % p_] += coeffs_[i];
  }
  return {p_, reduce_power_basis(p_, raw)};
}

mpq_class CycloNum::field_norm() const {
  CycloNum prod = *this;
  for (std::uint32_t k = 2; k < p_; ++k) prod *= galois(k);
  return prod.coeffs_[0];
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw ValidationError("inverse of zero in Q(rho)");
  // x^{-1} = (prod_{k>1} sigma_k(x)) / N(x).
  CycloNum cofactor = one(p_);
  for (std::uint32_t k = 2; k < p_; ++k) cofactor *= galois(k);
  const mpq_class norm = (*this * cofactor).coeffs_[0];
  return cofactor.scaled(1 / norm);
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i];
    if (i == 1) os << "*r";
    if (i > 1) os << "*r^" << i;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycloNum& x) { return os << x.to_string(); }

}  // namespace pcentral
