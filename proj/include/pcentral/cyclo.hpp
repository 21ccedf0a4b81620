#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace pcentral {

// An element of Q(rho), rho a primitive p-th root of unity, stored as
// c_0 + c_1 rho + ... + c_{p-2} rho^{p-2}, i.e. reduced modulo the p-th
// cyclotomic polynomial. Coefficients are GMP rationals, always canonical.
//
// p = 2 is allowed: rho = -1 and the representation has a single coefficient.
class CycloNum {
 public:
  static CycloNum zero(std::uint32_t p);
  static CycloNum one(std::uint32_t p);
  static CycloNum rational(std::uint32_t p, const mpq_class& q);
  // rho^(k mod p).
  static CycloNum root_power(std::uint32_t p, std::int64_t k);
  // Takes p-1 coefficients; throws UsageError on a length mismatch.
  static CycloNum from_coeffs(std::uint32_t p, std::vector<mpq_class> coeffs);
  // Accepts any number of coefficients in the power basis 1, rho, rho^2, ...
  // and reduces them (rho^p = 1, then the cyclotomic relation).
  static CycloNum from_power_basis(std::uint32_t p, std::vector<mpq_class> coeffs);

  std::uint32_t p() const { return p_; }
  std::span<const mpq_class> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  const mpq_class& constant_term() const { return coeffs_[0]; }

  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator/(const CycloNum& o) const;
  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);

  CycloNum scaled(const mpq_class& q) const;
  // this * rho^k without a general multiplication.
  CycloNum times_root(std::int64_t k) const;
  CycloNum pow(std::uint64_t e) const;
  // Image under the automorphism rho -> rho^k, gcd(k, p) = 1.
  CycloNum galois(std::uint32_t k) const;
  // Product of all Galois conjugates; always rational.
  mpq_class field_norm() const;
  // Throws ValidationError on zero.
  CycloNum inverse() const;

  bool operator==(const CycloNum& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }

  std::string to_string() const;

 private:
  CycloNum(std::uint32_t p, std::vector<mpq_class> coeffs) : p_(p), coeffs_(std::move(coeffs)) {}
  void check_same(const CycloNum& o) const;

  std::uint32_t p_;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloNum& x);

}  // namespace pcentral
