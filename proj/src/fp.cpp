#include "pcentral/fp.hpp"

#include <string>

#include "pcentral/errors.hpp"

namespace pcentral {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_field_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw ValidationError("modulus " + std::to_string(p) + " is not prime");
  }
  if (p > kMaxFieldPrime) {
    throw UnsupportedError("modulus " + std::to_string(p) + " exceeds " +
                           std::to_string(kMaxFieldPrime));
  }
}

std::uint32_t reduce_mod(std::int64_t x, std::uint32_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  std::uint64_t b = base % p;
  while (exp > 0) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw ValidationError("zero has no inverse mod " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

FpScalar::FpScalar(std::int64_t value, std::uint32_t p) : p_(p) {
  require_field_prime(p);
  value_ = reduce_mod(value, p);
}

void FpScalar::check_same(FpScalar o) const {
  if (p_ != o.p_) {
    throw UsageError("mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
  }
}

FpScalar FpScalar::operator+(FpScalar o) const {
  check_same(o);
  return {(value_ + o.value_) % p_, p_, true};
}

FpScalar FpScalar::operator-(FpScalar o) const {
  check_same(o);
  return {(value_ + p_ - o.value_) % p_, p_, true};
}

FpScalar FpScalar::operator*(FpScalar o) const {
  check_same(o);
  return {static_cast<std::uint32_t>(std::uint64_t{value_} * o.value_ % p_), p_, true};
}

FpScalar FpScalar::operator/(FpScalar o) const {
  check_same(o);
  return *this * o.inverse();
}

FpScalar FpScalar::operator-() const { return {(p_ - value_) % p_, p_, true}; }

FpScalar FpScalar::inverse() const { return {inv_mod(value_, p_), p_, true}; }

FpScalar FpScalar::pow(std::uint64_t e) const { return {pow_mod(value_, e, p_), p_, true}; }

std::ostream& operator<<(std::ostream& os, FpScalar x) {
  return os << x.value() << " (mod " << x.modulus() << ")";
}

}  // namespace pcentral
