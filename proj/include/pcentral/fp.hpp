#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

namespace pcentral {

// Largest modulus accepted by the Z/pZ layer; keeps a*b + c inside 32 bits.
inline constexpr std::uint32_t kMaxFieldPrime = 65521;

bool is_prime(std::uint64_t n);

// Throws ValidationError unless p is a prime not exceeding kMaxFieldPrime.
void require_field_prime(std::uint64_t p);

std::uint32_t reduce_mod(std::int64_t x, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p);
// Inverse of a nonzero residue; throws ValidationError on zero.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

// An element of Z/pZ carrying its modulus.
class FpScalar {
 public:
  FpScalar(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  FpScalar operator+(FpScalar o) const;
  FpScalar operator-(FpScalar o) const;
  FpScalar operator*(FpScalar o) const;
  FpScalar operator/(FpScalar o) const;
  FpScalar operator-() const;
  FpScalar inverse() const;
  FpScalar pow(std::uint64_t e) const;

  bool operator==(const FpScalar&) const = default;

 private:
  FpScalar(std::uint32_t value, std::uint32_t p, bool) : value_(value), p_(p) {}
  void check_same(FpScalar o) const;

  std::uint32_t value_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, FpScalar x);

}  // namespace pcentral
