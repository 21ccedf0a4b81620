#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

#include "pcentral/cyclo.hpp"

namespace pcentral {

// a + b*rho in Z[rho], rho a primitive cube root of unity (rho^2 = -1 - rho).
struct EisensteinInt {
  mpz_class a;
  mpz_class b;

  EisensteinInt() = default;
  EisensteinInt(mpz_class a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {}
  EisensteinInt(long a_) : a(a_), b(0) {}  // NOLINT: integers embed implicitly

  static EisensteinInt rho() { return {0, 1}; }

  bool is_zero() const { return a == 0 && b == 0; }

  EisensteinInt operator+(const EisensteinInt& o) const { return {a + o.a, b + o.b}; }
  EisensteinInt operator-(const EisensteinInt& o) const { return {a - o.a, b - o.b}; }
  EisensteinInt operator-() const { return {-a, -b}; }
  EisensteinInt operator*(const EisensteinInt& o) const;
  EisensteinInt& operator+=(const EisensteinInt& o);
  EisensteinInt& operator*=(const EisensteinInt& o);

  EisensteinInt pow(unsigned e) const;
  // Complex conjugate, a + b*rho^2.
  EisensteinInt conj() const { return {a - b, -b}; }

  bool operator==(const EisensteinInt& o) const { return a == o.a && b == o.b; }

  std::string to_string() const;
};

// a^2 - ab + b^2.
mpz_class eis_norm(const EisensteinInt& x);

inline EisensteinInt eis_mul(const EisensteinInt& x, const EisensteinInt& y) { return x * y; }

// Ring embedding Z[rho] -> Q(rho) at p = 3.
CycloNum to_cyclo(const EisensteinInt& x);

// Parses literals such as "2-1*r", "-r", "3", "r+4"; whitespace is ignored.
// Throws ParseError.
EisensteinInt parse_eisenstein(std::string_view text);

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x);

}  // namespace pcentral
