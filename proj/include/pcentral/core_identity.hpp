#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pcentral/eisenstein.hpp"

namespace pcentral {

// Polynomial in the commuting indeterminates (a, b, alpha, beta) with
// coefficients in Z[rho]. Zero coefficients are never stored.
class EisPolynomial {
 public:
  using Monomial = std::array<unsigned, 4>;
  enum Var : std::size_t { A = 0, B = 1, Alpha = 2, Beta = 3 };

  EisPolynomial() = default;
  static EisPolynomial constant(const EisensteinInt& c);
  static EisPolynomial variable(Var v);

  const std::map<Monomial, EisensteinInt>& terms() const { return terms_; }

  EisPolynomial operator+(const EisPolynomial& o) const;
  EisPolynomial operator-(const EisPolynomial& o) const;
  EisPolynomial operator*(const EisPolynomial& o) const;
  EisPolynomial pow(unsigned e) const;

  EisensteinInt coefficient(const Monomial& m) const;
  EisensteinInt evaluate(const std::array<EisensteinInt, 4>& point) const;

  bool operator==(const EisPolynomial&) const = default;

 private:
  void add(const Monomial& m, const EisensteinInt& c);
  std::map<Monomial, EisensteinInt> terms_;
};

std::string monomial_to_string(const EisPolynomial::Monomial& m);

// How the two correction terms on the right are read: as cubes (X_2^3, X_3^3)
// or literally as squares.
enum class IdentityReading { Cubes, Squares };

struct MonomialMismatch {
  EisPolynomial::Monomial monomial;
  EisensteinInt lhs;
  EisensteinInt rhs;
};

struct IdentityReport {
  IdentityReading reading;
  EisPolynomial lhs;
  EisPolynomial rhs;
  std::size_t monomials_compared = 0;  // size of the union of both supports
  std::vector<MonomialMismatch> mismatches;

  bool agrees() const { return mismatches.empty(); }
};

// Left side  alpha (a^3 alpha + b^3 beta)^3
// Right side alpha (a^3 alpha + rho b^3 beta)^3 + 3(1 - rho) beta (a^2 b alpha)^k
//            + 3(1 - rho^{-1}) alpha^2 beta^2 (a b^2)^k,   k = 3 or 2.
EisPolynomial core_identity_lhs();
EisPolynomial core_identity_rhs(IdentityReading reading = IdentityReading::Cubes);

IdentityReport verify_core_identity(IdentityReading reading = IdentityReading::Cubes);

}  // namespace pcentral
