#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pcentral/clifford.hpp"
#include "pcentral/fp_matrix.hpp"
#include "pcentral/presentation.hpp"

namespace pcentral {

// y_i y_j = rho^{exponent} y_j y_i, checked by multiplying in the engine.
struct RelationCheck {
  std::size_t i;
  std::size_t j;
  std::uint32_t exponent;
  bool verified;
};

struct GeneratorChange {
  PresentationPtr presentation;         // C' = D C D^t, alpha'_i = y_i^p
  std::vector<Exponents> generators;    // exponent vector of y_i (row i of D)
  std::vector<RelationCheck> certificate;
  // For odd p: y_i^p equals prod_k alpha_k^{d_ik} with no root-of-unity factor.
  bool phase_free = true;

  bool verified() const;
};

// Replaces x_i by y_i = x_1^{d_i1} ... x_n^{d_in}. Throws ValidationError if D
// is singular or not n x n over the presentation's field.
GeneratorChange change_generators(const PresentationPtr& pres, const FpMatrix& d);

// prod_k alpha_k^{d_k}, the p-th power of x^d up to a root of unity.
CycloNum monomial_pth_power_closed_form(const PCentralPresentation& pres, const Exponents& d);

struct CommutativeGenerator {
  Exponents exponents;
  CycloNum pth_power;
};

// C(B) ~ (a_1, b_1)_p (x) ... (x) (a_m, b_m)_p (x) Q(rho)[y_{2m+1}, ..., y_n].
struct Decomposition {
  FpMatrix transform;
  std::size_t blocks;
  std::vector<std::pair<CycloNum, CycloNum>> symbols;
  std::vector<CommutativeGenerator> commutative;
  mpz_class degree;  // p^m
  GeneratorChange change;
};

// Throws UnsupportedError for p = 2.
Decomposition decompose(const PresentationPtr& pres);

}  // namespace pcentral
