#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "pcentral/clifford.hpp"
#include "pcentral/cyclo.hpp"
#include "pcentral/eisenstein.hpp"

namespace pcentral {

// The degree-3 symbol algebra over Q(rho): y x = rho x y, x^3 = alpha, y^3 = beta.
class SymbolAlgebraModel {
 public:
  // alpha and beta must be nonzero elements of Q(rho), p = 3.
  SymbolAlgebraModel(const CycloNum& alpha, const CycloNum& beta);

  const PresentationPtr& presentation() const { return pres_; }
  const CycloNum& alpha() const { return pres_->alpha()[0]; }
  const CycloNum& beta() const { return pres_->alpha()[1]; }
  CliffordElement x() const { return CliffordElement::generator(pres_, 0); }
  CliffordElement y() const { return CliffordElement::generator(pres_, 1); }
  CliffordElement x2y2() const { return CliffordElement::monomial(pres_, {2, 2}); }

  // star3(x, y, x^2 y^2) == -3 rho alpha beta.
  bool calibration_holds() const;

 private:
  PresentationPtr pres_;
};

struct ConjugationResult {
  CliffordElement z;    // (a x + b y) x (a x + b y)^{-1}
  CycloNum z_cubed;     // must equal alpha
  // Coefficients of (a^3 alpha + b^3 beta) * z on x, y, x^2 y^2.
  std::array<CycloNum, 3> coefficients;
  // z has no support outside x, y, x^2 y^2.
  bool supported_on_three;
};

// Throws DegenerateParameterError when a^3 alpha + b^3 beta = 0.
ConjugationResult conjugate_and_cube(const SymbolAlgebraModel& model, const CycloNum& a,
                                     const CycloNum& b);

// (a^3 alpha + rho b^3 beta,  (1 - rho^{-1}) b a^2 alpha,  (1 - rho) a b^2)
std::array<CycloNum, 3> conjugation_closed_form(const CycloNum& alpha, const CycloNum& beta,
                                                const CycloNum& a, const CycloNum& b);

// gamma Y^3 = gamma X1^3 + beta X2^3 + gamma^2 beta^2 X3^3
struct CubicSolution {
  EisensteinInt gamma, beta, a, c;
  EisensteinInt Y, X1, X2, X3;
  bool degenerate = false;

  bool operator==(const CubicSolution&) const = default;
};

// alpha Y^3 = alpha X1^3 + 3(1 - rho) beta X2^3 + 3(1 - rho^{-1}) alpha^2 beta^2 X3^3
struct RawCubicSolution {
  EisensteinInt alpha, beta, a, b;
  EisensteinInt Y, X1, X2, X3;
  bool degenerate = false;

  bool operator==(const RawCubicSolution&) const = default;
};

// Y = a^3 gamma - rho beta c^3, X1 = a^3 gamma - rho^2 beta c^3,
// X2 = gamma (1 - rho) a^2 c, X3 = (1 - rho) a c^2; verified before return.
CubicSolution gen_solution(const EisensteinInt& gamma, const EisensteinInt& beta,
                           const EisensteinInt& a, const EisensteinInt& c);

// Y = a^3 alpha + b^3 beta, X1 = a^3 alpha + rho b^3 beta, X2 = a^2 b alpha, X3 = a b^2.
RawCubicSolution gen_solution_raw(const EisensteinInt& alpha, const EisensteinInt& beta,
                                  const EisensteinInt& a, const EisensteinInt& b);

bool verify_solution(const CubicSolution& s);
bool verify_raw_solution(const RawCubicSolution& s);

// Every Eisenstein integer of norm <= bound, sorted by (a, b).
std::vector<EisensteinInt> eisenstein_ball(std::uint64_t bound);

// Calls `emit` with gen_solution(gamma, beta, a, c) for all a, c in the ball of
// the given norm bound, in lexicographic (a.a, a.b, c.a, c.b) order. Generation
// runs on `threads` workers (0 = hardware concurrency) with ordered emission.
void enumerate_solutions(const EisensteinInt& gamma, const EisensteinInt& beta,
                         std::uint64_t bound,
                         const std::function<void(const CubicSolution&)>& emit,
                         unsigned threads = 0);

}  // namespace pcentral
