#include "pcentral/cubic.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

#include "pcentral/coherence.hpp"
#include "pcentral/errors.hpp"

namespace pcentral {

namespace {

FpMatrix symbol_commutation() {
  // x_2 x_1 = rho x_1 x_2.
  return FpMatrix(3, {{0, 2}, {1, 0}});
}

const EisensteinInt& one_minus_rho() {
  static const EisensteinInt v{1, -1};
  return v;
}

}  // namespace

SymbolAlgebraModel::SymbolAlgebraModel(const CycloNum& alpha, const CycloNum& beta)
    : pres_(make_presentation(3, symbol_commutation(), {alpha, beta})) {}

bool SymbolAlgebraModel::calibration_holds() const {
  const CycloNum expected = (alpha() * beta()).times_root(1).scaled(-3);
  const CliffordElement s = star3(x(), y(), x2y2());
  return s.is_scalar() && s.scalar_value() == expected;
}

std::array<CycloNum, 3> conjugation_closed_form(const CycloNum& alpha, const CycloNum& beta,
                                                const CycloNum& a, const CycloNum& b) {
  const CycloNum one = CycloNum::one(3);
  const CycloNum a3 = a.pow(3);
  const CycloNum b3 = b.pow(3);
  return {a3 * alpha + (b3 * beta).times_root(1),
          (one - CycloNum::root_power(3, -1)) * b * a * a * alpha,
          (one - CycloNum::root_power(3, 1)) * a * b * b};
}

ConjugationResult conjugate_and_cube(const SymbolAlgebraModel& model, const CycloNum& a,
                                     const CycloNum& b) {
  const CycloNum norm = a.pow(3) * model.alpha() + b.pow(3) * model.beta();
  if (norm.is_zero()) {
    throw DegenerateParameterError("a^3 alpha + b^3 beta = 0: a x + b y is not invertible");
  }
  const CliffordElement v = model.x().scaled(a) + model.y().scaled(b);
  const CliffordElement v2 = v * v;
  const CliffordElement v3 = v2 * v;
  if (!v3.is_scalar() || v3.scalar_value() != norm) {
    throw std::logic_error("(a x + b y)^3 differs from a^3 alpha + b^3 beta");
  }
  const CliffordElement v_inv = v2.scaled(norm.inverse());
  CliffordElement z = v * model.x() * v_inv;
  const CliffordElement z3 = pth_power(z);
  if (!z3.is_scalar()) throw std::logic_error("conjugate of x is not 3-central");

  const Exponents ex{1, 0}, ey{0, 1}, exy{2, 2};
  std::array<CycloNum, 3> coeffs{z.coefficient(ex) * norm, z.coefficient(ey) * norm,
                                 z.coefficient(exy) * norm};
  bool three = true;
  for (const auto& [e, c] : z.terms()) {
    if (e != ex && e != ey && e != exy) three = false;
  }
  return {std::move(z), z3.scalar_value(), std::move(coeffs), three};
}

CubicSolution gen_solution(const EisensteinInt& gamma, const EisensteinInt& beta,
                           const EisensteinInt& a, const EisensteinInt& c) {
  const EisensteinInt rho = EisensteinInt::rho();
  const EisensteinInt a2 = a * a;
  const EisensteinInt c2 = c * c;
  const EisensteinInt a3g = a2 * a * gamma;
  const EisensteinInt bc3 = beta * c2 * c;
  const EisensteinInt rho_bc3 = rho * bc3;
  CubicSolution s{gamma,
                  beta,
                  a,
                  c,
                  a3g - rho_bc3,
                  a3g - rho * rho_bc3,
                  gamma * one_minus_rho() * a2 * c,
                  one_minus_rho() * a * c2,
                  a.is_zero() || c.is_zero()};
  if (!verify_solution(s)) {
    throw std::logic_error("generated tuple fails gamma Y^3 = gamma X1^3 + beta X2^3 + gamma^2 beta^2 X3^3");
  }
  return s;
}

RawCubicSolution gen_solution_raw(const EisensteinInt& alpha, const EisensteinInt& beta,
                                  const EisensteinInt& a, const EisensteinInt& b) {
  const EisensteinInt a2 = a * a;
  const EisensteinInt b2 = b * b;
  const EisensteinInt a3al = a2 * a * alpha;
  const EisensteinInt b3be = b2 * b * beta;
  RawCubicSolution s{alpha,
                     beta,
                     a,
                     b,
                     a3al + b3be,
                     a3al + EisensteinInt::rho() * b3be,
                     a2 * b * alpha,
                     a * b2,
                     a.is_zero() || b.is_zero()};
  if (!verify_raw_solution(s)) {
    throw std::logic_error("generated tuple fails the pre-substitution cubic equation");
  }
  return s;
}

bool verify_solution(const CubicSolution& s) {
  const EisensteinInt gb = s.gamma * s.beta;
  const EisensteinInt lhs = s.gamma * s.Y.pow(3);
  const EisensteinInt rhs = s.gamma * s.X1.pow(3) + s.beta * s.X2.pow(3) + gb * gb * s.X3.pow(3);
  return lhs == rhs;
}

bool verify_raw_solution(const RawCubicSolution& s) {
  const EisensteinInt three_one_minus_rho = EisensteinInt(3) * one_minus_rho();
  // 1 - rho^{-1} = 1 - rho^2 = 2 + rho.
  const EisensteinInt three_one_minus_rho_inv = EisensteinInt(3) * EisensteinInt(2, 1);
  const EisensteinInt lhs = s.alpha * s.Y.pow(3);
  const EisensteinInt rhs = s.alpha * s.X1.pow(3) + three_one_minus_rho * s.beta * s.X2.pow(3) +
                            three_one_minus_rho_inv * s.alpha * s.alpha * s.beta * s.beta *
                                s.X3.pow(3);
  return lhs == rhs;
}

std::vector<EisensteinInt> eisenstein_ball(std::uint64_t bound) {
  // a^2 - ab + b^2 >= 3b^2/4, and symmetrically for a.
  const auto reach = static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(bound) / 3.0)) + 1;
  std::vector<EisensteinInt> out;
  for (std::int64_t a = -reach; a <= reach; ++a) {
    for (std::int64_t b = -reach; b <= reach; ++b) {
      if (static_cast<std::uint64_t>(a * a - a * b + b * b) <= bound) out.emplace_back(a, b);
    }
  }
  return out;
}

void enumerate_solutions(const EisensteinInt& gamma, const EisensteinInt& beta,
                         std::uint64_t bound,
                         const std::function<void(const CubicSolution&)>& emit,
                         unsigned threads) {
  const std::vector<EisensteinInt> ball = eisenstein_ball(bound);
  const std::size_t total = ball.size() * ball.size();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  auto solve = [&](std::size_t idx) {
    return gen_solution(gamma, beta, ball[idx / ball.size()], ball[idx % ball.size()]);
  };
  if (threads == 1) {
    for (std::size_t idx = 0; idx < total; ++idx) emit(solve(idx));
    return;
  }

  constexpr std::size_t kBatch = 4096;
  std::vector<std::optional<CubicSolution>> buffer(kBatch);
  for (std::size_t start = 0; start < total; start += kBatch) {
    const std::size_t len = std::min(kBatch, total - start);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < len; i += threads) buffer[i] = solve(start + i);
      });
    }
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < len; ++i) emit(*buffer[i]);
  }
}

}  // namespace pcentral
