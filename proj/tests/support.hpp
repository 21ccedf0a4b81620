#pragma once

// Random generators and independent oracles shared by the test binaries.
// Nothing here calls into the code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "pcentral/clifford.hpp"
#include "pcentral/cyclo.hpp"
#include "pcentral/eisenstein.hpp"
#include "pcentral/fp_matrix.hpp"
#include "pcentral/presentation.hpp"
#include "pcentral/tournament.hpp"

namespace testing_support {

using namespace pcentral;
using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline mpq_class random_rational(Rng& rng, std::int64_t mag = 9) {
  mpq_class q(uniform(rng, -mag, mag), uniform(rng, 1, mag));
  q.canonicalize();
  return q;
}

inline CycloNum random_cyclo(Rng& rng, std::uint32_t p, std::int64_t mag = 9) {
  std::vector<mpq_class> c;
  for (std::uint32_t i = 0; i + 1 < p; ++i) c.push_back(random_rational(rng, mag));
  return CycloNum::from_coeffs(p, std::move(c));
}

inline CycloNum random_nonzero_cyclo(Rng& rng, std::uint32_t p, std::int64_t mag = 9) {
  while (true) {
    CycloNum x = random_cyclo(rng, p, mag);
    if (!x.is_zero()) return x;
  }
}

inline EisensteinInt random_eisenstein(Rng& rng, std::int64_t mag) {
  return {uniform(rng, -mag, mag), uniform(rng, -mag, mag)};
}

inline mpz_class random_bigint(Rng& rng, unsigned bits) {
  mpz_class x = 0;
  for (unsigned i = 0; i < bits; i += 32) x = (x << 32) + static_cast<unsigned long>(rng() & 0xffffffffu);
  return (rng() & 1) ? mpz_class(-x) : x;
}

inline FpMatrix random_alternating(Rng& rng, std::uint32_t p, std::size_t n, double zero_bias = 0.0) {
  FpMatrix m(p, n, n);
  std::bernoulli_distribution zero(zero_bias);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::int64_t v = zero(rng) ? 0 : uniform(rng, 0, p - 1);
      m.set(i, j, v);
      m.set(j, i, -v);
    }
  }
  return m;
}

inline PresentationPtr random_presentation(Rng& rng, std::uint32_t p, std::size_t n) {
  std::vector<CycloNum> alpha;
  for (std::size_t k = 0; k < n; ++k) alpha.push_back(random_nonzero_cyclo(rng, p, 5));
  return make_presentation(p, random_alternating(rng, p, n, 0.2), std::move(alpha));
}

inline CliffordElement random_element(Rng& rng, const PresentationPtr& pres, std::size_t max_terms) {
  CliffordElement u(pres);
  const auto terms = static_cast<std::size_t>(uniform(rng, 1, static_cast<std::int64_t>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(pres->n());
    for (auto& x : e) x = static_cast<std::uint32_t>(uniform(rng, 0, pres->p() - 1));
    u += CliffordElement::monomial(pres, e, random_cyclo(rng, pres->p(), 4));
  }
  return u;
}

// --- Oracle: product of words by adjacent transpositions -----------------

// Normal-orders the word x_{w_0} x_{w_1} ... one adjacent swap at a time using
// x_a x_b = rho^{C(a,b)} x_b x_a, then collapses runs of p equal letters to alpha.
inline CliffordElement normalize_word(const PresentationPtr& pres, std::vector<std::size_t> word,
                                      CycloNum coeff) {
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        coeff = coeff * CycloNum::root_power(pres->p(), pres->commutation()(word[i], word[i + 1]));
        std::swap(word[i], word[i + 1]);
        swapped = true;
      }
    }
  }
  Exponents e(pres->n(), 0);
  for (auto letter : word) {
    if (++e[letter] == pres->p()) {
      e[letter] = 0;
      coeff = coeff * pres->alpha()[letter];
    }
  }
  return CliffordElement::monomial(pres, e, coeff);
}

inline std::vector<std::size_t> letters_of(const Exponents& e) {
  std::vector<std::size_t> w;
  for (std::size_t k = 0; k < e.size(); ++k) w.insert(w.end(), e[k], k);
  return w;
}

// Product of a list of elements, expanded into words and normalized one by one.
inline CliffordElement oracle_product(const std::vector<CliffordElement>& factors) {
  const PresentationPtr& pres = factors.front().presentation();
  CliffordElement total(pres);
  std::vector<std::pair<std::vector<std::size_t>, CycloNum>> partial{
      {{}, CycloNum::one(pres->p())}};
  for (const auto& f : factors) {
    std::vector<std::pair<std::vector<std::size_t>, CycloNum>> next;
    for (const auto& [w, c] : partial) {
      for (const auto& [e, d] : f.terms()) {
        auto w2 = w;
        const auto l = letters_of(e);
        w2.insert(w2.end(), l.begin(), l.end());
        next.emplace_back(std::move(w2), c * d);
      }
    }
    partial = std::move(next);
  }
  for (const auto& [w, c] : partial) total += normalize_word(pres, w, c);
  return total;
}

// --- Oracle: naive matrix arithmetic mod p ---------------------------------

using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix naive_mul(const IntMatrix& a, const IntMatrix& b, std::int64_t p) {
  IntMatrix c(a.size(), std::vector<std::int64_t>(b.front().size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.front().size(); ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < b.size(); ++k) s += a[i][k] * b[k][j];
      c[i][j] = ((s % p) + p) % p;
    }
  }
  return c;
}

inline IntMatrix to_ints(const FpMatrix& m) {
  IntMatrix out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

inline IntMatrix naive_transpose(const IntMatrix& a) {
  IntMatrix t(a.front().size(), std::vector<std::int64_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

// --- Oracle: Z[rho] arithmetic on plain integer pairs -----------------------

struct SmallEis {
  std::int64_t a, b;
  SmallEis operator*(SmallEis o) const { return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b}; }
  SmallEis operator+(SmallEis o) const { return {a + o.a, b + o.b}; }
  bool operator==(const SmallEis&) const = default;
};

// --- Oracle: brute-force tournament enumeration ------------------------------

// Tournament number `code` on n vertices: bit k orients the k-th pair i < j as i -> j.
inline Tournament nth_tournament(std::size_t n, unsigned code) {
  std::vector<Edge> e;
  unsigned bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit) e.push_back((code >> bit) & 1u ? Edge{i, j} : Edge{j, i});
  return Tournament::from_edges(n, e);
}

// Every simple directed cycle, each reported once starting at its smallest vertex.
inline std::vector<std::vector<std::size_t>> all_cycles(const Tournament& t) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = t.size();
  std::vector<std::size_t> path;
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> go = [&](std::size_t v) {
    for (std::size_t w = path.front() + 1; w < n; ++w) {
      if (used[w] || !t.edge(v, w)) continue;
      used[w] = true;
      path.push_back(w);
      if (t.edge(w, path.front())) out.push_back(path);
      go(w);
      path.pop_back();
      used[w] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    go(s);
  }
  return out;
}

}  // namespace testing_support
