#pragma once

#include <cstddef>
#include <vector>

#include "pcentral/clifford.hpp"
#include "pcentral/presentation.hpp"

namespace pcentral {

// A nonzero exponent vector over Z/3Z up to scalars: v and 2v are one class,
// represented by the lexicographically smaller of the two.
struct MonomialClass {
  Exponents exponents;

  static MonomialClass canonical(Exponents v);
  bool operator==(const MonomialClass&) const = default;
  auto operator<=>(const MonomialClass&) const = default;
};

// p = 3, 2m generators, C = H + ... + H, every alpha = 1: the split tensor
// product of m degree-3 symbol algebras.
PresentationPtr split_symbol_presentation(std::size_t m);

enum class MonomialSearchSpace {
  CanonicalClasses,    // one representative per class
  AllRepresentatives,  // every nonzero exponent vector
};

struct CoherentSetResult {
  std::size_t size = 0;
  // Lexicographically first maximum set (in candidate order).
  std::vector<Exponents> witness;
};

// Exhaustive branch-and-bound for the largest set of pairwise non-commuting
// monomials whose every triple classifies as Case1 or Case2. m must be 1 or 2.
// Triple classification runs on `threads` workers (0 = hardware concurrency);
// the result does not depend on the thread count.
CoherentSetResult max_coherent_monomial_set(
    std::size_t m, MonomialSearchSpace space = MonomialSearchSpace::CanonicalClasses,
    unsigned threads = 0);

}  // namespace pcentral
