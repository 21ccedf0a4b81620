#include <doctest.h>

#include "pcentral/coherence.hpp"
#include "pcentral/errors.hpp"
#include "pcentral/monomial_search.hpp"

using namespace pcentral;

TEST_CASE("MonomialClass canonical form") {
  CHECK(MonomialClass::canonical({2, 1}).exponents == Exponents{1, 2});
  CHECK(MonomialClass::canonical({1, 2}).exponents == Exponents{1, 2});
  CHECK(MonomialClass::canonical({0, 2}).exponents == Exponents{0, 1});
  CHECK(MonomialClass::canonical({2, 2}) == MonomialClass::canonical({1, 1}));
}

TEST_CASE("split symbol presentation") {
  const auto pres = split_symbol_presentation(2);
  CHECK(pres->p() == 3);
  CHECK(pres->n() == 4);
  CHECK(pres->commutation() == canonical_alternating(3, 4, 2));
  for (const auto& a : pres->alpha()) CHECK(a.is_one());
}

TEST_CASE("m = 1: four classes, one per line") {
  const auto res = max_coherent_monomial_set(1);
  CHECK(res.size == 4);
  REQUIRE(res.witness.size() == 4);
  const auto pres = split_symbol_presentation(1);
  std::vector<CliffordElement> els;
  for (const auto& e : res.witness) els.push_back(CliffordElement::monomial(pres, e));
  CHECK(spans_p_central_space(els));

  // The set {x, y, x^2 y^2, x y^2}: every triple is Case1 or Case2.
  const std::vector<Exponents> named{{1, 0}, {0, 1}, {2, 2}, {1, 2}};
  std::vector<CliffordElement> n;
  for (const auto& e : named) n.push_back(CliffordElement::monomial(pres, e));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k)
        CHECK(classify_triple(n[i], n[j], n[k]) != TripleCase::NotCoherent);
}

TEST_CASE("m = 1: no five monomials are pairwise non-commuting") {
  // Exhaustive over all 8 nonzero exponent vectors: two on one line commute.
  const auto pres = split_symbol_presentation(1);
  std::vector<CliffordElement> all;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b)
      if (a || b) all.push_back(CliffordElement::monomial(pres, {a, b}));
  std::size_t best = 0;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < all.size(); ++k)
      if (mask >> k & 1u) idx.push_back(k);
    bool ok = true;
    for (std::size_t i = 0; ok && i < idx.size(); ++i)
      for (std::size_t j = i + 1; ok && j < idx.size(); ++j)
        if (commutation_exponent(all[idx[i]], all[idx[j]]) == 0u) ok = false;
    if (ok) best = std::max(best, idx.size());
  }
  CHECK(best == 4);
  CHECK(max_coherent_monomial_set(1, MonomialSearchSpace::AllRepresentatives).size == 4);
}

TEST_CASE("m = 2: seven") {
  const auto res = max_coherent_monomial_set(2);
  CHECK(res.size == 7);
  CHECK(res.witness.size() == 7);
  // Independent of the thread count.
  CHECK(max_coherent_monomial_set(2, MonomialSearchSpace::CanonicalClasses, 1).witness == res.witness);
  CHECK(max_coherent_monomial_set(2, MonomialSearchSpace::AllRepresentatives).size == 7);
}

TEST_CASE("m out of range") {
  CHECK_THROWS_AS(max_coherent_monomial_set(0), UnsupportedError);
  CHECK_THROWS_AS(max_coherent_monomial_set(3), UnsupportedError);
}
