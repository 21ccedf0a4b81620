#include <doctest.h>

#include <algorithm>

#include "pcentral/coherence.hpp"
#include "pcentral/errors.hpp"
#include "pcentral/monomial_search.hpp"
#include "pcentral/tournament.hpp"
#include "support.hpp"

using namespace pcentral;
using testing_support::all_cycles;
using testing_support::nth_tournament;

namespace {

Tournament from(std::size_t n, std::vector<Edge> e) { return Tournament::from_edges(n, e); }

}  // namespace

TEST_CASE("build_tournament examples") {
  const auto one = make_presentation(3, FpMatrix(3, {{0, 1}, {2, 0}}), {CycloNum::one(3), CycloNum::one(3)});
  const auto t = build_tournament(*one);
  CHECK(t.edges() == std::vector<Edge>{{0, 1}});

  const std::vector<CycloNum> ones(3, CycloNum::one(3));
  const auto cyc = build_tournament(*make_presentation(3, FpMatrix(3, {{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}), ones));
  CHECK(find_3cycles(cyc) == std::vector<Triangle>{{0, 1, 2}});

  const auto trans = build_tournament(*make_presentation(3, FpMatrix(3, {{0, 1, 1}, {2, 0, 1}, {2, 2, 0}}), ones));
  CHECK(find_3cycles(trans).empty());
  CHECK(is_acyclic(trans));
}

TEST_CASE("build_tournament rejects commuting pairs and other primes") {
  const std::vector<CycloNum> ones(3, CycloNum::one(3));
  const auto pres = make_presentation(3, FpMatrix(3, {{0, 1, 0}, {2, 0, 1}, {0, 2, 0}}), ones);
  CHECK_THROWS_AS(build_tournament(*pres), ValidationError);
  const auto p5 = make_presentation(5, FpMatrix(5, {{0, 1}, {4, 0}}), {CycloNum::one(5), CycloNum::one(5)});
  CHECK_THROWS_AS(build_tournament(*p5), UnsupportedError);
}

TEST_CASE("build_tournament from elements uses engine commutation") {
  const auto pres = split_symbol_presentation(1);
  const std::vector<CliffordElement> els{CliffordElement::monomial(pres, {1, 0}),
                                         CliffordElement::monomial(pres, {0, 1}),
                                         CliffordElement::monomial(pres, {2, 2})};
  const auto t = build_tournament(els);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(t.edge(i, j) == (commutation_exponent(els[i], els[j]) == 1u));
}

TEST_CASE("Tournament::from_edges validation") {
  CHECK_THROWS_AS(from(3, {{0, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(from(2, {{0, 1}, {1, 0}}), ValidationError);
  CHECK_THROWS_AS(from(2, {{0, 0}}), ValidationError);
  CHECK_THROWS_AS(from(2, {{0, 2}}), ValidationError);
  CHECK_NOTHROW(from(1, {}));
}

TEST_CASE("find_3cycles examples") {
  CHECK(find_3cycles(from(3, {{0, 1}, {1, 2}, {2, 0}})) == std::vector<Triangle>{{0, 1, 2}});
  const auto trans4 = Tournament::from_predicate(4, [](std::size_t, std::size_t) { return true; });
  CHECK(find_3cycles(trans4).empty());
  const auto t = from(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
  CHECK(find_3cycles(t) == std::vector<Triangle>{{0, 1, 2}});
}

TEST_CASE("validate_propositions examples") {
  const auto mixed = from(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {1, 3}, {3, 2}});
  const auto r = validate_propositions(mixed);
  CHECK_FALSE(r.prop1_ok);
  REQUIRE(r.prop1_witness.has_value());
  CHECK(r.prop1_witness->first == Triangle{0, 1, 2});
  CHECK(r.prop1_witness->second == 3);
  CHECK_FALSE(r.admissible());

  // Triangles (0,1,2) and (0,3,4) share vertex 0.
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
  const auto r2 = validate_propositions(from(5, e));
  CHECK_FALSE(r2.prop2_ok);
  REQUIRE(r2.prop2_witness.has_value());
  const auto [s1, s2] = *r2.prop2_witness;
  CHECK(s1 != s2);
  CHECK(std::any_of(s1.begin(), s1.end(),
                    [&](std::size_t v) { return std::find(s2.begin(), s2.end(), v) != s2.end(); }));
  CHECK(std::find(r2.triangles.begin(), r2.triangles.end(), s1) != r2.triangles.end());
  CHECK(std::find(r2.triangles.begin(), r2.triangles.end(), s2) != r2.triangles.end());

  for (std::size_t n = 1; n <= 8; ++n) {
    const auto trans = Tournament::from_predicate(n, [](std::size_t, std::size_t) { return true; });
    CHECK(validate_propositions(trans).admissible());
  }
}

TEST_CASE("propositions agree with brute force on all tournaments up to 5 vertices") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned code = 0; code < (1u << pairs); ++code) {
      const auto t = nth_tournament(n, code);
      const auto cycles = all_cycles(t);
      std::vector<Triangle> tri;
      bool long_cycle = false;
      for (const auto& c : cycles) {
        if (c.size() == 3) {
          Triangle s{c[0], c[1], c[2]};
          std::sort(s.begin(), s.end());
          tri.push_back(s);
        } else {
          long_cycle = true;
        }
      }
      std::sort(tri.begin(), tri.end());
      bool uniform = true;
      for (const auto& s : tri)
        for (std::size_t l = 0; l < n; ++l) {
          if (l == s[0] || l == s[1] || l == s[2]) continue;
          const int out = t.edge(l, s[0]) + t.edge(l, s[1]) + t.edge(l, s[2]);
          if (out != 0 && out != 3) uniform = false;
        }
      bool disjoint = true;
      for (std::size_t a = 0; a < tri.size(); ++a)
        for (std::size_t b = a + 1; b < tri.size(); ++b)
          for (auto v : tri[a])
            if (std::find(tri[b].begin(), tri[b].end(), v) != tri[b].end()) disjoint = false;

      const auto r = validate_propositions(t);
      CHECK(find_3cycles(t) == tri);
      CHECK(r.triangles == tri);
      CHECK(r.prop1_ok == uniform);
      CHECK(r.prop2_ok == disjoint);
      CHECK(r.prop3_ok == !long_cycle);
      CHECK(is_acyclic(t) == cycles.empty());
      // Any cycle forces a triangle.
      CHECK(cycles.empty() == tri.empty());
      if (!r.prop3_ok) {
        REQUIRE(r.prop3_witness.has_value());
        const auto& w = *r.prop3_witness;
        CHECK(w.size() > 3);
        for (std::size_t k = 0; k < w.size(); ++k) CHECK(t.edge(w[k], w[(k + 1) % w.size()]));
      }
      if (r.admissible()) {
        const auto d = diminish(t);
        CHECK(is_acyclic(d));
        CHECK(d.size() == n - tri.size());
      } else {
        CHECK_THROWS_AS(diminish(t), ValidationError);
      }
    }
  }
}

TEST_CASE("diminish examples") {
  const auto d = diminish(from(3, {{0, 1}, {1, 2}, {2, 0}}));
  CHECK(d.size() == 2);
  CHECK(d.labels() == std::vector<std::size_t>{1, 2});
  CHECK(is_acyclic(d));

  const auto trans = Tournament::from_predicate(5, [](std::size_t, std::size_t) { return true; });
  CHECK(diminish(trans) == trans);

  const auto t = from(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
  const auto d4 = diminish(t);
  CHECK(d4.size() == 3);
  CHECK(is_acyclic(d4));

  const auto last = diminish(t, [](const Triangle& s) { return s[2]; });
  CHECK(last.labels() == std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("coherent monomial witnesses give admissible tournaments") {
  const auto check = [](std::size_t m) {
    const auto res = max_coherent_monomial_set(m);
    const auto pres = split_symbol_presentation(m);
    std::vector<CliffordElement> els;
    for (const auto& e : res.witness) els.push_back(CliffordElement::monomial(pres, e));
    const auto t = build_tournament(els);
    const auto r = validate_propositions(t);
    CHECK(r.admissible());
    CHECK(is_acyclic(diminish(t)));
    // Triangles are exactly the Case2 triples.
    std::size_t case2 = 0;
    for (std::size_t i = 0; i < els.size(); ++i)
      for (std::size_t j = i + 1; j < els.size(); ++j)
        for (std::size_t k = j + 1; k < els.size(); ++k)
          if (classify_triple(els[i], els[j], els[k]) == TripleCase::Case2) ++case2;
    CHECK(case2 == r.triangles.size());
  };
  check(1);
  check(2);
}
