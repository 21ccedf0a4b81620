#include <doctest.h>

#include "pcentral/errors.hpp"
#include "pcentral/fp_matrix.hpp"
#include "support.hpp"

using namespace pcentral;
using testing_support::IntMatrix;
using testing_support::naive_mul;
using testing_support::naive_transpose;
using testing_support::Rng;
using testing_support::to_ints;

namespace {

const FpMatrix kSkew3(3, {{0, 1, 1}, {2, 0, 1}, {2, 2, 0}});

}  // namespace

TEST_CASE("mat_mul examples") {
  const FpMatrix a(5, {{1, 2, 3}, {4, 0, 1}, {2, 2, 2}});
  CHECK(mat_mul(FpMatrix::identity(5, 3), a) == a);
  const FpMatrix h = canonical_alternating(3, 2, 1);
  CHECK(mat_mul(h, h) == FpMatrix(3, {{2, 0}, {0, 2}}));
  CHECK(mat_mul(FpMatrix(3, {{2}}), FpMatrix(3, {{2}})) == FpMatrix(3, {{1}}));
}

TEST_CASE("mat_mul rejects mismatched operands") {
  CHECK_THROWS_AS(mat_mul(FpMatrix::identity(3, 2), FpMatrix::identity(3, 3)), UsageError);
  CHECK_THROWS_AS(mat_mul(FpMatrix::identity(3, 2), FpMatrix::identity(5, 2)), UsageError);
}

TEST_CASE("mat_mul matches the naive product") {
  Rng rng(3);
  for (std::uint32_t p : {3u, 5u, 7u, 4099u}) {
    for (int rep = 0; rep < 50; ++rep) {
      const auto r = static_cast<std::size_t>(testing_support::uniform(rng, 1, 12));
      const auto k = static_cast<std::size_t>(testing_support::uniform(rng, 1, 12));
      const auto c = static_cast<std::size_t>(testing_support::uniform(rng, 1, 20));
      FpMatrix a(p, r, k), b(p, k, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) a.set(i, j, testing_support::uniform(rng, 0, p - 1));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < c; ++j) b.set(i, j, testing_support::uniform(rng, 0, p - 1));
      CHECK(to_ints(mat_mul(a, b)) == naive_mul(to_ints(a), to_ints(b), p));
    }
  }
}

TEST_CASE("rank_and_kernel examples") {
  const auto zero = rank_and_kernel(FpMatrix(3, 3, 3));
  CHECK(zero.rank == 0);
  CHECK(zero.kernel_basis == std::vector<FpVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

  const auto h = rank_and_kernel(canonical_alternating(3, 2, 1));
  CHECK(h.rank == 2);
  CHECK(h.kernel_basis.empty());

  const auto k = rank_and_kernel(kSkew3);
  CHECK(k.rank == 2);
  REQUIRE(k.kernel_basis.size() == 1);
  CHECK(k.kernel_basis[0] == FpVector{1, 2, 1});
  // Independent check: (1,2,1) * M = 0 by naive multiplication.
  CHECK(naive_mul({{1, 2, 1}}, to_ints(kSkew3), 3) == IntMatrix{{0, 0, 0}});
}

TEST_CASE("rank plus nullity is n and kernel vectors annihilate") {
  Rng rng(8);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (int rep = 0; rep < 100; ++rep) {
      const auto n = static_cast<std::size_t>(testing_support::uniform(rng, 1, 9));
      FpMatrix m(p, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (rng() % 3 == 0) m.set(i, j, testing_support::uniform(rng, 0, p - 1));
      const auto rk = rank_and_kernel(m);
      CHECK(rk.rank + rk.kernel_basis.size() == n);
      for (const auto& v : rk.kernel_basis) {
        IntMatrix row{std::vector<std::int64_t>(v.begin(), v.end())};
        CHECK(naive_mul(row, to_ints(m), p) == IntMatrix{std::vector<std::int64_t>(n, 0)});
      }
    }
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(FpMatrix(7, {{1, 2}, {3, 4}})).value() == 5);  // -2 mod 7
  CHECK(determinant(FpMatrix(7, {{0, 1}, {1, 0}})).value() == 6);
  CHECK(determinant(FpMatrix(3, {{1, 2}, {2, 1}})).value() == 0);
  CHECK_FALSE(is_invertible(FpMatrix(3, {{1, 2}, {2, 1}})));
}

TEST_CASE("reduce_alternating examples") {
  const auto h = reduce_alternating(canonical_alternating(3, 2, 1));
  CHECK(h.transform == FpMatrix::identity(3, 2));
  CHECK(h.blocks == 1);

  const auto z = reduce_alternating(FpMatrix(5, 3, 3));
  CHECK(z.transform == FpMatrix::identity(5, 3));
  CHECK(z.blocks == 0);

  const auto r = reduce_alternating(kSkew3);
  CHECK(r.blocks == 1);
  const IntMatrix d = to_ints(r.transform);
  CHECK(naive_mul(naive_mul(d, to_ints(kSkew3), 3), naive_transpose(d), 3) ==
        IntMatrix{{0, 2, 0}, {1, 0, 0}, {0, 0, 0}});
  // Third row proportional to (1,2,1).
  const bool proportional = (d[2] == std::vector<std::int64_t>{1, 2, 1}) ||
                            (d[2] == std::vector<std::int64_t>{2, 1, 2});
  CHECK(proportional);
}

TEST_CASE("reduce_alternating validates its input") {
  CHECK_THROWS_WITH_AS(reduce_alternating(FpMatrix(3, {{0, 1}, {1, 0}})),
                       doctest::Contains("(0,1)"), ValidationError);
  CHECK_THROWS_WITH_AS(reduce_alternating(FpMatrix(5, {{0, 1}, {4, 2}})),
                       doctest::Contains("(1,1)"), ValidationError);
}

TEST_CASE("reduce_alternating on random skew matrices") {
  Rng rng(77);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::size_t n = 1; n <= 10; ++n) {
      for (int rep = 0; rep < 500; ++rep) {
        const FpMatrix m = testing_support::random_alternating(rng, p, n, rep % 3 == 0 ? 0.6 : 0.1);
        const auto red = reduce_alternating(m);
        const IntMatrix d = to_ints(red.transform);
        const IntMatrix congruent = naive_mul(naive_mul(d, to_ints(m), p), naive_transpose(d), p);
        CHECK(congruent == to_ints(canonical_alternating(p, n, red.blocks)));
        CHECK(is_invertible(red.transform));
        CHECK(2 * red.blocks == rank(m));
        CHECK(2 * red.blocks <= n);
        CHECK(rank(red.canonical) == rank(m));
      }
    }
  }
}

TEST_CASE("reduce_alternating is the identity on canonical inputs") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (std::size_t m = 0; 2 * m <= n; ++m) {
        const auto red = reduce_alternating(canonical_alternating(p, n, m));
        CHECK(red.transform == FpMatrix::identity(p, n));
        CHECK(red.blocks == m);
      }
    }
  }
}

TEST_CASE("reduce_alternating is deterministic") {
  Rng rng(1);
  const FpMatrix m = testing_support::random_alternating(rng, 7, 9);
  CHECK(reduce_alternating(m).transform == reduce_alternating(m).transform);
}
