#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "pcentral/fp.hpp"

namespace pcentral {

using FpVector = std::vector<std::uint32_t>;

// Dense row-major matrix over Z/pZ. Entries are always reduced.
class FpMatrix {
 public:
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  // Reduces every entry mod p; all rows must have equal length.
  FpMatrix(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

  static FpMatrix identity(std::uint32_t p, std::size_t n);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t value);

  std::span<const std::uint32_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  FpMatrix transpose() const;
  bool is_zero() const;

  bool operator==(const FpMatrix&) const = default;

 private:
  std::uint32_t p_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

// Exact product mod p. Throws UsageError on a dimension or modulus mismatch.
FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b);

struct RankKernel {
  std::size_t rank = 0;
  // Basis of the left kernel {v : v * M = 0}, one vector per free column of
  // the reduced echelon form of M^t, with that free coordinate set to 1.
  std::vector<FpVector> kernel_basis;
};

RankKernel rank_and_kernel(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);
FpScalar determinant(const FpMatrix& m);
bool is_invertible(const FpMatrix& m);

// v * M for a row vector v.
FpVector vec_mat(std::span<const std::uint32_t> v, const FpMatrix& m);

// Throws ValidationError naming the first offending entry unless M is square,
// skew-symmetric and has a zero diagonal.
void require_alternating(const FpMatrix& m);

// (H + ... + H) + 0 with m copies of H = [[0, -1], [1, 0]], n x n.
FpMatrix canonical_alternating(std::uint32_t p, std::size_t n, std::size_t blocks);

struct AlternatingReduction {
  FpMatrix transform;  // D, invertible
  std::size_t blocks;  // m
  FpMatrix canonical;  // D * M * D^t
};

// Symplectic Gram-Schmidt with lowest-index pivoting; deterministic.
// The result is certified by multiplication before it is returned.
AlternatingReduction reduce_alternating(const FpMatrix& m);

std::ostream& operator<<(std::ostream& os, const FpMatrix& m);

}  // namespace pcentral
