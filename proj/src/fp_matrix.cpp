#include "pcentral/fp_matrix.hpp"

#include <string>
#include <utility>

#include "pcentral/errors.hpp"
#include "pcentral/simd/fp_kernels.hpp"

namespace pcentral {

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  require_field_prime(p);
}

FpMatrix::FpMatrix(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows)
    : FpMatrix(p, rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t i = 0; i < rows_; ++i) {
    if (rows[i].size() != cols_) {
      throw UsageError("ragged matrix: row " + std::to_string(i) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(cols_));
    }
    for (std::size_t j = 0; j < cols_; ++j) data_[i * cols_ + j] = reduce_mod(rows[i][j], p_);
  }
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, std::int64_t value) {
  data_[i * cols_ + j] = reduce_mod(value, p_);
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = data_[i * cols_ + j];
  }
  return t;
}

bool FpMatrix::is_zero() const {
  for (auto v : data_) {
    if (v != 0) return false;
  }
  return true;
}

FpMatrix mat_mul(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p()) throw UsageError("mat_mul: moduli differ");
  if (a.cols() != b.rows()) {
    throw UsageError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  const auto& k = simd::active_kernels();
  FpMatrix c(a.p(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const std::uint32_t coef = a(i, l);
      if (coef != 0) k.axpy(out.data(), b.row(l).data(), coef, out.size(), a.p());
    }
  }
  return c;
}

FpVector vec_mat(std::span<const std::uint32_t> v, const FpMatrix& m) {
  if (v.size() != m.rows()) throw UsageError("vec_mat: length mismatch");
  const auto& k = simd::active_kernels();
  FpVector out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) k.axpy(out.data(), m.row(i).data(), v[i], out.size(), m.p());
  }
  return out;
}

namespace {

struct Echelon {
  FpMatrix reduced;
  std::vector<std::size_t> pivot_cols;
  FpScalar det_factor;  // product of pivots and row-swap signs, square inputs only
};

// Reduced row echelon form, lowest-index pivoting.
Echelon rref(FpMatrix a) {
  const std::uint32_t p = a.p();
  const auto& k = simd::active_kernels();
  std::vector<std::size_t> pivots;
  FpScalar det(1, p);
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      auto x = a.row(piv);
      auto y = a.row(r);
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(x[j], y[j]);
      det = -det;
    }
    const std::uint32_t pv = a(r, col);
    det = det * FpScalar(pv, p);
    k.scale(a.row(r).data(), inv_mod(pv, p), a.cols(), p);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, col) == 0) continue;
      k.axpy(a.row(i).data(), a.row(r).data(), p - a(i, col), a.cols(), p);
    }
    pivots.push_back(col);
    ++r;
  }
  return {std::move(a), std::move(pivots), det};
}

}  // namespace

RankKernel rank_and_kernel(const FpMatrix& m) {
  if (!m.is_square()) throw UsageError("rank_and_kernel: matrix must be square");
  const std::uint32_t p = m.p();
  const std::size_t n = m.rows();
  // v * M = 0  <=>  M^t v^t = 0.
  Echelon e = rref(m.transpose());
  RankKernel out;
  out.rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      v[e.pivot_cols[r]] = (p - e.reduced(r, free)) % p;
    }
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const FpMatrix& m) { return rref(m).pivot_cols.size(); }

FpScalar determinant(const FpMatrix& m) {
  if (!m.is_square()) throw UsageError("determinant: matrix must be square");
  Echelon e = rref(m);
  if (e.pivot_cols.size() < m.rows()) return FpScalar(0, m.p());
  return e.det_factor;
}

bool is_invertible(const FpMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

void require_alternating(const FpMatrix& m) {
  if (!m.is_square()) {
    throw ValidationError("commutation matrix must be square, got " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()));
  }
  const std::uint32_t p = m.p();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) {
      throw ValidationError("nonzero diagonal entry at (" + std::to_string(i) + "," +
                            std::to_string(i) + ")");
    }
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if ((m(i, j) + m(j, i)) % p != 0) {
        throw ValidationError("not skew-symmetric at (" + std::to_string(i) + "," +
                              std::to_string(j) + "): " + std::to_string(m(i, j)) + " vs " +
                              std::to_string(m(j, i)));
      }
    }
  }
}

FpMatrix canonical_alternating(std::uint32_t p, std::size_t n, std::size_t blocks) {
  if (2 * blocks > n) throw UsageError("too many hyperbolic blocks for dimension");
  FpMatrix c(p, n, n);
  for (std::size_t k = 0; k < blocks; ++k) {
    c.set(2 * k, 2 * k + 1, -1);
    c.set(2 * k + 1, 2 * k, 1);
  }
  return c;
}

std::ostream& operator<<(std::ostream& os, const FpMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << "]";
  }
  return os << "] mod " << m.p();
}

}  // namespace pcentral
