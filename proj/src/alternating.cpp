#include <list>
#include <string>

#include "pcentral/errors.hpp"
#include "pcentral/fp_matrix.hpp"
#include "pcentral/simd/fp_kernels.hpp"

namespace pcentral {

namespace {

class AlternatingForm {
 public:
  explicit AlternatingForm(const FpMatrix& m) : m_(m), k_(simd::active_kernels()) {}

  // u * M * v^t
  std::uint32_t operator()(const FpVector& u, const FpVector& v) const {
    FpVector um = vec_mat(u, m_);
    return k_.dot(um.data(), v.data(), v.size(), m_.p());
  }

 private:
  const FpMatrix& m_;
  const simd::FpKernels& k_;
};

}  // namespace

AlternatingReduction reduce_alternating(const FpMatrix& m) {
  require_alternating(m);
  const std::uint32_t p = m.p();
  const std::size_t n = m.rows();
  const auto& k = simd::active_kernels();
  const AlternatingForm form(m);

  std::list<FpVector> pending;
  for (std::size_t i = 0; i < n; ++i) {
    FpVector e(n, 0);
    e[i] = 1;
    pending.push_back(std::move(e));
  }

  std::vector<FpVector> basis;
  std::size_t blocks = 0;
  while (true) {
    // First pending vector pairing nontrivially with a later one, and its
    // earliest partner.
    auto first = pending.end();
    auto partner = pending.end();
    std::uint32_t pairing = 0;
    for (auto it = pending.begin(); it != pending.end() && first == pending.end(); ++it) {
      for (auto jt = pending.begin(); jt != pending.end(); ++jt) {
        if (jt == it) continue;
        const std::uint32_t b = form(*it, *jt);
        if (b != 0) {
          first = it;
          partner = jt;
          pairing = b;
          break;
        }
      }
    }
    if (first == pending.end()) break;

    FpVector e = *first;
    FpVector f = *partner;
    // Normalize so that B(e, f) = -1, matching H.
    k.scale(f.data(), (p - inv_mod(pairing, p)) % p, n, p);
    pending.erase(first);
    pending.erase(partner);

    // w <- w + B(w, f) e - B(w, e) f leaves w orthogonal to e and f.
    for (auto& w : pending) {
      const std::uint32_t wf = form(w, f);
      const std::uint32_t we = form(w, e);
      if (wf != 0) k.axpy(w.data(), e.data(), wf, n, p);
      if (we != 0) k.axpy(w.data(), f.data(), (p - we) % p, n, p);
    }
    basis.push_back(std::move(e));
    basis.push_back(std::move(f));
    ++blocks;
  }
  for (auto& w : pending) basis.push_back(std::move(w));

  FpMatrix d(p, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d.set(i, j, basis[i][j]);
  }
  FpMatrix canonical = canonical_alternating(p, n, blocks);
  if (mat_mul(mat_mul(d, m), d.transpose()) != canonical || !is_invertible(d)) {
    throw std::logic_error("reduce_alternating: congruence certificate failed");
  }
  return {std::move(d), blocks, std::move(canonical)};
}

}  // namespace pcentral
