#include "pcentral/monomial_search.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "pcentral/coherence.hpp"
#include "pcentral/errors.hpp"

namespace pcentral {

MonomialClass MonomialClass::canonical(Exponents v) {
  Exponents doubled = v;
  for (auto& x : v) x %= 3;
  for (auto& x : doubled) x = (2 * x) % 3;
  return {std::min(v, doubled)};
}

PresentationPtr split_symbol_presentation(std::size_t m) {
  const std::size_t n = 2 * m;
  return make_presentation(3, canonical_alternating(3, n, m),
                           std::vector<CycloNum>(n, CycloNum::one(3)));
}

namespace {

std::vector<Exponents> candidate_vectors(std::size_t n, MonomialSearchSpace space) {
  std::vector<Exponents> out;
  Exponents v(n, 0);
  while (true) {
    std::size_t k = n;
    while (k > 0 && v[k - 1] == 2) v[--k] = 0;
    if (k == 0) break;
    ++v[k - 1];
    if (space == MonomialSearchSpace::AllRepresentatives || MonomialClass::canonical(v).exponents == v) {
      out.push_back(v);
    }
  }
  return out;
}

class CliqueSearch {
 public:
  CliqueSearch(std::size_t count, std::vector<bool> compatible, std::vector<bool> triple_ok)
      : n_(count), compatible_(std::move(compatible)), triple_ok_(std::move(triple_ok)) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> all(n_);
    for (std::size_t i = 0; i < n_; ++i) all[i] = i;
    std::vector<std::size_t> current;
    extend(current, all);
    return best_;
  }

 private:
  bool triple(std::size_t a, std::size_t b, std::size_t c) const {
    return triple_ok_[(a * n_ + b) * n_ + c];
  }

  void extend(std::vector<std::size_t>& current, const std::vector<std::size_t>& candidates) {
    if (current.size() > best_.size()) best_ = current;
    // Strict bound: ties never replace the first maximum found.
    if (current.size() + candidates.size() <= best_.size()) return;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      if (current.size() + (candidates.size() - idx) <= best_.size()) return;
      const std::size_t c = candidates[idx];
      std::vector<std::size_t> next;
      for (std::size_t j = idx + 1; j < candidates.size(); ++j) {
        const std::size_t d = candidates[j];
        if (!compatible_[c * n_ + d]) continue;
        bool ok = true;
        for (auto a : current) {
          if (!triple(a, c, d)) {
            ok = false;
            break;
          }
        }
        if (ok) next.push_back(d);
      }
      current.push_back(c);
      extend(current, next);
      current.pop_back();
    }
  }

  std::size_t n_;
  std::vector<bool> compatible_;
  std::vector<bool> triple_ok_;
  std::vector<std::size_t> best_;
};

}  // namespace

CoherentSetResult max_coherent_monomial_set(std::size_t m, MonomialSearchSpace space,
                                            unsigned threads) {
  if (m != 1 && m != 2) {
    throw UnsupportedError("coherent monomial search supports m = 1 or 2, got " + std::to_string(m));
  }
  const PresentationPtr pres = split_symbol_presentation(m);
  const std::vector<Exponents> vecs = candidate_vectors(2 * m, space);
  const std::size_t count = vecs.size();

  std::vector<CliffordElement> elems;
  for (const auto& v : vecs) elems.push_back(CliffordElement::monomial(pres, v));

  std::vector<bool> compatible(count * count, false);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const bool noncommuting = !(elems[i] * elems[j] == elems[j] * elems[i]);
      compatible[i * count + j] = compatible[j * count + i] = noncommuting;
    }
  }

  // triple_ok indexed by sorted (i, j, k); each worker owns whole i-slices.
  std::vector<char> table(count * count * count, 0);
  auto classify_slice = [&](std::size_t i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (!compatible[i * count + j]) continue;
      for (std::size_t k = j + 1; k < count; ++k) {
        if (!compatible[i * count + k] || !compatible[j * count + k]) continue;
        const TripleCase c = classify_triple(elems[i], elems[j], elems[k]);
        table[(i * count + j) * count + k] = c != TripleCase::NotCoherent;
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) classify_slice(i);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += threads) classify_slice(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  CliqueSearch search(count, std::move(compatible),
                      std::vector<bool>(table.begin(), table.end()));
  CoherentSetResult result;
  for (auto idx : search.run()) result.witness.push_back(vecs[idx]);
  result.size = result.witness.size();
  return result;
}

}  // namespace pcentral
