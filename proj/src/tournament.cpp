#include "pcentral/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pcentral/errors.hpp"

namespace pcentral {

Tournament::Tournament(std::size_t n, std::vector<std::size_t> labels)
    : n_(n), labels_(std::move(labels)), adj_(n * n, 0) {
  if (labels_.empty()) {
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), std::size_t{0});
  }
  if (labels_.size() != n) throw ValidationError("tournament label count does not match size");
}

Tournament Tournament::from_edges(std::size_t n, std::span<const Edge> edges,
                                  std::vector<std::size_t> labels) {
  Tournament t(n, std::move(labels));
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw ValidationError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) throw ValidationError("self-loop at vertex " + std::to_string(a));
    if (t.edge(a, b) || t.edge(b, a)) {
      throw ValidationError("pair {" + std::to_string(std::min(a, b)) + "," +
                            std::to_string(std::max(a, b)) + "} has more than one edge");
    }
    t.adj_[a * n + b] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!t.edge(i, j) && !t.edge(j, i)) {
        throw ValidationError("pair {" + std::to_string(i) + "," + std::to_string(j) +
                              "} has no edge");
      }
    }
  }
  return t;
}

Tournament Tournament::from_predicate(std::size_t n,
                                      const std::function<bool(std::size_t, std::size_t)>& forward,
                                      std::vector<std::size_t> labels) {
  Tournament t(n, std::move(labels));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (forward(i, j)) {
        t.adj_[i * n + j] = 1;
      } else {
        t.adj_[j * n + i] = 1;
      }
    }
  }
  return t;
}

std::vector<Edge> Tournament::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (edge(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

Tournament Tournament::induced(std::span<const std::size_t> vertices) const {
  std::vector<std::size_t> labels;
  for (auto v : vertices) labels.push_back(labels_.at(v));
  return from_predicate(
      vertices.size(), [&](std::size_t i, std::size_t j) { return edge(vertices[i], vertices[j]); },
      std::move(labels));
}

Tournament build_tournament(const PCentralPresentation& pres) {
  if (pres.p() != 3) {
    throw UnsupportedError("tournaments are defined for p = 3, got p = " + std::to_string(pres.p()));
  }
  const FpMatrix& c = pres.commutation();
  for (std::size_t i = 0; i < pres.n(); ++i) {
    for (std::size_t j = i + 1; j < pres.n(); ++j) {
      if (c(i, j) == 0) {
        throw ValidationError("generators " + std::to_string(i) + " and " + std::to_string(j) +
                              " commute; in a coherent 3-central set that forces F x_i = F x_j");
      }
    }
  }
  return Tournament::from_predicate(pres.n(),
                                    [&](std::size_t i, std::size_t j) { return c(i, j) == 1; });
}

Tournament build_tournament(std::span<const CliffordElement> elements) {
  const std::size_t n = elements.size();
  if (n > 0 && elements.front().p() != 3) throw UnsupportedError("tournaments are defined for p = 3");
  std::vector<std::uint32_t> exps(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto k = commutation_exponent(elements[i], elements[j]);
      if (!k) {
        throw ValidationError("elements " + std::to_string(i) + " and " + std::to_string(j) +
                              " do not commute up to a power of rho");
      }
      if (*k == 0) {
        throw ValidationError("elements " + std::to_string(i) + " and " + std::to_string(j) +
                              " commute; in a coherent 3-central set that forces F x_i = F x_j");
      }
      exps[i * n + j] = *k;
    }
  }
  return Tournament::from_predicate(n, [&](std::size_t i, std::size_t j) { return exps[i * n + j] == 1; });
}

std::vector<Triangle> find_3cycles(const Tournament& t) {
  std::vector<Triangle> out;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const bool cw = t.edge(i, j) && t.edge(j, k) && t.edge(k, i);
        const bool ccw = t.edge(j, i) && t.edge(k, j) && t.edge(i, k);
        if (cw || ccw) out.push_back({i, j, k});
      }
    }
  }
  return out;
}

bool is_acyclic(const Tournament& t) {
  // Kahn's algorithm.
  const std::size_t n = t.size();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (t.edge(i, j)) ++indegree[j];
    }
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (std::size_t w = 0; w < n; ++w) {
      if (t.edge(v, w) && --indegree[w] == 0) ready.push_back(w);
    }
  }
  return seen == n;
}

namespace {

std::vector<std::vector<bool>> reachability(const Tournament& t) {
  const std::size_t n = t.size();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    r[i][i] = true;
    for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] || t.edge(i, j);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

// A strong tournament on >= 4 vertices has cycles of every length 3..k, so a
// cycle longer than 3 exists iff some strong component has >= 4 vertices; a
// 4-cycle inside it is the witness.
std::optional<std::vector<std::size_t>> long_cycle(const Tournament& t) {
  const std::size_t n = t.size();
  const auto r = reachability(t);
  std::vector<bool> assigned(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    std::vector<std::size_t> comp;
    for (std::size_t w = 0; w < n; ++w) {
      if (r[v][w] && r[w][v]) {
        comp.push_back(w);
        assigned[w] = true;
      }
    }
    if (comp.size() < 4) continue;
    for (auto a : comp) {
      for (auto b : comp) {
        if (b <= a || !t.edge(a, b)) continue;
        for (auto c : comp) {
          if (c <= a || c == b || !t.edge(b, c)) continue;
          for (auto d : comp) {
            if (d <= a || d == b || d == c) continue;
            if (t.edge(c, d) && t.edge(d, a)) return std::vector<std::size_t>{a, b, c, d};
          }
        }
      }
    }
    throw std::logic_error("strong component without a 4-cycle");
  }
  return std::nullopt;
}

}  // namespace

PropositionReport validate_propositions(const Tournament& t) {
  PropositionReport report;
  report.triangles = find_3cycles(t);

  for (const auto& tri : report.triangles) {
    for (std::size_t l = 0; l < t.size() && report.prop1_ok; ++l) {
      if (l == tri[0] || l == tri[1] || l == tri[2]) continue;
      const int into = t.edge(l, tri[0]) + t.edge(l, tri[1]) + t.edge(l, tri[2]);
      if (into != 0 && into != 3) {
        report.prop1_ok = false;
        report.prop1_witness = {tri, l};
      }
    }
    if (!report.prop1_ok) break;
  }

  for (std::size_t a = 0; a < report.triangles.size() && report.prop2_ok; ++a) {
    for (std::size_t b = a + 1; b < report.triangles.size(); ++b) {
      const auto& x = report.triangles[a];
      const auto& y = report.triangles[b];
      const bool shares = std::any_of(x.begin(), x.end(), [&](std::size_t v) {
        return std::find(y.begin(), y.end(), v) != y.end();
      });
      if (shares) {
        report.prop2_ok = false;
        report.prop2_witness = {x, y};
        break;
      }
    }
  }

  if (auto cycle = long_cycle(t)) {
    report.prop3_ok = false;
    report.prop3_witness = std::move(cycle);
  }
  return report;
}

Tournament diminish(const Tournament& t, const TriangleSelector& choose) {
  const PropositionReport report = validate_propositions(t);
  if (!report.admissible()) {
    throw ValidationError("cannot diminish a tournament that violates the cycle propositions");
  }
  std::vector<bool> removed(t.size(), false);
  for (const auto& tri : report.triangles) {
    const std::size_t v = choose ? choose(tri) : tri[0];
    if (v != tri[0] && v != tri[1] && v != tri[2]) {
      throw UsageError("selector returned vertex " + std::to_string(v) + " outside its triangle");
    }
    removed[v] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  Tournament out = t.induced(keep);
  if (!is_acyclic(out)) throw std::logic_error("diminished tournament still has a cycle");
  return out;
}

}  // namespace pcentral
