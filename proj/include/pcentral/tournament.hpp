#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pcentral/clifford.hpp"
#include "pcentral/presentation.hpp"

namespace pcentral {

using Edge = std::pair<std::size_t, std::size_t>;
using Triangle = std::array<std::size_t, 3>;

// A complete directed graph with exactly one orientation per vertex pair.
// Vertices are 0..n-1; labels() maps them back to the generating set they came from.
class Tournament {
 public:
  // Throws ValidationError unless every unordered pair carries exactly one edge.
  static Tournament from_edges(std::size_t n, std::span<const Edge> edges,
                               std::vector<std::size_t> labels = {});
  // edge(i, j) for all i < j; the orientation of every pair is given by this predicate.
  static Tournament from_predicate(std::size_t n,
                                   const std::function<bool(std::size_t, std::size_t)>& forward,
                                   std::vector<std::size_t> labels = {});

  std::size_t size() const { return n_; }
  bool edge(std::size_t from, std::size_t to) const { return adj_[from * n_ + to] != 0; }
  const std::vector<std::size_t>& labels() const { return labels_; }
  // All edges, sorted by (from, to).
  std::vector<Edge> edges() const;

  // Subtournament on the given vertices (in the given order), labels carried over.
  Tournament induced(std::span<const std::size_t> vertices) const;

  bool operator==(const Tournament&) const = default;

 private:
  Tournament(std::size_t n, std::vector<std::size_t> labels);

  std::size_t n_;
  std::vector<std::size_t> labels_;
  std::vector<unsigned char> adj_;
};

// p = 3 only; i -> j iff C(i, j) = 1. A zero off-diagonal entry is a commuting
// pair, which a coherent set cannot contain, and raises ValidationError.
Tournament build_tournament(const PCentralPresentation& pres);

// Same rule for the engine-computed commutation exponents of arbitrary elements.
Tournament build_tournament(std::span<const CliffordElement> elements);

// Directed triangles, vertices sorted ascending, list sorted lexicographically.
std::vector<Triangle> find_3cycles(const Tournament& t);

bool is_acyclic(const Tournament& t);

struct PropositionReport {
  std::vector<Triangle> triangles;

  // Every vertex outside a triangle points into all of it or receives from all of it.
  bool prop1_ok = true;
  std::optional<std::pair<Triangle, std::size_t>> prop1_witness;

  // Triangles are vertex-disjoint.
  bool prop2_ok = true;
  std::optional<std::pair<Triangle, Triangle>> prop2_witness;

  // No directed cycle longer than 3.
  bool prop3_ok = true;
  std::optional<std::vector<std::size_t>> prop3_witness;

  bool admissible() const { return prop1_ok && prop2_ok && prop3_ok; }
};

PropositionReport validate_propositions(const Tournament& t);

// Picks the vertex to drop from a triangle.
using TriangleSelector = std::function<std::size_t(const Triangle&)>;

// Drops one vertex of every triangle (smallest index by default) and checks the
// remainder is acyclic. Throws ValidationError on a non-admissible tournament.
Tournament diminish(const Tournament& t, const TriangleSelector& choose = {});

}  // namespace pcentral
