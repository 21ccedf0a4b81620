#pragma once

#include <span>
#include <string_view>

#include "pcentral/clifford.hpp"

namespace pcentral {

// u u v + u v u + v u u: the coefficient of lambda^2 mu in (lambda u + mu v)^3.
CliffordElement star2(const CliffordElement& u, const CliffordElement& v);

// Sum of the six ordered products of u, v, w.
CliffordElement star3(const CliffordElement& u, const CliffordElement& v,
                      const CliffordElement& w);

enum class TripleCase { Case1, Case2, NotCoherent };

std::string_view to_string(TripleCase c);

// For three 3-central, pairwise non-commuting elements:
//   Case1        star3 = 0
//   Case2        star3 is a nonzero scalar
//   NotCoherent  star3 is not scalar, or some star2 between the pairs is nonzero.
// Throws UnsupportedError for p != 3 and ValidationError when a precondition fails.
TripleCase classify_triple(const CliffordElement& u, const CliffordElement& v,
                           const CliffordElement& w);

// Whether the span of the (3-central) elements is a 3-central space: every
// pairwise star2 vanishes in both orders and every triple has a scalar star3.
bool spans_p_central_space(std::span<const CliffordElement> elements);

}  // namespace pcentral
