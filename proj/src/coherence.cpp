#include "pcentral/coherence.hpp"

#include <string>

#include "pcentral/errors.hpp"

namespace pcentral {

CliffordElement star2(const CliffordElement& u, const CliffordElement& v) {
  const CliffordElement uv = u * v;
  return u * uv + uv * u + v * u * u;
}

CliffordElement star3(const CliffordElement& u, const CliffordElement& v,
                      const CliffordElement& w) {
  return u * v * w + u * w * v + v * u * w + v * w * u + w * u * v + w * v * u;
}

std::string_view to_string(TripleCase c) {
  switch (c) {
    case TripleCase::Case1:
      return "Case1";
    case TripleCase::Case2:
      return "Case2";
    case TripleCase::NotCoherent:
      return "NotCoherent";
  }
  return "?";
}

namespace {

void require_p3(const CliffordElement& u) {
  if (u.p() != 3) {
    throw UnsupportedError("coherence tests are defined for p = 3 only, got p = " +
                           std::to_string(u.p()));
  }
}

bool pair_obstruction_vanishes(const CliffordElement& u, const CliffordElement& v) {
  return star2(u, v).is_zero() && star2(v, u).is_zero();
}

}  // namespace

TripleCase classify_triple(const CliffordElement& u, const CliffordElement& v,
                           const CliffordElement& w) {
  require_p3(u);
  const CliffordElement* items[3] = {&u, &v, &w};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!is_p_central(*items[i])) {
      throw ValidationError("triple element " + std::to_string(i) + " is not 3-central");
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (*items[i] * *items[j] == *items[j] * *items[i]) {
        throw ValidationError("triple elements " + std::to_string(i) + " and " +
                              std::to_string(j) + " commute");
      }
    }
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!pair_obstruction_vanishes(*items[i], *items[j])) return TripleCase::NotCoherent;
    }
  }
  const CliffordElement s = star3(u, v, w);
  if (s.is_zero()) return TripleCase::Case1;
  if (s.is_scalar()) return TripleCase::Case2;
  return TripleCase::NotCoherent;
}

bool spans_p_central_space(std::span<const CliffordElement> elements) {
  if (elements.empty()) return true;
  require_p3(elements.front());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!is_p_central(elements[i])) {
      throw ValidationError("element " + std::to_string(i) + " is not 3-central");
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (!pair_obstruction_vanishes(elements[i], elements[j])) return false;
    }
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      for (std::size_t k = j + 1; k < elements.size(); ++k) {
        if (!star3(elements[i], elements[j], elements[k]).is_scalar()) return false;
      }
    }
  }
  return true;
}

}  // namespace pcentral
