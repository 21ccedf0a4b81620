#pragma once

// JSON forms of the domain types. Objects serialize with sorted keys and
// rationals in lowest terms, so dump() output is byte-stable.
// Shape errors raise ParseError; mathematically invalid content raises
// ValidationError from the type's own constructor.

#include <json.hpp>

#include "pcentral/cubic.hpp"
#include "pcentral/cyclo.hpp"
#include "pcentral/decompose.hpp"
#include "pcentral/eisenstein.hpp"
#include "pcentral/fp_matrix.hpp"
#include "pcentral/presentation.hpp"
#include "pcentral/tournament.hpp"

namespace pcentral::io {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Adds "format_version" to a top-level document.
json versioned(json doc);

// ["num/den", ...], p - 1 entries.
json to_json(const CycloNum& x);
CycloNum cyclo_from_json(const json& j, std::uint32_t p);
mpq_class parse_rational(const std::string& s);

// {"a": "<decimal>", "b": "<decimal>"}
json to_json(const EisensteinInt& x);
EisensteinInt eisenstein_from_json(const json& j);

// {"p", "rows", "cols", "entries": [[...], ...]}
json to_json(const FpMatrix& m);
FpMatrix fpmatrix_from_json(const json& j);

// {"p", "n", "c": [[...]], "alpha": [CycloNum, ...]}
json to_json(const PCentralPresentation& pres);
PresentationPtr presentation_from_json(const json& j);

json to_json(const Decomposition& d);

// {"n", "edges": [[i, j], ...], "labels": [...]}, i -> j, 0-based.
json to_json(const Tournament& t);
Tournament tournament_from_json(const json& j);

json to_json(const PropositionReport& r);

json to_json(const CubicSolution& s, bool verified);
CubicSolution solution_from_json(const json& j);

}  // namespace pcentral::io
