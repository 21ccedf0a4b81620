#include "pcentral/serialize.hpp"

#include <cctype>
#include <string>

#include "pcentral/errors.hpp"

namespace pcentral::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_size(const json& j, const char* what) {
  const std::int64_t v = as_int(j, what);
  if (v < 0) throw ParseError(std::string(what) + " must be non-negative");
  return static_cast<std::uint64_t>(v);
}

bool is_integer_literal(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(const json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a decimal string");
  const auto s = j.get<std::string>();
  if (!is_integer_literal(s)) throw ParseError(std::string(what) + ": bad integer '" + s + "'");
  return mpz_class(s, 10);
}

std::vector<std::vector<std::int64_t>> int_rows(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError(std::string(what) + " rows must be arrays");
    std::vector<std::int64_t> row;
    for (const auto& x : r) row.push_back(as_int(x, what));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::uint32_t as_prime(const json& j) {
  const std::uint64_t p = as_size(j, "p");
  if (p > kMaxFieldPrime) throw ValidationError("p = " + std::to_string(p) + " is too large");
  return static_cast<std::uint32_t>(p);
}

json triangle_json(const Triangle& t) { return json::array({t[0], t[1], t[2]}); }

}  // namespace

json versioned(json doc) {
  doc["format_version"] = kFormatVersion;
  return doc;
}

mpq_class parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-') {
    throw ParseError("bad rational '" + s + "'");
  }
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class q(mpz_class(num, 10), d);
  q.canonicalize();
  return q;
}

json to_json(const CycloNum& x) {
  json out = json::array();
  for (const auto& c : x.coeffs()) {
    out.push_back(c.get_num().get_str() + "/" + c.get_den().get_str());
  }
  return out;
}

CycloNum cyclo_from_json(const json& j, std::uint32_t p) {
  if (!j.is_array()) throw ParseError("Q(rho) element must be an array of rationals");
  if (j.size() != p - 1) {
    throw ParseError("Q(rho) element for p = " + std::to_string(p) + " needs " +
                     std::to_string(p - 1) + " coefficients, got " + std::to_string(j.size()));
  }
  std::vector<mpq_class> coeffs;
  for (const auto& c : j) {
    if (!c.is_string()) throw ParseError("rational coefficients must be strings \"num/den\"");
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return CycloNum::from_coeffs(p, std::move(coeffs));
}

json to_json(const EisensteinInt& x) { return {{"a", x.a.get_str()}, {"b", x.b.get_str()}}; }

EisensteinInt eisenstein_from_json(const json& j) {
  return {parse_integer(field(j, "a"), "a"), parse_integer(field(j, "b"), "b")};
}

json to_json(const FpMatrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    entries.push_back(std::move(row));
  }
  return {{"p", m.p()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

FpMatrix fpmatrix_from_json(const json& j) {
  const std::uint32_t p = as_prime(field(j, "p"));
  const auto rows = as_size(field(j, "rows"), "rows");
  const auto cols = as_size(field(j, "cols"), "cols");
  auto entries = int_rows(field(j, "entries"), "entries");
  if (entries.size() != rows) throw ParseError("entries row count differs from 'rows'");
  for (const auto& r : entries) {
    if (r.size() != cols) throw ParseError("entries column count differs from 'cols'");
  }
  if (rows == 0) return FpMatrix(p, 0, cols);
  return FpMatrix(p, entries);
}

json to_json(const PCentralPresentation& pres) {
  json c = json::array();
  for (std::size_t i = 0; i < pres.n(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < pres.n(); ++k) row.push_back(pres.commutation()(i, k));
    c.push_back(std::move(row));
  }
  json alpha = json::array();
  for (const auto& a : pres.alpha()) alpha.push_back(to_json(a));
  return {{"p", pres.p()}, {"n", pres.n()}, {"c", std::move(c)}, {"alpha", std::move(alpha)}};
}

PresentationPtr presentation_from_json(const json& j) {
  const std::uint32_t p = as_prime(field(j, "p"));
  const auto n = as_size(field(j, "n"), "n");
  auto rows = int_rows(field(j, "c"), "c");
  if (rows.size() != n) throw ParseError("'c' must have n rows");
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError("'c' must have n columns");
  }
  const json& alpha_json = field(j, "alpha");
  if (!alpha_json.is_array() || alpha_json.size() != n) {
    throw ParseError("'alpha' must be an array of n elements");
  }
  require_field_prime(p);
  std::vector<CycloNum> alpha;
  for (const auto& a : alpha_json) alpha.push_back(cyclo_from_json(a, p));
  FpMatrix c = n == 0 ? FpMatrix(p, 0, 0) : FpMatrix(p, rows);
  return make_presentation(p, std::move(c), std::move(alpha));
}

json to_json(const Decomposition& d) {
  json symbols = json::array();
  for (const auto& [a, b] : d.symbols) symbols.push_back(json::array({to_json(a), to_json(b)}));
  json commutative = json::array();
  for (const auto& g : d.commutative) {
    commutative.push_back({{"exponents", g.exponents}, {"pth_power", to_json(g.pth_power)}});
  }
  json degree = d.degree.fits_ulong_p() ? json(d.degree.get_ui()) : json(d.degree.get_str());
  const auto& pres = *d.change.presentation;
  return {{"p", pres.p()},
          {"n", pres.n()},
          {"D", to_json(d.transform)},
          {"m", d.blocks},
          {"symbols", std::move(symbols)},
          {"commutative", std::move(commutative)},
          {"degree", std::move(degree)},
          {"certificate",
           {{"relations_checked", d.change.certificate.size()},
            {"all_verified", d.change.verified()},
            {"phase_free", d.change.phase_free}}}};
}

json to_json(const Tournament& t) {
  json edges = json::array();
  for (const auto& [a, b] : t.edges()) edges.push_back(json::array({a, b}));
  return {{"n", t.size()}, {"edges", std::move(edges)}, {"labels", t.labels()}};
}

Tournament tournament_from_json(const json& j) {
  const auto n = as_size(field(j, "n"), "n");
  const json& edges_json = field(j, "edges");
  if (!edges_json.is_array()) throw ParseError("'edges' must be an array");
  std::vector<Edge> edges;
  for (const auto& e : edges_json) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [from, to]");
    edges.emplace_back(as_size(e[0], "edge endpoint"), as_size(e[1], "edge endpoint"));
  }
  std::vector<std::size_t> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) throw ParseError("'labels' must be an array");
    for (const auto& l : *it) labels.push_back(as_size(l, "label"));
  }
  return Tournament::from_edges(n, edges, std::move(labels));
}

json to_json(const PropositionReport& r) {
  json triangles = json::array();
  for (const auto& t : r.triangles) triangles.push_back(triangle_json(t));
  json w1 = nullptr, w2 = nullptr, w3 = nullptr;
  if (r.prop1_witness) {
    w1 = {{"cycle", triangle_json(r.prop1_witness->first)}, {"vertex", r.prop1_witness->second}};
  }
  if (r.prop2_witness) {
    w2 = json::array({triangle_json(r.prop2_witness->first), triangle_json(r.prop2_witness->second)});
  }
  if (r.prop3_witness) w3 = *r.prop3_witness;
  return {{"triangles", std::move(triangles)},
          {"prop1", {{"ok", r.prop1_ok}, {"witness", std::move(w1)}}},
          {"prop2", {{"ok", r.prop2_ok}, {"witness", std::move(w2)}}},
          {"prop3", {{"ok", r.prop3_ok}, {"witness", std::move(w3)}}},
          {"admissible", r.admissible()}};
}

json to_json(const CubicSolution& s, bool verified) {
  return {{"gamma", to_json(s.gamma)}, {"beta", to_json(s.beta)}, {"a", to_json(s.a)},
          {"c", to_json(s.c)},         {"Y", to_json(s.Y)},       {"X1", to_json(s.X1)},
          {"X2", to_json(s.X2)},       {"X3", to_json(s.X3)},     {"degenerate", s.degenerate},
          {"verified", verified}};
}

CubicSolution solution_from_json(const json& j) {
  CubicSolution s;
  s.gamma = eisenstein_from_json(field(j, "gamma"));
  s.beta = eisenstein_from_json(field(j, "beta"));
  s.a = eisenstein_from_json(field(j, "a"));
  s.c = eisenstein_from_json(field(j, "c"));
  s.Y = eisenstein_from_json(field(j, "Y"));
  s.X1 = eisenstein_from_json(field(j, "X1"));
  s.X2 = eisenstein_from_json(field(j, "X2"));
  s.X3 = eisenstein_from_json(field(j, "X3"));
  const json& deg = field(j, "degenerate");
  if (!deg.is_boolean()) throw ParseError("'degenerate' must be a boolean");
  s.degenerate = deg.get<bool>();
  return s;
}

}  // namespace pcentral::io
