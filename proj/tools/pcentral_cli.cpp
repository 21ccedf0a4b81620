// pcentral: batch front end.
//
//   pcentral decompose --input pres.json --output dec.json
//   pcentral graph analyze  --input tournament.json|pres.json [--output report.json]
//   pcentral graph diminish --input tournament.json|pres.json [--output reduced.json]
//   pcentral cubic solve --gamma 1 --beta 2-1*r --bound 10 --out solutions.jsonl
//   pcentral cubic verify --in solutions.jsonl
//   pcentral cubic identity [--reading cubes|squares]
//
// Exit codes: 0 success, 1 mathematical validation failure, 2 malformed input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pcentral/core_identity.hpp"
#include "pcentral/cubic.hpp"
#include "pcentral/decompose.hpp"
#include "pcentral/errors.hpp"
#include "pcentral/serialize.hpp"
#include "pcentral/tournament.hpp"

namespace {

using pcentral::io::json;

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kMalformed = 2;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pcentral::ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw pcentral::ParseError(path + ": " + e.what());
  }
}

void write_document(const std::string& path, const json& doc) {
  const std::string text = pcentral::io::versioned(doc).dump() + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

int run_decompose(const std::string& input, const std::string& output) {
  const auto pres = pcentral::io::presentation_from_json(read_json_file(input));
  const auto dec = pcentral::decompose(pres);
  write_document(output, pcentral::io::to_json(dec));
  std::cerr << "m = " << dec.blocks << ", degree = " << dec.degree.get_str() << ", "
            << dec.change.certificate.size() << " relations verified\n";
  return kOk;
}

pcentral::Tournament load_graph(const std::string& input) {
  const json doc = read_json_file(input);
  if (doc.is_object() && doc.contains("c")) {
    return pcentral::build_tournament(*pcentral::io::presentation_from_json(doc));
  }
  return pcentral::io::tournament_from_json(doc);
}

int run_graph_analyze(const std::string& input, const std::string& output) {
  const auto t = load_graph(input);
  const auto report = pcentral::validate_propositions(t);
  write_document(output, pcentral::io::to_json(report));
  if (!report.admissible()) {
    std::cerr << "tournament violates the cycle propositions\n";
    return kValidationFailure;
  }
  return kOk;
}

int run_graph_diminish(const std::string& input, const std::string& output) {
  const auto t = load_graph(input);
  const auto report = pcentral::validate_propositions(t);
  if (!report.admissible()) {
    std::cerr << pcentral::io::to_json(report).dump() << "\n";
    throw pcentral::ValidationError("cannot diminish a tournament that violates the cycle propositions");
  }
  write_document(output, pcentral::io::to_json(pcentral::diminish(t)));
  return kOk;
}

int run_cubic_solve(const std::string& gamma_text, const std::string& beta_text, std::int64_t bound,
                    const std::string& out_path, unsigned threads) {
  if (bound < 0) throw pcentral::ParseError("--bound must be non-negative");
  const auto gamma = pcentral::parse_eisenstein(gamma_text);
  const auto beta = pcentral::parse_eisenstein(beta_text);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty() && out_path != "-") {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot write '" + out_path + "'");
    out = &file;
  }
  std::size_t count = 0;
  bool all_ok = true;
  pcentral::enumerate_solutions(
      gamma, beta, static_cast<std::uint64_t>(bound),
      [&](const pcentral::CubicSolution& s) {
        const bool ok = pcentral::verify_solution(s);
        all_ok = all_ok && ok;
        *out << pcentral::io::versioned(pcentral::io::to_json(s, ok)).dump() << "\n";
        ++count;
      },
      threads);
  std::cerr << count << " solutions written\n";
  return all_ok ? kOk : kValidationFailure;
}

int run_cubic_verify(const std::string& in_path) {
  std::ifstream in(in_path);
  if (!in) throw pcentral::ParseError("cannot open '" + in_path + "'");
  std::string line;
  std::size_t line_no = 0;
  std::size_t checked = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    pcentral::CubicSolution s;
    try {
      s = pcentral::io::solution_from_json(json::parse(line));
    } catch (const json::exception& e) {
      std::cerr << "line " << line_no << ": malformed JSON: " << e.what() << "\n";
      return kMalformed;
    } catch (const pcentral::ParseError& e) {
      std::cerr << "line " << line_no << ": " << e.what() << "\n";
      return kMalformed;
    }
    if (!pcentral::verify_solution(s)) {
      std::cerr << "line " << line_no << ": gamma Y^3 != gamma X1^3 + beta X2^3 + gamma^2 beta^2 X3^3\n";
      return kValidationFailure;
    }
    ++checked;
  }
  std::cout << checked << " lines verified\n";
  return kOk;
}

int run_cubic_identity(const std::string& reading_name) {
  const auto reading = reading_name == "squares" ? pcentral::IdentityReading::Squares
                                                 : pcentral::IdentityReading::Cubes;
  const auto report = pcentral::verify_core_identity(reading);
  std::cout << "reading: " << reading_name << "\n"
            << "monomials compared: " << report.monomials_compared << "\n";
  for (const auto& [m, c] : report.lhs.terms()) {
    const bool ok = report.rhs.coefficient(m) == c;
    std::cout << "  " << pcentral::monomial_to_string(m) << ": " << c << (ok ? "  agree" : "  DIFFER")
              << "\n";
  }
  for (const auto& mm : report.mismatches) {
    std::cout << "mismatch " << pcentral::monomial_to_string(mm.monomial) << ": lhs " << mm.lhs
              << ", rhs " << mm.rhs << "\n";
  }
  std::cout << (report.agrees() ? "identity holds" : "identity FAILS") << "\n";
  return report.agrees() ? kOk : kValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford algebras of p-central sets: decomposition, tournaments, cubic solutions"};
  app.require_subcommand(1);

  std::string input, output;
  auto* decompose = app.add_subcommand("decompose", "split C(B) into symbol algebras");
  decompose->add_option("--input", input, "presentation JSON")->required();
  decompose->add_option("--output", output, "decomposition JSON (default stdout)");

  auto* graph = app.add_subcommand("graph", "tournament analysis for p = 3");
  graph->require_subcommand(1);
  auto* analyze = graph->add_subcommand("analyze", "check the cycle propositions");
  analyze->add_option("--input", input, "tournament or presentation JSON")->required();
  analyze->add_option("--output", output, "report JSON (default stdout)");
  auto* diminish = graph->add_subcommand("diminish", "drop one vertex from every triangle");
  diminish->add_option("--input", input, "tournament or presentation JSON")->required();
  diminish->add_option("--output", output, "reduced tournament JSON (default stdout)");

  auto* cubic = app.add_subcommand("cubic", "cubic equation over Z[rho]");
  cubic->require_subcommand(1);
  std::string gamma = "1", beta = "1", out_path, in_path, reading = "cubes";
  std::int64_t bound = 0;
  unsigned threads = 0;
  auto* solve = cubic->add_subcommand("solve", "stream verified parametric solutions");
  solve->add_option("--gamma", gamma, "Eisenstein literal, e.g. 2-1*r")->required();
  solve->add_option("--beta", beta, "Eisenstein literal")->required();
  solve->add_option("--bound", bound, "norm bound for the parameters a and c")->required();
  solve->add_option("--out", out_path, "JSONL output (default stdout)");
  solve->add_option("--threads", threads, "worker threads (0 = all cores)");
  auto* verify = cubic->add_subcommand("verify", "re-check a JSONL solution file");
  verify->add_option("--in", in_path, "JSONL input")->required();
  auto* identity = cubic->add_subcommand("identity", "expand the core cubic identity symbolically");
  identity->add_option("--reading", reading, "cubes or squares")
      ->check(CLI::IsMember({"cubes", "squares"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kMalformed;
  }

  try {
    if (*decompose) return run_decompose(input, output);
    if (*analyze) return run_graph_analyze(input, output);
    if (*diminish) return run_graph_diminish(input, output);
    if (*solve) return run_cubic_solve(gamma, beta, bound, out_path, threads);
    if (*verify) return run_cubic_verify(in_path);
    if (*identity) return run_cubic_identity(reading);
  } catch (const pcentral::ParseError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const pcentral::UsageError& e) {
    std::cerr << "malformed input: " << e.what() << "\n";
    return kMalformed;
  } catch (const pcentral::ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return kValidationFailure;
  } catch (const pcentral::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kValidationFailure;
  }
  return kMalformed;
}
