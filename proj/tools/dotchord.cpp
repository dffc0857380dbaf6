// Command line front end: enumerate diagrams, compute wick images and basis
// decompositions, verify algebraic identities, export intersection graphs,
// and run the 4T obstruction report.
//
// Exit codes: 0 success / verified, 1 verification failure or NO-MATCH,
// 2 usage or unreadable input, 3 structurally valid input outside a domain.
#include <algorithm>
#include <cctype>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dotchord/diagram.hpp"
#include "dotchord/formal_sum.hpp"
#include "dotchord/hopf_shuffle.hpp"
#include "dotchord/identities.hpp"
#include "dotchord/weights.hpp"
#include "dotchord/wick.hpp"

namespace {

using namespace dotchord;

DiagramFilter filter_from_name(const std::string& name) {
  if (name == "all") return DiagramFilter::all;
  if (name == "regular") return DiagramFilter::regular;
  if (name == "quasiplanar") return DiagramFilter::quasiplanar;
  if (name == "connected") return DiagramFilter::connected;
  if (name == "cq") return DiagramFilter::cq;
  throw ParseError("unknown filter '" + name + "'");
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
}

int checked_degree(const std::string& arg) {
  int n = 0;
  try {
    n = std::stoi(arg);
  } catch (const std::exception&) {
    throw ParseError("unreadable degree '" + arg + "'");
  }
  const int bound = CqCatalog::instance().max_degree();
  if (n > bound)
    throw DomainError("degree " + arg + " exceeds the catalog bound " +
                      std::to_string(bound) + " (set DOTCHORD_MAX_DEGREE)");
  return n;
}

std::vector<std::pair<int, int>> parse_spectators(const std::string& spec) {
  std::vector<std::pair<int, int>> out;
  if (spec.empty() || spec == "0" || spec == "none") return out;
  std::string token;
  std::vector<std::string> tokens;
  for (char c : spec) {
    if (c == ',' || c == ';') {
      tokens.push_back(token);
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  tokens.push_back(token);
  for (const std::string& t : tokens) {
    const auto dash = t.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == t.size())
      throw ParseError("spectator '" + t + "' is not of the form <gap>-<gap>");
    const std::string a = t.substr(0, dash), b = t.substr(dash + 1);
    if (!all_digits(a) || !all_digits(b))
      throw ParseError("spectator '" + t + "' is not of the form <gap>-<gap>");
    const int ga = std::stoi(a), gb = std::stoi(b);
    if (ga > 6 || gb > 6)
      throw ParseError("spectator gap in '" + t + "' outside 0..6");
    out.emplace_back(ga, gb);
  }
  return out;
}

int run_enumerate(int m, const std::string& filter_name) {
  const int bound = CqCatalog::instance().max_degree();
  if (m > bound)
    throw DomainError("degree " + std::to_string(m) + " exceeds the catalog bound " +
                      std::to_string(bound) + " (set DOTCHORD_MAX_DEGREE)");
  const std::vector<Diagram> diagrams =
      enumerate_diagrams(m, filter_from_name(filter_name));
  for (const Diagram& d : diagrams) std::cout << d.code() << "\n";
  std::cout << "count " << diagrams.size() << "\n";
  return 0;
}

int run_wick(const std::string& arg, bool prime, bool decompose,
             const std::string& format, bool pretty) {
  const Diagram d =
      all_digits(arg) ? Diagram::dots(checked_degree(arg)) : Diagram::parse(arg);
  if (pretty && format == "text") std::cout << ascii_art(d);
  if (decompose) {
    const auto atoms = wick_basis_decompose(d);
    if (format == "json")
      std::cout << decomposition_json(atoms).dump(2) << "\n";
    else
      std::cout << decomposition_text(atoms) << "\n";
    return 0;
  }
  const FormalSum result = prime ? wick_prime(d) : wick_of(d);
  if (format == "json")
    std::cout << result.to_json().dump(2) << "\n";
  else
    std::cout << result.text() << "\n";
  return 0;
}

int run_verify(const std::string& identity, int max_degree) {
  for (const IdentitySpec& spec : identity_registry()) {
    if (spec.name != identity) continue;
    const int bound = max_degree >= 0 ? max_degree : spec.default_max_degree;
    const VerifyResult result = spec.run(bound);
    std::cout << "identity: " << result.identity << "\n";
    std::cout << "max-degree: " << result.max_degree << "\n";
    std::cout << "checks: " << result.checks << "\n";
    for (const std::string& note : result.notes) std::cout << "note: " << note << "\n";
    for (const std::string& f : result.failures)
      std::cout << "failure: " << f << "\n";
    std::cout << "result: " << (result.pass() ? "PASS" : "FAIL") << "\n";
    return result.pass() ? 0 : 1;
  }
  throw ParseError("unknown identity '" + identity + "'");
}

int run_graph(const std::string& code, const std::string& format) {
  const Diagram d = Diagram::parse(code);
  const IntersectionGraph g = intersection_graph(d);
  if (format == "json") {
    nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
    for (int i = 0; i < g.size(); ++i)
      vertices.push_back(
          {{"id", i + 1},
           {"color",
            g.colors[i] == IntersectionGraph::Color::white ? "white" : "black"}});
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : g.edges())
      edges.push_back({{"source", a + 1}, {"target", b + 1}});
    const nlohmann::ordered_json out{{"vertices", std::move(vertices)},
                                     {"edges", std::move(edges)}};
    std::cout << out.dump(2) << "\n";
  } else {
    write_dot(std::cout, g);
  }
  return 0;
}

int run_fourt(const std::string& spectators, const std::string& rhs,
              const std::string& format) {
  FourTContext ctx;
  ctx.spectators = parse_spectators(spectators);
  ctx.rhs = rhs == "third" ? 3 : 2;
  const ObstructionReport report = four_t_obstruction(ctx);
  if (format == "json")
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.text();
  return report.match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebra of dotted chord diagrams"};
  app.require_subcommand(1);

  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "list canonical diagram codes of a degree");
  int enum_degree = 0;
  std::string enum_filter = "all";
  cmd_enumerate->add_option("degree", enum_degree, "number of arc positions")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd_enumerate
      ->add_option("--filter", enum_filter,
                   "all|regular|quasiplanar|connected|cq (default all)")
      ->check(CLI::IsMember({"all", "regular", "quasiplanar", "connected", "cq"}));

  auto* cmd_wick = app.add_subcommand(
      "wick", "wick image of a dot count or diagram code");
  std::string wick_arg;
  std::string wick_format = "text";
  bool wick_prime_flag = false, wick_decompose = false, wick_pretty = false;
  cmd_wick->add_option("input", wick_arg, "dot count n or diagram code")->required();
  auto* opt_prime = cmd_wick->add_flag(
      "--prime", wick_prime_flag, "extension keeping chords (quasiplanar input)");
  auto* opt_decomp = cmd_wick->add_flag(
      "--decompose", wick_decompose, "basis decomposition of a quasiplanar diagram");
  opt_prime->excludes(opt_decomp);
  opt_decomp->excludes(opt_prime);
  cmd_wick->add_option("--format", wick_format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_wick->add_flag("--pretty", wick_pretty, "print an ASCII picture of the input");

  auto* cmd_verify = app.add_subcommand("verify", "check an algebraic identity");
  std::string verify_identity;
  int verify_max = -1;
  cmd_verify
      ->add_option("--identity", verify_identity,
                   "hopf-concat|hopf-shuffle|projection|convolution|product|signs")
      ->required()
      ->check(CLI::IsMember({"hopf-concat", "hopf-shuffle", "projection",
                             "convolution", "product", "signs"}));
  cmd_verify->add_option("--max-degree", verify_max, "degree bound (default per identity)")
      ->check(CLI::NonNegativeNumber);

  auto* cmd_graph =
      app.add_subcommand("graph", "labelled intersection graph of a diagram");
  std::string graph_code;
  std::string graph_format = "dot";
  cmd_graph->add_option("code", graph_code, "diagram code (may be empty)");
  cmd_graph->add_option("--format", graph_format, "dot|json (default dot)")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* cmd_fourt = app.add_subcommand("fourt", "4T obstruction report");
  std::string fourt_spectators;
  std::string fourt_rhs = "second";
  std::string fourt_format = "text";
  cmd_fourt->add_option(
      "--spectators", fourt_spectators,
      "spectator chords as <gap>-<gap> pairs joined by , or ; (0 or empty: none)");
  cmd_fourt->add_option("--rhs", fourt_rhs, "second|third (default second)")
      ->check(CLI::IsMember({"second", "third"}));
  cmd_fourt->add_option("--format", fourt_format, "text|json (default text)")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_enumerate)) return run_enumerate(enum_degree, enum_filter);
    if (app.got_subcommand(cmd_wick))
      return run_wick(wick_arg, wick_prime_flag, wick_decompose, wick_format,
                      wick_pretty);
    if (app.got_subcommand(cmd_verify)) return run_verify(verify_identity, verify_max);
    if (app.got_subcommand(cmd_graph)) return run_graph(graph_code, graph_format);
    if (app.got_subcommand(cmd_fourt))
      return run_fourt(fourt_spectators, fourt_rhs, fourt_format);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
