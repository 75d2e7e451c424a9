#include "bpm/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bpm/approxdeg.hpp"
#include "bpm/bigraph.hpp"
#include "bpm/coeff.hpp"
#include "bpm/dual_polynomial.hpp"
#include "bpm/error.hpp"
#include "bpm/kernels.hpp"
#include "bpm/oracle.hpp"
#include "bpm/ordered.hpp"
#include "bpm/polyspace.hpp"
#include "bpm/sensitivity.hpp"

namespace bpm::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string caps_text() {
  std::ostringstream s;
  s << "Size caps (n is the side of the bipartite graph):\n"
    << "  graph side                    n <= " << limits::kMaxSide << "\n"
    << "  verify / table oracles        n <= " << limits::kMaxTableSide << " (" << limits::kMaxTableSideHuge
    << " with --huge)\n"
    << "  poly / materialize            n <= " << limits::kMaxMaterializeSide << "\n"
    << "  count / sequence enumeration  n <= " << limits::kMaxSequenceSide << "\n"
    << "  mobius oracle                 |E| <= " << limits::kMaxMobiusEdges << "\n"
    << "  chisum / elemsum oracles      n <= " << limits::kMaxSupergraphSide << "\n"
    << "  permitted oracle              n <= " << limits::kMaxPermittedSide << "\n"
    << "  sens                          n <= " << limits::kMaxSensitivitySide << "\n"
    << "  apxdeg                        n <= " << limits::kMaxBoundSide << " (AND size m = n^2 <= "
    << limits::kMaxAndVariablesHuge << ")\n"
    << "  apxdeg --assemble             n <= " << limits::kMaxAssembleSide << "\n";
  return s.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Coefficient coefficient_by(const std::string& method, const BipartiteGraph& g) {
  if (method == "formula") return dual_coefficient(g);
  if (method == "mobius") return oracle::mobius_coefficient(g);
  if (method == "chisum") return oracle::mc_chi_sum_coefficient(g);
  if (method == "elemsum") return oracle::elementary_sum_coefficient(g);
  if (method == "permitted") {
    if (!is_totally_ordered(g))
      throw Error(ErrorCode::PreconditionViolated, "the permitted-edge sum needs a totally ordered graph");
    return oracle::permitted_sum_coefficient(canonical_sort(g).sorted);
  }
  throw Error(ErrorCode::ParseError, "unknown method '" + method + "'");
}

int cmd_verify(int n, bool huge, std::ostream& out) {
  const auto oracle_table = oracle::coefficient_values(n, huge, kernels::Exec::Parallel);
  const auto formula = kernels::formula_table(n, kernels::Exec::Parallel);
  const auto bad = kernels::first_mismatch(oracle_table, formula, kernels::Exec::Parallel);
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  std::uint64_t points = 0;
  std::int64_t bad_point = -1;
  if (n <= limits::kMaxMaterializeSide) {
    const auto poly = materialize(n);
    for (std::uint64_t x = 0; x < count; ++x, ++points) {
      const auto g = BipartiteGraph::from_mask(n, x);
      if (poly.evaluate(g) != oracle::bpm_star_value(g)) {
        bad_point = static_cast<std::int64_t>(x);
        break;
      }
    }
  } else {
    // Summing the polynomial over every input at once is the zeta transform.
    auto values = formula;
    kernels::zeta_transform(values, kernels::Exec::Parallel);
    const auto truth = kernels::bpm_star_truth_table(n, kernels::Exec::Parallel);
    bad_point = kernels::first_mismatch(values, truth, kernels::Exec::Parallel);
    points = count;
  }
  out << count << " subset coefficients checked; " << points << " evaluation points checked\n";
  if (bad >= 0) out << "coefficient mismatch at mask " << bad << "\n";
  if (bad_point >= 0) out << "evaluation mismatch at mask " << bad_point << "\n";
  const bool ok = bad < 0 && bad_point < 0;
  out << (ok ? "OK" : "FAILED") << "\n";
  return ok ? kOk : kFailed;
}

int cmd_count(int n, std::ostream& out) {
  const auto r = count_report(n);
  out << "n\t" << r.n << "\n"
      << "monomial_count\t" << r.monomials << "\n"
      << "max_abs_coefficient\t" << r.max_abs << "\n"
      << "monomial_bounds\t" << r.monomial_lower << " <= count <= " << r.monomial_upper << "\t"
      << (r.monomial_bounds_hold() ? "OK" : "FAILED") << "\n"
      << "magnitude_bounds\t" << r.magnitude_lower << " <= max|a*| <= " << r.magnitude_upper << "\t"
      << (r.magnitude_bounds_hold() ? "OK" : "FAILED") << "\n";
  return r.monomial_bounds_hold() && r.magnitude_bounds_hold() ? kOk : kFailed;
}

int cmd_sens(int n, const std::string& format, std::ostream& out) {
  const auto r = sensitivity_at(construct_path_input(n));
  const bool ok = r.count >= r.lower_bound_formula;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["input"] = format_edge_list(r.input.edges());
    j["sensitivity"] = r.count;
    j["lower_bound"] = r.lower_bound_formula;
    j["degree_lower_bound"] = r.degree_lower_bound;
    auto edges = nlohmann::json::array();
    for (const auto& e : r.sensitive_edges) edges.push_back({e.row + 1, e.col + 1});
    j["sensitive_edges"] = edges;
    out << j.dump(2) << "\n";
  } else {
    out << "n\tsensitivity\tlower_bound\tdegree_lower_bound\n"
        << r.n << '\t' << r.count << '\t' << r.lower_bound_formula << '\t' << r.degree_lower_bound << "\n"
        << "input\t" << format_edge_list(r.input.edges()) << "\n"
        << "sensitive_edges\t" << format_edge_list(r.sensitive_edges) << "\n";
  }
  return ok ? kOk : kFailed;
}

int cmd_apxdeg(int n, const std::string& eps_text, bool assemble, const std::string& format,
               std::ostream& out, std::ostream& err) {
  const Rational eps = parse_rational(eps_text);
  const auto r = bpm_degree_bound(n, eps);
  if (!r.epsilon_in_regime)
    err << "warning: eps is outside 2^{-n log n} <= eps <= 1/3; computed anyway\n";
  if (!r.epsilon_prime_in_regime)
    err << "warning: eps' is outside the AND regime for m = n^2; computed anyway\n";
  out << (format == "json" ? report_json(r) : report_tsv(r));
  if (!assemble) return kOk;
  const auto a = assemble_bpm_approximant(n, eps);
  out << "assembled\texact_terms=" << a.exact_terms << "\tapproximated_terms=" << a.approximated_terms
      << "\tdegree=" << a.degree << "\tmax_error=" << format_rational(a.max_error)
      << "\tdual_max_error=" << format_rational(a.dual_max_error) << "\n";
  const bool ok = a.max_error <= eps && a.dual_max_error == a.max_error &&
                  a.degree == std::min(r.overall_bound, n * n);
  out << (ok ? "OK" : "FAILED") << "\n";
  return ok ? kOk : kFailed;
}

int cmd_eval(const std::string& graph_path, const std::string& poly_path, std::ostream& out) {
  const auto g = read_graph_file(graph_path);
  const std::string text = read_text(poly_path);
  const auto first = text.find_first_not_of(" \t\r\n");
  const auto poly = (first != std::string::npos && text[first] == '{') ? DualPolynomial::from_json(text)
                                                                        : DualPolynomial::from_tsv(text, g.n());
  if (poly.n() != g.n()) throw Error(ErrorCode::DimensionMismatch, "polynomial and graph sizes differ");
  out << poly.evaluate(g) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact dual polynomial and approximate degree of bipartite perfect matching"};
  app.footer(caps_text());
  app.require_subcommand(1);

  int n = 0;
  bool huge = false;
  std::string graph_path, seq_text, method = "formula", format = "tsv", out_path, eps_text, poly_path;
  bool assemble = false;

  auto* coeff = app.add_subcommand("coeff", "dual coefficient of one graph");
  auto* g_opt = coeff->add_option("--graph", graph_path, "graph file (n, then n rows of 0/1)");
  auto* s_opt = coeff->add_option("--seq", seq_text, "representing sequence \"n; (d,k)(d,k)...\"");
  g_opt->excludes(s_opt);
  coeff->add_option("--method", method, "formula|mobius|chisum|elemsum|permitted")
      ->check(CLI::IsMember({"formula", "mobius", "chisum", "elemsum", "permitted"}));

  auto* poly = app.add_subcommand("poly", "dump every nonzero dual coefficient");
  poly->add_option("--n", n)->required();
  poly->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
  poly->add_option("--out", out_path, "write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "closed form against the Mobius table, and the representation identity");
  verify->add_option("--n", n)->required();
  verify->add_flag("--huge", huge, "lift the exhaustive cap by one");

  auto* count = app.add_subcommand("count", "monomial count and coefficient magnitudes");
  count->add_option("--n", n)->required();

  auto* sens = app.add_subcommand("sens", "sensitivity at the two-path input");
  sens->add_option("--n", n)->required();
  sens->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

  auto* apx = app.add_subcommand("apxdeg", "approximate-degree bound");
  apx->add_option("--n", n)->required();
  apx->add_option("--eps", eps_text, "rational p/q")->required();
  apx->add_flag("--assemble", assemble, "build and exhaustively certify the approximant (n <= 3)");
  apx->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));

  auto* eval = app.add_subcommand("eval", "evaluate a dumped polynomial at a graph");
  eval->add_option("--graph", graph_path)->required();
  eval->add_option("--poly", poly_path)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (coeff->parsed()) {
      BipartiteGraph g(1);
      if (!graph_path.empty())
        g = read_graph_file(graph_path);
      else if (!seq_text.empty())
        g = parse_sequence(seq_text).decode();
      else
        throw Error(ErrorCode::ParseError, "coeff needs --graph or --seq");
      out << coefficient_by(method, g) << "\n";
      return kOk;
    }
    if (poly->parsed()) {
      const auto p = materialize(n);
      const std::string text = format == "json" ? p.to_json() : p.to_tsv();
      if (out_path.empty()) {
        out << text;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + out_path + "'");
        f << text;
      }
      return kOk;
    }
    if (verify->parsed()) {
      const int cap = huge ? limits::kMaxTableSideHuge : limits::kMaxTableSide;
      require_size(n >= 1 && n <= cap, "verify needs 1 <= n <= " + std::to_string(cap) +
                                           (huge ? "" : " (or --huge)"));
      return cmd_verify(n, huge, out);
    }
    if (count->parsed()) return cmd_count(n, out);
    if (sens->parsed()) return cmd_sens(n, format, out);
    if (apx->parsed()) return cmd_apxdeg(n, eps_text, assemble, format, out, err);
    if (eval->parsed()) return cmd_eval(graph_path, poly_path, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::NumericalFailure ? kFailed : kUsage;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace bpm::cli
