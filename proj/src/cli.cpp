#include "hamcert/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hamcert/certify.hpp"
#include "hamcert/graph6.hpp"
#include "hamcert/harness.hpp"

namespace hamcert {

namespace {

std::string relation_text(const std::optional<Relation>& r) {
  return r ? std::string(to_string(*r)) : "n/a";
}

std::string bool_text(const std::optional<bool>& b) {
  return b ? (*b ? "true" : "false") : "n/a";
}

void print_certificate(const Certificate& c, bool as_json, std::ostream& out) {
  if (as_json) {
    out << to_json(c) << '\n';
    return;
  }
  out << std::setprecision(15);
  out << "n: " << c.n << "\nm: " << c.m << '\n'
      << "mu: [" << c.mu_bound.lo << ", " << c.mu_bound.hi << "]"
      << (c.mu_bound.resolved_exactly ? " (exact)" : "") << '\n'
      << "mu_comp: [" << c.mu_comp_bound.lo << ", " << c.mu_comp_bound.hi << "]"
      << (c.mu_comp_bound.resolved_exactly ? " (exact)" : "") << '\n'
      << "mu vs n-2: " << relation_text(c.thm1_relation) << '\n'
      << "mu_comp vs sqrt(n-1): " << relation_text(c.thm2_path_relation) << '\n'
      << "mu_comp vs sqrt(n-2): " << relation_text(c.thm2_cycle_relation) << '\n'
      << "thm1_path: " << to_string(c.thm1_path) << '\n'
      << "thm1_cycle: " << to_string(c.thm1_cycle) << '\n'
      << "thm2_path: " << to_string(c.thm2_path) << '\n'
      << "thm2_cycle: " << to_string(c.thm2_cycle) << '\n'
      << "ore_path: " << to_string(c.ore_path) << '\n'
      << "ore_cycle: " << to_string(c.ore_cycle) << '\n'
      << "fact1: " << to_string(c.fact1) << '\n'
      << "extremal: " << to_string(c.extremal) << '\n'
      << "oracle_path: " << bool_text(c.oracle_path) << '\n'
      << "oracle_cycle: " << bool_text(c.oracle_cycle) << '\n'
      << "consistent: " << bool_text(c.consistent) << '\n';
}

int certificate_exit(const Certificate& c) {
  return c.consistent == false ? kExitCounterexample : kExitSuccess;
}

std::set<Property> parse_properties(const std::vector<std::string>& names) {
  std::set<Property> out;
  for (const auto& name : names) {
    auto p = property_from_string(name);
    if (!p) throw CLI::ValidationError("--properties", "unknown property '" + name + "'");
    out.insert(*p);
  }
  return out;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral and degree conditions for Hamiltonian paths and cycles", "hamcert"};
  app.require_subcommand(1);

  double tolerance = kDefaultTolerance;
  int oracle_cap = 20;
  bool as_json = false;

  auto* check = app.add_subcommand("check", "Certify one graph given in graph6");
  std::string graph6_word;
  check->add_option("graph6", graph6_word, "graph6 word")->required();
  check->add_flag("--json", as_json, "Print the certificate as JSON");
  check->add_option("--tolerance", tolerance, "Spectral interval width")->check(CLI::PositiveNumber);
  check->add_option("--oracle-cap", oracle_cap, "Largest order sent to the exact oracle")
      ->check(CLI::Range(0, 24));

  auto* verify = app.add_subcommand("verify", "Exhaustive or corpus sweep");
  int order = 0;
  std::string corpus;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string out_path;
  std::uint64_t seed = 0;
  std::vector<std::string> property_names;
  auto* n_opt = verify->add_option("--n", order, "Order for exhaustive labeled enumeration");
  auto* file_opt = verify->add_option("--file", corpus, "graph6 corpus file");
  n_opt->excludes(file_opt);
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "Write the JSON-lines report here instead of stdout");
  verify->add_option("--tolerance", tolerance, "Spectral interval width")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Seed for randomized closure orders");
  verify->add_option("--oracle-cap", oracle_cap, "Largest order sent to the exact oracle")
      ->check(CLI::Range(0, 24));
  verify->add_option("--properties", property_names, "Subset of properties to check")
      ->delimiter(',');

  auto* extremal = app.add_subcommand("extremal", "Print K_{n-1}+v or K_{n-1}+e and its certificate");
  std::string kind = "v";
  extremal->add_option("--n", order, "Order")->required();
  extremal->add_option("--kind", kind, "v for K_{n-1}+v, e for K_{n-1}+e")
      ->check(CLI::IsMember({"v", "e"}));
  extremal->add_flag("--json", as_json, "Print the certificate as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (check->parsed()) {
      const Graph g = graph6_decode(graph6_word);
      const Certificate c = certify(g, true, {tolerance, oracle_cap});
      print_certificate(c, as_json, out);
      return certificate_exit(c);
    }

    if (extremal->parsed()) {
      const Graph g = make_named(
          kind == "v" ? NamedKind::clique_plus_isolated : NamedKind::clique_plus_pendant, order);
      out << graph6_encode(g) << '\n';
      const Certificate c = certify(g, true, {tolerance, oracle_cap});
      print_certificate(c, as_json, out);
      return certificate_exit(c);
    }

    if (n_opt->count() == 0 && file_opt->count() == 0) {
      err << "verify: one of --n or --file is required\n";
      return kExitUsage;
    }
    SweepConfig config;
    if (file_opt->count()) {
      config.mode = SweepMode::corpus;
      config.corpus_path = corpus;
    } else {
      config.mode = SweepMode::exhaustive;
      config.n = order;
    }
    config.jobs = jobs;
    config.tolerance = tolerance;
    config.seed = seed;
    config.oracle_cap = oracle_cap;
    config.output_path = out_path;
    if (!property_names.empty()) config.properties = parse_properties(property_names);
    validate(config);

    const SweepReport report = run_sweep(config);
    if (out_path.empty()) {
      write_report(report, out);
    } else {
      std::ofstream file(out_path);
      if (!file) {
        err << "cannot write " << out_path << '\n';
        return kExitUsage;
      }
      write_report(report, file);
    }
    err << report.source << ": " << report.graphs_checked << " graphs, "
        << report.counterexamples.size() << " counterexamples, "
        << report.equality_boundary_cases.size() << " boundary cases, "
        << report.input_errors.size() << " input errors\n";
    return report.passed() ? kExitSuccess : kExitCounterexample;
  } catch (const CLI::Error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hamcert
