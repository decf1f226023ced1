#include "hamcert/harness.hpp"

#include <algorithm>
#include <bit>
#include <cfloat>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "hamcert/certify.hpp"
#include "hamcert/closure.hpp"
#include "hamcert/graph6.hpp"
#include "hamcert/hamilton.hpp"

namespace hamcert {

namespace {

constexpr double kStanleyEqualityWidth = 1e-9;

struct PropertyName {
  Property property;
  std::string_view name;
};

constexpr PropertyName kPropertyNames[] = {
    {Property::certificate, "certificate"}, {Property::theorem1, "theorem1"},
    {Property::theorem2, "theorem2"},       {Property::stanley, "stanley"},
    {Property::hofmeister, "hofmeister"},   {Property::identity, "identity"},
    {Property::fact1, "fact1"},             {Property::closure, "closure"},
    {Property::order, "order"},             {Property::ore, "ore"},
    {Property::witness, "witness"},
};

// splitmix64 finalizer; decorrelates per-graph seeds.
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Non-isolated vertices form a clique (the empty graph included).
bool is_clique_plus_isolated(const Graph& g) {
  Row support = 0;
  for (int u = 0; u < g.order(); ++u) {
    if (g.row(u)) support |= Row{1} << u;
  }
  for (Row s = support; s; s &= s - 1) {
    const int u = std::countr_zero(s);
    if (g.row(u) != (support & ~(Row{1} << u))) return false;
  }
  return true;
}

class Recorder {
 public:
  Recorder(SweepReport& report, const Graph& g, std::uint64_t index)
      : report_(report), g_(g), index_(index) {}

  const std::string& graph6() {
    if (graph6_.empty()) graph6_ = graph6_encode(g_);
    return graph6_;
  }

  void fail(std::string_view property, std::string detail = {}) {
    report_.counterexamples.push_back({index_, graph6(), std::string(property), std::move(detail)});
  }

  void expect(bool ok, std::string_view property, std::string detail = {}) {
    if (!ok) fail(property, std::move(detail));
  }

  void boundary(std::string_view which) {
    report_.equality_boundary_cases.push_back({index_, graph6(), std::string(which)});
  }

  void count(const std::string& key) { ++report_.counts[key]; }

 private:
  SweepReport& report_;
  const Graph& g_;
  std::uint64_t index_;
  std::string graph6_;
};

void merge_into(SweepReport& total, SweepReport&& part) {
  total.graphs_checked += part.graphs_checked;
  for (const auto& [k, v] : part.counts) total.counts[k] += v;
  std::move(part.counterexamples.begin(), part.counterexamples.end(),
            std::back_inserter(total.counterexamples));
  std::move(part.equality_boundary_cases.begin(), part.equality_boundary_cases.end(),
            std::back_inserter(total.equality_boundary_cases));
  std::move(part.input_errors.begin(), part.input_errors.end(),
            std::back_inserter(total.input_errors));
}

void sort_report(SweepReport& r) {
  std::sort(r.counterexamples.begin(), r.counterexamples.end(), [](const auto& a, const auto& b) {
    return std::tie(a.index, a.property, a.detail) < std::tie(b.index, b.property, b.detail);
  });
  std::sort(r.equality_boundary_cases.begin(), r.equality_boundary_cases.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.index, a.boundary) < std::tie(b.index, b.boundary);
            });
  std::sort(r.input_errors.begin(), r.input_errors.end(),
            [](const auto& a, const auto& b) { return a.line < b.line; });
}

template <typename Worker>
void run_parallel(int jobs, SweepReport& total, Worker&& worker) {
  std::vector<SweepReport> parts(static_cast<std::size_t>(jobs));
  if (jobs == 1) {
    worker(0, parts[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(parts.size());
    for (int s = 0; s < jobs; ++s) threads.emplace_back([&, s] { worker(s, parts[s]); });
    for (auto& t : threads) t.join();
  }
  for (auto& p : parts) merge_into(total, std::move(p));
}

std::string format_pair(int u, int v, int sum) {
  std::ostringstream os;
  os << "pair (" << u << "," << v << ") degree sum " << sum;
  return os.str();
}

}  // namespace

std::string_view to_string(Property p) noexcept {
  for (const auto& entry : kPropertyNames) {
    if (entry.property == p) return entry.name;
  }
  return "?";
}

std::optional<Property> property_from_string(std::string_view name) {
  for (const auto& entry : kPropertyNames) {
    if (entry.name == name) return entry.property;
  }
  return std::nullopt;
}

std::set<Property> all_properties() {
  std::set<Property> out;
  for (const auto& entry : kPropertyNames) out.insert(entry.property);
  return out;
}

void validate(const SweepConfig& config) {
  if (config.jobs < 1) throw std::invalid_argument("job count must be at least 1");
  if (!(config.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (config.mode == SweepMode::exhaustive) {
    if (config.n < 1 || config.n > kMaxExhaustiveOrder) {
      throw std::invalid_argument("exhaustive sweep supports 1 <= n <= " +
                                  std::to_string(kMaxExhaustiveOrder) +
                                  "; use a graph6 corpus for larger orders");
    }
  } else if (config.corpus_path.empty()) {
    throw std::invalid_argument("corpus sweep needs a file path");
  }
  if (config.order_trials < 2) throw std::invalid_argument("order trials must be at least 2");
}

void check_graph(const Graph& g, std::uint64_t index, const SweepConfig& config,
                 SweepReport& report) {
  const auto& props = config.properties;
  auto wants = [&props](Property p) { return props.count(p) != 0; };
  Recorder rec(report, g, index);
  const int n = g.order();
  const long long m = edge_count(g);
  ++report.graphs_checked;

  Certificate cert = certify(g, false, {config.tolerance, config.oracle_cap});

  const bool oracle_ok = n <= config.oracle_cap && n <= kOracleMaxOrder;
  std::optional<HamWitness> path_witness;
  std::optional<HamWitness> cycle_witness;
  if (oracle_ok) {
    path_witness = has_ham_path(g);
    cycle_witness = has_ham_cycle(g);
    cert.oracle_path = path_witness.has_value();
    cert.oracle_cycle = cycle_witness.has_value();
    cert.consistent = check_consistency(cert);
  } else {
    rec.count("oracle_skipped");
  }
  const bool has_path = path_witness.has_value();
  const bool has_cycle = cycle_witness.has_value();

  rec.count("thm1_path." + std::string(to_string(cert.thm1_path)));
  rec.count("thm1_cycle." + std::string(to_string(cert.thm1_cycle)));
  rec.count("thm2_path." + std::string(to_string(cert.thm2_path)));
  rec.count("thm2_cycle." + std::string(to_string(cert.thm2_cycle)));
  rec.count("ore_path." + std::string(to_string(cert.ore_path)));
  rec.count("ore_cycle." + std::string(to_string(cert.ore_cycle)));
  rec.count("fact1." + std::string(to_string(cert.fact1)));
  if (cert.extremal != Extremal::none) rec.count("extremal." + std::string(to_string(cert.extremal)));
  if (oracle_ok) {
    rec.count(has_path ? "oracle_path.yes" : "oracle_path.no");
    rec.count(has_cycle ? "oracle_cycle.yes" : "oracle_cycle.no");
  }
  if (cert.mu_bound.cap_hit || cert.mu_comp_bound.cap_hit) rec.count("spectral_cap_hit");
  if (cert.mu_bound.resolved_exactly || cert.mu_comp_bound.resolved_exactly) {
    rec.count("resolved_exactly");
  }

  if (cert.thm1_relation == Relation::equal) rec.boundary("mu=n-2");
  if (cert.thm2_path_relation == Relation::equal) rec.boundary("mu_comp=sqrt(n-1)");
  if (cert.thm2_cycle_relation == Relation::equal) rec.boundary("mu_comp=sqrt(n-2)");

  if (wants(Property::certificate) && oracle_ok) {
    rec.expect(cert.consistent.value_or(false), "certificate_consistency");
  }

  if (oracle_ok && n >= 3) {
    if (wants(Property::theorem1)) {
      const Relation r = *cert.thm1_relation;
      if (r != Relation::below && !has_path) {
        rec.count("thm1.path_condition_without_path");
        rec.expect(cert.extremal == Extremal::clique_plus_isolated, "theorem1_path",
                   "mu >= n-2 without Hamiltonian path");
      }
      if (r == Relation::above && !has_cycle) {
        rec.count("thm1.cycle_condition_without_cycle");
        rec.expect(cert.extremal == Extremal::clique_plus_pendant, "theorem1_cycle",
                   "mu > n-2 without Hamiltonian cycle");
      }
    }
    if (wants(Property::theorem2)) {
      if (*cert.thm2_path_relation != Relation::above && !has_path) {
        rec.count("thm2.path_condition_without_path");
        rec.expect(cert.extremal == Extremal::clique_plus_isolated, "theorem2_path",
                   "mu(complement) <= sqrt(n-1) without Hamiltonian path");
      }
      if (*cert.thm2_cycle_relation != Relation::above && !has_cycle) {
        rec.count("thm2.cycle_condition_without_cycle");
        rec.expect(cert.extremal == Extremal::clique_plus_pendant, "theorem2_cycle",
                   "mu(complement) <= sqrt(n-2) without Hamiltonian cycle");
      }
    }
  }

  if (wants(Property::stanley)) {
    const double bound = stanley_bound(m);
    // allow one rounding of the square root
    rec.expect(bound * (1.0 + 4 * DBL_EPSILON) >= cert.mu_bound.lo, "stanley_bound",
               "lo exceeds -1/2 + sqrt(2m + 1/4)");
    if (cert.mu_bound.width() <= kStanleyEqualityWidth) {
      const bool numeric_equality = cert.mu_bound.hi + kStanleyEqualityWidth >= bound;
      const bool structural = is_clique_plus_isolated(g);
      if (structural) rec.count("stanley.equality");
      rec.expect(numeric_equality == structural, "stanley_equality_class",
                 structural ? "clique plus isolated vertices misses equality"
                            : "equality outside cliques plus isolated vertices");
    } else {
      rec.count("stanley.width_too_wide");
    }
  }

  if (wants(Property::hofmeister)) {
    rec.expect(hofmeister_check(g, cert.mu_bound).holds, "hofmeister", "graph");
    rec.expect(hofmeister_check(complement(g), cert.mu_comp_bound).holds, "hofmeister",
               "complement");
  }

  if (wants(Property::identity)) {
    const auto id = degree_square_edge_identity_check(g);
    rec.expect(id.holds, "degree_square_identity",
               std::to_string(id.degree_square_sum) + " != " + std::to_string(id.edge_degree_sum));
  }

  if (wants(Property::fact1) && oracle_ok && n >= 2) {
    const long long threshold = binomial2(n - 1);
    const SmallException small = recognize_small_exception(g);
    if (m >= threshold && !has_path) {
      if (small == SmallException::star_k13) {
        rec.count("fact1.small_exception_path");
      } else {
        rec.expect(cert.extremal == Extremal::clique_plus_isolated, "fact1_path");
      }
    }
    if (n >= 3 && m > threshold && !has_cycle) {
      if (small == SmallException::k2_join_3k1) {
        rec.count("fact1.small_exception_cycle");
      } else {
        rec.expect(cert.extremal == Extremal::clique_plus_pendant, "fact1_cycle");
      }
    }
  }

  if (wants(Property::closure) && n >= 2) {
    const ClosureResult path_closure = k_closure(g, n - 1);
    const ClosureResult cycle_closure = k_closure(g, n);
    for (const ClosureResult* c : {&path_closure, &cycle_closure}) {
      const std::string k = std::to_string(c->k);
      if (auto bad = main_property_check(*c)) {
        rec.fail("closure_main_property", "k=" + k + " " + format_pair(bad->u, bad->v, bad->degree_sum));
      }
      rec.expect(k_closure(c->closed, c->k).added.empty(), "closure_idempotence", "k=" + k);
      rec.expect(g.is_subgraph_of(c->closed), "closure_containment", "k=" + k);
    }
    if (oracle_ok) {
      rec.expect(has_ham_path(path_closure.closed).has_value() == has_path, "fact2_closure_path");
      rec.expect(has_ham_cycle(cycle_closure.closed).has_value() == has_cycle,
                 "fact3_closure_cycle");
    }
    // The closure edge counts that the complement-spectrum argument derives.
    if (n >= 3) {
      const long long threshold = binomial2(n - 1);
      if (cert.thm2_path_relation != Relation::above) {
        rec.expect(edge_count(path_closure.closed) >= threshold, "thm2_closure_edges_path");
      }
      if (cert.thm2_cycle_relation != Relation::above) {
        rec.expect(edge_count(cycle_closure.closed) > threshold, "thm2_closure_edges_cycle");
      }
    }
  }

  if (wants(Property::order) && n >= 2 && n <= config.order_max_n) {
    for (int k : {n - 1, n}) {
      const std::uint64_t seed = mix(config.seed ^ mix(index * 2 + static_cast<std::uint64_t>(k - n + 1)));
      const auto r = closure_order_independence_check(g, k, config.order_trials, seed);
      rec.expect(r.holds, "closure_order_independence", "k=" + std::to_string(k));
    }
  }

  if (wants(Property::ore) && oracle_ok) {
    if (ore_condition(g, false).satisfied) rec.expect(has_path, "ore_path");
    if (n >= 3 && ore_condition(g, true).satisfied) rec.expect(has_cycle, "ore_cycle");
  }

  if (wants(Property::witness) && oracle_ok) {
    if (path_witness) rec.expect(witness_is_valid(g, *path_witness), "witness_path");
    if (cycle_witness) {
      rec.expect(witness_is_valid(g, *cycle_witness), "witness_cycle");
      rec.expect(has_path, "cycle_implies_path");
    }
  }
}

SweepReport run_sweep(const SweepConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.config = config;

  if (config.mode == SweepMode::exhaustive) {
    report.source = "exhaustive n=" + std::to_string(config.n);
    const auto total = static_cast<std::uint64_t>(config.jobs);
    run_parallel(config.jobs, report, [&](int s, SweepReport& part) {
      LabeledEnumerator it(config.n, {static_cast<std::uint64_t>(s), total});
      while (auto lg = it.next()) check_graph(lg->graph, lg->pattern, config, part);
    });
  } else {
    report.source = config.corpus_path;
    std::ifstream in(config.corpus_path);
    if (!in) throw std::runtime_error("cannot read corpus file " + config.corpus_path);
    std::vector<std::pair<std::uint64_t, std::string>> lines;
    std::string line;
    for (std::uint64_t number = 1; std::getline(in, line); ++number) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.starts_with(kGraph6Header)) line.erase(0, kGraph6Header.size());
      if (line.empty()) continue;
      lines.emplace_back(number, std::move(line));
    }
    const auto total = static_cast<std::size_t>(config.jobs);
    run_parallel(config.jobs, report, [&](int s, SweepReport& part) {
      for (std::size_t i = static_cast<std::size_t>(s); i < lines.size(); i += total) {
        const auto& [number, text] = lines[i];
        try {
          check_graph(graph6_decode(text), number, config, part);
        } catch (const Graph6Error& e) {
          part.input_errors.push_back({number, e.what()});
        }
      }
    });
  }

  sort_report(report);
  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json summary_json(const SweepReport& report) {
  const SweepConfig& c = report.config;
  nlohmann::json props = nlohmann::json::array();
  for (Property p : c.properties) props.push_back(std::string(to_string(p)));
  nlohmann::json config = {
      {"mode", c.mode == SweepMode::exhaustive ? "exhaustive" : "corpus"},
      {"oracle_cap", c.oracle_cap},
      {"tolerance", c.tolerance},
      {"jobs", c.jobs},
      {"seed", c.seed},
      {"properties", props},
      {"order_trials", c.order_trials},
      {"order_max_n", c.order_max_n},
  };
  if (c.mode == SweepMode::exhaustive) {
    config["n"] = c.n;
  } else {
    config["file"] = c.corpus_path;
  }
  return {
      {"type", "summary"},
      {"source", report.source},
      {"passed", report.passed()},
      {"graphs_checked", report.graphs_checked},
      {"counts", report.counts},
      {"equality_boundary_cases", report.equality_boundary_cases.size()},
      {"counterexamples", report.counterexamples.size()},
      {"input_errors", report.input_errors.size()},
      {"wall_time", report.wall_time},
      {"config", config},
  };
}

void write_report(const SweepReport& report, std::ostream& out) {
  for (const auto& b : report.equality_boundary_cases) {
    out << nlohmann::json{{"type", "boundary"}, {"index", b.index}, {"graph6", b.graph6},
                          {"boundary", b.boundary}}
        << '\n';
  }
  for (const auto& c : report.counterexamples) {
    out << nlohmann::json{{"type", "counterexample"}, {"index", c.index}, {"graph6", c.graph6},
                          {"property", c.property}, {"detail", c.detail}}
        << '\n';
  }
  for (const auto& e : report.input_errors) {
    out << nlohmann::json{{"type", "input_error"}, {"line", e.line}, {"message", e.message}}
        << '\n';
  }
  out << summary_json(report) << '\n';
}

}  // namespace hamcert
