#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hamcert/graph.hpp"
#include "hamcert/spectral.hpp"

namespace hamcert {

/// Exhaustive labeled enumeration refuses orders above this.
inline constexpr int kMaxExhaustiveOrder = 8;

struct Shard {
  std::uint64_t index = 0;
  std::uint64_t total = 1;
};

/// Number of labeled graphs on n vertices, 2^C(n,2).
std::uint64_t labeled_count(int n);

/// Graph whose edge set is the bit pattern over pairs (i,j), i < j, taken in
/// row-major order: bit 0 is (0,1), bit 1 is (0,2), ..., bit n-2 is (0,n-1),
/// bit n-1 is (1,2), and so on.
Graph graph_from_pattern(int n, std::uint64_t pattern);

struct LabeledGraph {
  std::uint64_t pattern = 0;
  Graph graph;
};

/// Patterns congruent to shard.index modulo shard.total, in increasing order.
class LabeledEnumerator {
 public:
  LabeledEnumerator(int n, Shard shard = {});

  std::optional<LabeledGraph> next();
  std::uint64_t size() const noexcept;

 private:
  int n_;
  Shard shard_;
  std::uint64_t next_pattern_;
  std::uint64_t end_;
  std::vector<std::pair<int, int>> pairs_;
};

enum class Property {
  certificate,  // certificate consistency against the exact oracle
  theorem1,
  theorem2,
  stanley,
  hofmeister,
  identity,
  fact1,
  closure,      // Facts 2-3, main property, idempotence, closure edge counts
  order,        // closure order independence (small n only)
  ore,
  witness,
};

std::string_view to_string(Property p) noexcept;
std::optional<Property> property_from_string(std::string_view name);
std::set<Property> all_properties();

enum class SweepMode { exhaustive, corpus };

struct SweepConfig {
  SweepMode mode = SweepMode::exhaustive;
  int n = 0;
  std::string corpus_path;
  int oracle_cap = 20;
  double tolerance = kDefaultTolerance;
  int jobs = 1;
  std::uint64_t seed = 0;
  std::set<Property> properties = all_properties();
  std::string output_path;
  int order_trials = 5;
  int order_max_n = 6;
};

/// Throws std::invalid_argument for jobs < 1, tolerance <= 0, or an
/// exhaustive order outside [1, 8].
void validate(const SweepConfig& config);

struct Counterexample {
  std::uint64_t index = 0;  // pattern (exhaustive) or line number (corpus)
  std::string graph6;
  std::string property;
  std::string detail;
};

struct BoundaryCase {
  std::uint64_t index = 0;
  std::string graph6;
  std::string boundary;  // which threshold mu sits exactly on
};

struct InputError {
  std::uint64_t line = 0;
  std::string message;
};

struct SweepReport {
  std::string source;
  std::uint64_t graphs_checked = 0;
  std::map<std::string, std::uint64_t> counts;
  std::vector<BoundaryCase> equality_boundary_cases;
  std::vector<Counterexample> counterexamples;
  std::vector<InputError> input_errors;
  double wall_time = 0.0;
  SweepConfig config;

  bool passed() const noexcept { return counterexamples.empty(); }
};

/// Runs every selected property on every graph; failures are collected,
/// never thrown. Throws std::runtime_error only for an unreadable corpus.
SweepReport run_sweep(const SweepConfig& config);

/// Checks a single graph, appending to `report` (which is not finalized).
void check_graph(const Graph& g, std::uint64_t index, const SweepConfig& config,
                 SweepReport& report);

/// JSON-lines report: one line per boundary case, counterexample and input
/// error, followed by one summary line.
void write_report(const SweepReport& report, std::ostream& out);
nlohmann::json summary_json(const SweepReport& report);

}  // namespace hamcert
