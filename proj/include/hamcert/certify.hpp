#pragma once

#include <optional>
#include <string_view>

#include <json.hpp>

#include "hamcert/graph.hpp"
#include "hamcert/hamilton.hpp"
#include "hamcert/spectral.hpp"

namespace hamcert {

enum class Verdict { guaranteed, exceptional, inconclusive };

struct TheoremVerdict {
  Verdict path = Verdict::inconclusive;
  Verdict cycle = Verdict::inconclusive;
};

/// mu(G) >= n-2 gives a path unless K_{n-1}+v; mu(G) > n-2 gives a cycle
/// unless K_{n-1}+e. Requires n >= 3.
TheoremVerdict apply_theorem1(const Graph& g);
TheoremVerdict apply_theorem1(const Graph& g, const ThresholdComparison& mu_vs_n_minus_2);

/// mu(complement) <= sqrt(n-1) gives a path unless K_{n-1}+v;
/// mu(complement) <= sqrt(n-2) gives a cycle unless K_{n-1}+e. Requires n >= 3.
TheoremVerdict apply_theorem2(const Graph& g);
TheoremVerdict apply_theorem2(const Graph& g, const ThresholdComparison& comp_vs_sqrt_n_minus_1,
                              const ThresholdComparison& comp_vs_sqrt_n_minus_2);

struct CertifyOptions {
  double tolerance = kDefaultTolerance;
  int oracle_cap = 20;
};

struct Certificate {
  int n = 0;
  long long m = 0;
  SpectralBound mu_bound;
  SpectralBound mu_comp_bound;
  Verdict thm1_path = Verdict::inconclusive;
  Verdict thm1_cycle = Verdict::inconclusive;
  Verdict thm2_path = Verdict::inconclusive;
  Verdict thm2_cycle = Verdict::inconclusive;
  Verdict ore_path = Verdict::inconclusive;
  Verdict ore_cycle = Verdict::inconclusive;
  EdgeCountVerdict fact1 = EdgeCountVerdict::inconclusive;
  Extremal extremal = Extremal::none;
  std::optional<bool> oracle_path;
  std::optional<bool> oracle_cycle;
  std::optional<bool> consistent;

  // Exact threshold relations behind the theorem verdicts (absent for n < 3).
  std::optional<Relation> thm1_relation;       // mu(G) vs n-2
  std::optional<Relation> thm2_path_relation;  // mu(comp) vs sqrt(n-1)
  std::optional<Relation> thm2_cycle_relation; // mu(comp) vs sqrt(n-2)
};

Certificate certify(const Graph& g, bool run_oracle, const CertifyOptions& options = {});

/// Recomputes `consistent` from the verdicts and the oracle fields.
std::optional<bool> check_consistency(const Certificate& c);

nlohmann::json to_json(const SpectralBound& b);
nlohmann::json to_json(const Certificate& c);

std::string_view to_string(Verdict v) noexcept;

}  // namespace hamcert
