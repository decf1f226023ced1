#include "hamcert/certify.hpp"

#include <stdexcept>

namespace hamcert {

namespace {

void require_order3(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("theorem checks require order >= 3");
}

Verdict downgrade(bool fires, Extremal actual, Extremal exception) {
  if (!fires) return Verdict::inconclusive;
  return actual == exception ? Verdict::exceptional : Verdict::guaranteed;
}

// guaranteed must agree with the oracle saying yes, exceptional with no.
bool agrees(Verdict v, bool truth) {
  switch (v) {
    case Verdict::guaranteed: return truth;
    case Verdict::exceptional: return !truth;
    case Verdict::inconclusive: return true;
  }
  return true;
}

nlohmann::json optional_bool(const std::optional<bool>& b) {
  return b ? nlohmann::json(*b) : nlohmann::json(nullptr);
}

nlohmann::json optional_relation(const std::optional<Relation>& r) {
  return r ? nlohmann::json(std::string(to_string(*r))) : nlohmann::json(nullptr);
}

}  // namespace

TheoremVerdict apply_theorem1(const Graph& g, const ThresholdComparison& mu_vs_n_minus_2) {
  require_order3(g);
  const Extremal ext = recognize_extremal(g);
  const Relation r = mu_vs_n_minus_2.relation;
  return {downgrade(r != Relation::below, ext, Extremal::clique_plus_isolated),
          downgrade(r == Relation::above, ext, Extremal::clique_plus_pendant)};
}

TheoremVerdict apply_theorem1(const Graph& g) {
  require_order3(g);
  return apply_theorem1(g, compare_to_integer_threshold(g, g.order() - 2));
}

TheoremVerdict apply_theorem2(const Graph& g, const ThresholdComparison& comp_vs_sqrt_n_minus_1,
                              const ThresholdComparison& comp_vs_sqrt_n_minus_2) {
  require_order3(g);
  const Extremal ext = recognize_extremal(g);
  return {downgrade(comp_vs_sqrt_n_minus_1.relation != Relation::above, ext,
                    Extremal::clique_plus_isolated),
          downgrade(comp_vs_sqrt_n_minus_2.relation != Relation::above, ext,
                    Extremal::clique_plus_pendant)};
}

TheoremVerdict apply_theorem2(const Graph& g) {
  require_order3(g);
  RadiusEstimator est(complement(g));
  const auto path_cmp = compare_to_sqrt_threshold(est, g.order() - 1);
  const auto cycle_cmp = compare_to_sqrt_threshold(est, g.order() - 2);
  return apply_theorem2(g, path_cmp, cycle_cmp);
}

Certificate certify(const Graph& g, bool run_oracle, const CertifyOptions& options) {
  Certificate c;
  const int n = g.order();
  c.n = n;
  c.m = edge_count(g);
  c.extremal = recognize_extremal(g);

  RadiusEstimator mu(g);
  RadiusEstimator mu_comp(complement(g));
  mu.refine(options.tolerance);
  mu_comp.refine(options.tolerance);

  bool mu_exact = false;
  bool comp_exact = false;
  if (n >= 3) {
    const auto thm1_cmp = compare_to_integer_threshold(mu, n - 2);
    const auto thm1 = apply_theorem1(g, thm1_cmp);
    c.thm1_path = thm1.path;
    c.thm1_cycle = thm1.cycle;
    c.thm1_relation = thm1_cmp.relation;
    mu_exact = thm1_cmp.resolved_exactly;

    const auto path_cmp = compare_to_sqrt_threshold(mu_comp, n - 1);
    const auto cycle_cmp = compare_to_sqrt_threshold(mu_comp, n - 2);
    const auto thm2 = apply_theorem2(g, path_cmp, cycle_cmp);
    c.thm2_path = thm2.path;
    c.thm2_cycle = thm2.cycle;
    c.thm2_path_relation = path_cmp.relation;
    c.thm2_cycle_relation = cycle_cmp.relation;
    comp_exact = path_cmp.resolved_exactly || cycle_cmp.resolved_exactly;
  }

  c.mu_bound = mu.bound();
  c.mu_bound.cap_hit = c.mu_bound.width() > options.tolerance;
  c.mu_bound.resolved_exactly = mu_exact;
  c.mu_comp_bound = mu_comp.bound();
  c.mu_comp_bound.cap_hit = c.mu_comp_bound.width() > options.tolerance;
  c.mu_comp_bound.resolved_exactly = comp_exact;

  if (ore_condition(g, false).satisfied) c.ore_path = Verdict::guaranteed;
  if (n >= 3 && ore_condition(g, true).satisfied) c.ore_cycle = Verdict::guaranteed;
  if (n >= 2) c.fact1 = edge_count_condition(g);

  if (run_oracle && n <= options.oracle_cap && n <= kOracleMaxOrder) {
    c.oracle_path = has_ham_path(g).has_value();
    c.oracle_cycle = has_ham_cycle(g).has_value();
    c.consistent = check_consistency(c);
  }
  return c;
}

std::optional<bool> check_consistency(const Certificate& c) {
  if (!c.oracle_path || !c.oracle_cycle) return std::nullopt;
  const bool path = *c.oracle_path;
  const bool cycle = *c.oracle_cycle;
  bool ok = agrees(c.thm1_path, path) && agrees(c.thm1_cycle, cycle) &&
            agrees(c.thm2_path, path) && agrees(c.thm2_cycle, cycle) &&
            agrees(c.ore_path, path) && agrees(c.ore_cycle, cycle);
  switch (c.fact1) {
    case EdgeCountVerdict::cycle_guaranteed: ok = ok && cycle && path; break;
    case EdgeCountVerdict::path_guaranteed: ok = ok && path; break;
    case EdgeCountVerdict::exceptional_path: ok = ok && !path; break;
    case EdgeCountVerdict::exceptional_cycle: ok = ok && !cycle; break;
    case EdgeCountVerdict::inconclusive: break;
  }
  return ok;
}

nlohmann::json to_json(const SpectralBound& b) {
  return {{"lo", b.lo}, {"hi", b.hi}, {"resolved_exactly", b.resolved_exactly}};
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["n"] = c.n;
  j["m"] = c.m;
  j["mu_bound"] = to_json(c.mu_bound);
  j["mu_comp_bound"] = to_json(c.mu_comp_bound);
  j["thm1_path"] = to_string(c.thm1_path);
  j["thm1_cycle"] = to_string(c.thm1_cycle);
  j["thm2_path"] = to_string(c.thm2_path);
  j["thm2_cycle"] = to_string(c.thm2_cycle);
  j["ore"] = {{"path", to_string(c.ore_path)}, {"cycle", to_string(c.ore_cycle)}};
  j["fact1"] = to_string(c.fact1);
  j["extremal"] = to_string(c.extremal);
  j["oracle_path"] = optional_bool(c.oracle_path);
  j["oracle_cycle"] = optional_bool(c.oracle_cycle);
  j["consistent"] = optional_bool(c.consistent);
  j["relations"] = {{"mu_vs_n_minus_2", optional_relation(c.thm1_relation)},
                    {"mu_comp_vs_sqrt_n_minus_1", optional_relation(c.thm2_path_relation)},
                    {"mu_comp_vs_sqrt_n_minus_2", optional_relation(c.thm2_cycle_relation)}};
  return j;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::guaranteed: return "guaranteed";
    case Verdict::exceptional: return "exceptional";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace hamcert
