#include <doctest.h>

#include <stdexcept>

#include "hamcert/certify.hpp"
#include "hamcert/harness.hpp"

using namespace hamcert;

TEST_CASE("apply_theorem1 verdicts") {
  const auto k5 = apply_theorem1(make_named(NamedKind::complete, 5));
  CHECK(k5.path == Verdict::guaranteed);
  CHECK(k5.cycle == Verdict::guaranteed);

  const auto kv = apply_theorem1(make_named(NamedKind::clique_plus_isolated, 6));
  CHECK(kv.path == Verdict::exceptional);
  CHECK(kv.cycle == Verdict::inconclusive);

  const auto ke = apply_theorem1(make_named(NamedKind::clique_plus_pendant, 6));
  CHECK(ke.path == Verdict::guaranteed);
  CHECK(ke.cycle == Verdict::exceptional);

  const auto c6 = apply_theorem1(make_named(NamedKind::cycle, 6));
  CHECK(c6.path == Verdict::inconclusive);
  CHECK(c6.cycle == Verdict::inconclusive);

  CHECK_THROWS_AS(apply_theorem1(make_named(NamedKind::complete, 2)), std::invalid_argument);
}

TEST_CASE("apply_theorem2 verdicts") {
  const auto k6 = apply_theorem2(make_named(NamedKind::complete, 6));
  CHECK(k6.path == Verdict::guaranteed);
  CHECK(k6.cycle == Verdict::guaranteed);

  // complement is K_{1,4}, mu = 2 = sqrt(n-1)
  const auto kv = apply_theorem2(make_named(NamedKind::clique_plus_isolated, 5));
  CHECK(kv.path == Verdict::exceptional);
  CHECK(kv.cycle == Verdict::inconclusive);

  // complement is K_{1,3} plus an isolated vertex, mu = sqrt(3) = sqrt(n-2)
  const auto ke = apply_theorem2(make_named(NamedKind::clique_plus_pendant, 5));
  CHECK(ke.cycle == Verdict::exceptional);
  CHECK(ke.path == Verdict::guaranteed);

  CHECK_THROWS_AS(apply_theorem2(make_named(NamedKind::complete, 2)), std::invalid_argument);
}

TEST_CASE("certificate examples") {
  const auto c5 = certify(make_named(NamedKind::cycle, 5), true);
  CHECK(c5.thm1_path == Verdict::inconclusive);
  CHECK(c5.thm1_cycle == Verdict::inconclusive);
  // the complement of C_5 is C_5, so mu(complement) = 2 = sqrt(n-1)
  CHECK(c5.thm2_path == Verdict::guaranteed);
  CHECK(c5.thm2_path_relation == Relation::equal);
  CHECK(c5.thm2_cycle == Verdict::inconclusive);
  CHECK(c5.fact1 == EdgeCountVerdict::inconclusive);
  CHECK(c5.oracle_cycle == true);
  CHECK(c5.consistent == true);
  CHECK(c5.mu_bound.contains(2.0));
  CHECK(c5.mu_comp_bound.contains(2.0));

  const auto k6 = certify(make_named(NamedKind::complete, 6), true);
  CHECK(k6.thm1_path == Verdict::guaranteed);
  CHECK(k6.thm1_cycle == Verdict::guaranteed);
  CHECK(k6.thm2_path == Verdict::guaranteed);
  CHECK(k6.thm2_cycle == Verdict::guaranteed);
  CHECK(k6.ore_path == Verdict::guaranteed);
  CHECK(k6.ore_cycle == Verdict::guaranteed);
  CHECK(k6.fact1 == EdgeCountVerdict::cycle_guaranteed);
  CHECK(k6.consistent == true);

  const auto kv7 = certify(make_named(NamedKind::clique_plus_isolated, 7), true);
  CHECK(kv7.thm1_path == Verdict::exceptional);
  CHECK(kv7.thm2_path == Verdict::exceptional);
  CHECK(kv7.oracle_path == false);
  CHECK(kv7.consistent == true);
  CHECK(kv7.extremal == Extremal::clique_plus_isolated);
  CHECK(kv7.mu_bound.resolved_exactly);
  CHECK(kv7.mu_comp_bound.resolved_exactly);
}

TEST_CASE("certificate without oracle and for tiny graphs") {
  const auto c = certify(make_named(NamedKind::complete, 22), true);
  CHECK_FALSE(c.oracle_path.has_value());
  CHECK_FALSE(c.consistent.has_value());
  CHECK(c.thm1_cycle == Verdict::guaranteed);

  const auto k1 = certify(make_named(NamedKind::complete, 1), true);
  CHECK(k1.oracle_path == true);
  CHECK(k1.oracle_cycle == false);
  CHECK(k1.thm1_path == Verdict::inconclusive);
  CHECK(k1.consistent == true);

  const auto k2 = certify(make_named(NamedKind::complete, 2), true);
  CHECK(k2.fact1 == EdgeCountVerdict::path_guaranteed);
  CHECK(k2.ore_cycle == Verdict::inconclusive);
  CHECK(k2.consistent == true);
}

TEST_CASE("consistency flags a contradicted guarantee") {
  Certificate c = certify(make_named(NamedKind::cycle, 5), true);
  c.thm1_cycle = Verdict::guaranteed;
  c.oracle_cycle = false;
  CHECK(check_consistency(c) == false);
  c.thm1_cycle = Verdict::exceptional;
  CHECK(check_consistency(c) == true);
  c.oracle_cycle = true;
  CHECK(check_consistency(c) == false);
}

TEST_CASE("certificate JSON schema") {
  const auto j = to_json(certify(make_named(NamedKind::clique_plus_isolated, 6), true));
  for (const char* key : {"n", "m", "mu_bound", "mu_comp_bound", "thm1_path", "thm1_cycle",
                          "thm2_path", "thm2_cycle", "ore", "fact1", "extremal", "oracle_path",
                          "oracle_cycle", "consistent"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK(j["n"] == 6);
  CHECK(j["m"] == 10);
  CHECK(j["thm1_path"] == "exceptional");
  CHECK(j["fact1"] == "exceptional_path");
  CHECK(j["extremal"] == "K_{n-1}+v");
  CHECK(j["mu_bound"]["lo"].get<double>() <= 4.0);
  CHECK(j["mu_bound"]["hi"].get<double>() >= 4.0);
  CHECK(j["mu_bound"]["resolved_exactly"] == true);
  CHECK(j["oracle_path"] == false);
  CHECK(j["consistent"] == true);
  CHECK(j["ore"]["path"] == "inconclusive");

  const auto big = to_json(certify(make_named(NamedKind::complete, 22), true));
  CHECK(big["oracle_path"].is_null());
  CHECK(big["consistent"].is_null());
}

TEST_CASE("certificates are consistent on all graphs n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    LabeledEnumerator it(n);
    while (auto lg = it.next()) {
      const auto c = certify(lg->graph, true);
      REQUIRE(c.consistent.has_value());
      CHECK(*c.consistent);
      CHECK_FALSE(c.mu_bound.cap_hit);
      CHECK_FALSE(c.mu_comp_bound.cap_hit);
    }
  }
}
