#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hamcert/harness.hpp"
#include "hamcert/spectral.hpp"
#include "oracles.hpp"

using namespace hamcert;

namespace {

Graph star_plus_leaf_edge(int n) { return make_named(NamedKind::star, n).with_edge(1, 2); }

}  // namespace

TEST_CASE("spectral bound examples") {
  const auto k5 = spectral_radius_bound(make_named(NamedKind::complete, 5), 1e-12);
  CHECK(k5.contains(4.0));
  CHECK(k5.width() <= 1e-12);

  const auto star = spectral_radius_bound(make_named(NamedKind::star, 5), 1e-12);
  CHECK(star.contains(2.0));
  CHECK(star.width() <= 1e-12);

  // P_3: lambda^3 - 2 lambda, largest root sqrt(2)
  const auto p3 = spectral_radius_bound(make_named(NamedKind::path, 3), 1e-12);
  CHECK(p3.contains(std::sqrt(2.0)));
  CHECK(p3.width() <= 1e-12);
  CHECK(p3.lo == doctest::Approx(1.41421356).epsilon(1e-8));

  const auto empty = spectral_radius_bound(make_named(NamedKind::empty, 6), 1e-12);
  CHECK(empty.lo == 0.0);
  CHECK(empty.hi == 0.0);

  CHECK_THROWS_AS(spectral_radius_bound(make_named(NamedKind::path, 3), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(spectral_radius_bound(make_named(NamedKind::path, 3), -1.0), std::invalid_argument);
}

TEST_CASE("bipartite and disconnected graphs converge") {
  // even cycle and path oscillate under plain power iteration
  for (int n : {4, 6, 8, 20}) {
    const auto c = spectral_radius_bound(make_named(NamedKind::cycle, n), 1e-12);
    CHECK(c.contains(2.0));
    const auto p = spectral_radius_bound(make_named(NamedKind::path, n), 1e-12);
    CHECK(p.width() <= 1e-12);
    CHECK(p.contains(2.0 * std::cos(M_PI / (n + 1))));
  }
  // K_4 plus P_3: the clique dominates
  const Graph g = Graph::from_edges(7, std::vector<std::pair<int, int>>{
                                           {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {5, 6}});
  const auto b = spectral_radius_bound(g, 1e-12);
  CHECK(b.contains(3.0));
}

TEST_CASE("certified containment against a dense eigensolver") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(n, std::uniform_real_distribution<>(0.05, 0.95)(rng), rng);
    const auto b = spectral_radius_bound(g, 1e-12);
    const double mu = oracle::dense_spectral_radius(g);
    CHECK(b.lo <= b.hi);
    CHECK_FALSE(b.cap_hit);
    CHECK(b.width() <= 1e-12);
    CHECK(b.lo <= mu + 1e-10);
    CHECK(mu <= b.hi + 1e-10);

    // Rayleigh quotients of arbitrary vectors never exceed hi
    std::vector<double> x(n);
    for (auto& v : x) v = std::uniform_real_distribution<>(-1, 1)(rng);
    double num = 0;
    double den = 0;
    for (int i = 0; i < n; ++i) {
      den += x[i] * x[i];
      for (int j = 0; j < n; ++j) {
        if (g.adjacent(i, j)) num += x[i] * x[j];
      }
    }
    if (den > 0) CHECK(num / den <= b.hi + 1e-9);
  }
}

TEST_CASE("bounds on larger graphs") {
  std::mt19937_64 rng(8);
  for (int n : {32, 50, 64}) {
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const auto b = spectral_radius_bound(g, 1e-10);
    const double mu = oracle::dense_spectral_radius(g);
    CHECK(b.lo <= mu + 1e-9);
    CHECK(mu <= b.hi + 1e-9);
    CHECK(b.width() <= 1e-10);
  }
  const auto k64 = spectral_radius_bound(make_named(NamedKind::complete, 64));
  CHECK(k64.lo == 63.0);
  CHECK(k64.hi == 63.0);
}

TEST_CASE("monotone under subgraphs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const Graph big = oracle::random_graph(n, 0.6, rng);
    Graph small = big;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (big.adjacent(u, v) && rng() % 3 == 0) small = small.without_edge(u, v);
      }
    }
    const double tol = 1e-12;
    const auto bs = spectral_radius_bound(small, tol);
    const auto bb = spectral_radius_bound(big, tol);
    CHECK(bs.hi <= bb.hi + tol);
    CHECK(bs.lo <= bb.hi);
  }
}

TEST_CASE("integer threshold comparisons") {
  const auto kv6 = compare_to_integer_threshold(make_named(NamedKind::clique_plus_isolated, 6), 4);
  CHECK(kv6.relation == Relation::equal);
  CHECK(kv6.resolved_exactly);
  CHECK(compare_to_integer_threshold(make_named(NamedKind::complete, 6), 4).relation == Relation::above);
  CHECK(compare_to_integer_threshold(make_named(NamedKind::cycle, 4), 3).relation == Relation::below);
  // K_{n-1}+e strictly exceeds n-2
  CHECK(compare_to_integer_threshold(make_named(NamedKind::clique_plus_pendant, 6), 4).relation ==
        Relation::above);
  // C_4 has eigenvalue 0 and -2 but mu = 2
  CHECK(compare_to_integer_threshold(make_named(NamedKind::cycle, 4), 0).relation == Relation::above);
  CHECK(compare_to_integer_threshold(make_named(NamedKind::empty, 4), 0).relation == Relation::equal);

  for (int n = 3; n <= 12; ++n) {
    const auto c = compare_to_integer_threshold(make_named(NamedKind::clique_plus_isolated, n), n - 2);
    CHECK(c.relation == Relation::equal);
    CHECK(c.resolved_exactly);
    CHECK(c.bound.resolved_exactly);
  }
  CHECK_THROWS_AS(compare_to_integer_threshold(make_named(NamedKind::cycle, 4), -1),
                  std::invalid_argument);
}

TEST_CASE("square-root threshold comparisons") {
  const auto star = compare_to_sqrt_threshold(make_named(NamedKind::star, 5), 4);
  CHECK(star.relation == Relation::equal);
  CHECK(star.resolved_exactly);
  CHECK(compare_to_sqrt_threshold(star_plus_leaf_edge(5), 4).relation == Relation::above);
  CHECK(compare_to_sqrt_threshold(make_named(NamedKind::empty, 5), 4).relation == Relation::below);
  // K_{1,3} plus an isolated vertex sits exactly on sqrt(3)
  CHECK(compare_to_sqrt_threshold(complement(make_named(NamedKind::clique_plus_pendant, 5)), 3)
            .relation == Relation::equal);
  // C_4: A^2 has eigenvalue 4 with multiplicity 2
  CHECK(compare_to_sqrt_threshold(make_named(NamedKind::cycle, 4), 4).relation == Relation::equal);
  CHECK(compare_to_sqrt_threshold(make_named(NamedKind::cycle, 4), 5).relation == Relation::below);

  for (int n = 2; n <= 12; ++n) {
    const auto c = compare_to_sqrt_threshold(make_named(NamedKind::star, n), n - 1);
    CHECK(c.relation == Relation::equal);
    CHECK(c.resolved_exactly);
    if (n >= 4) {
      CHECK(compare_to_sqrt_threshold(star_plus_leaf_edge(n), n - 1).relation == Relation::above);
    }
  }
}

TEST_CASE("exact comparisons agree with the dense eigensolver on all graphs n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    LabeledEnumerator it(n);
    while (auto lg = it.next()) {
      const double mu = oracle::dense_spectral_radius(lg->graph);
      for (std::int64_t t = 0; t <= n; ++t) {
        const Relation r = compare_to_integer_threshold(lg->graph, t).relation;
        if (std::abs(mu - t) > 1e-9) {
          CHECK(r == (mu < t ? Relation::below : Relation::above));
        } else {
          CHECK(r == Relation::equal);
        }
        const Relation rs = compare_to_sqrt_threshold(lg->graph, t).relation;
        const double root = std::sqrt(static_cast<double>(t));
        if (std::abs(mu - root) > 1e-9) {
          CHECK(rs == (mu < root ? Relation::below : Relation::above));
        } else {
          CHECK(rs == Relation::equal);
        }
      }
    }
  }
}

TEST_CASE("Stanley bound") {
  CHECK(stanley_bound(3) == 2.0);
  CHECK(stanley_bound(0) == 0.0);
  CHECK(stanley_bound(10) == 4.0);
  CHECK_THROWS_AS(stanley_bound(-1), std::invalid_argument);

  // equality exactly on cliques plus isolated vertices, n <= 6
  for (int n = 1; n <= 6; ++n) {
    LabeledEnumerator it(n);
    while (auto lg = it.next()) {
      const Graph& g = lg->graph;
      const auto b = spectral_radius_bound(g, 1e-12);
      const double s = stanley_bound(edge_count(g));
      CHECK(s >= b.lo - 1e-12);
      Row support = 0;
      for (int u = 0; u < n; ++u) {
        if (g.row(u)) support |= Row{1} << u;
      }
      bool clique = true;
      for (int u = 0; u < n; ++u) {
        if (g.row(u) && g.row(u) != (support & ~(Row{1} << u))) clique = false;
      }
      CHECK((b.hi + 1e-9 >= s) == clique);
    }
  }
}

TEST_CASE("Hofmeister inequality") {
  const auto k4 = hofmeister_check(make_named(NamedKind::complete, 4));
  CHECK(k4.holds);
  CHECK(k4.degree_square_sum == 36);
  CHECK(static_cast<double>(k4.lhs_upper) == doctest::Approx(36.0));

  const auto star = hofmeister_check(make_named(NamedKind::star, 5));
  CHECK(star.holds);
  CHECK(star.degree_square_sum == 20);
  CHECK(static_cast<double>(star.lhs_upper) == doctest::Approx(20.0));

  const auto p3 = hofmeister_check(make_named(NamedKind::path, 3));
  CHECK(p3.holds);
  CHECK(p3.degree_square_sum == 6);

  // an underestimated bound is reported as a violation
  SpectralBound too_small{1.0, 1.0};
  CHECK_FALSE(hofmeister_check(make_named(NamedKind::complete, 4), too_small).holds);

  for (int n = 1; n <= 6; ++n) {
    LabeledEnumerator it(n);
    while (auto lg = it.next()) CHECK(hofmeister_check(lg->graph).holds);
  }
}

TEST_CASE("degree-square edge identity") {
  const auto c5 = degree_square_edge_identity_check(make_named(NamedKind::cycle, 5));
  CHECK(c5.holds);
  CHECK(c5.degree_square_sum == 20);
  const auto k13 = degree_square_edge_identity_check(make_named(NamedKind::star, 4));
  CHECK(k13.holds);
  CHECK(k13.degree_square_sum == 12);
  CHECK(degree_square_edge_identity_check(make_named(NamedKind::empty, 4)).degree_square_sum == 0);

  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 64);
    CHECK(degree_square_edge_identity_check(oracle::random_graph(n, 0.3, rng)).holds);
  }
}
