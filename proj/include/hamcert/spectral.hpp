#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "hamcert/graph.hpp"

namespace hamcert {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr long kDefaultIterationCap = 1'000'000;

/// Below this interval width a threshold comparison stops iterating and
/// falls back to exact integer arithmetic.
inline constexpr double kTieWidth = 1e-12;

/// Closed interval certified to contain the adjacency spectral radius.
struct SpectralBound {
  double lo = 0.0;
  double hi = 0.0;
  long iterations = 0;
  bool resolved_exactly = false;
  bool cap_hit = false;

  double width() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

enum class Relation { below, equal, above };
enum class ThresholdKind { integer, square_root };

/// Exact trichotomy of mu against t (integer kind) or sqrt(t) (square_root kind).
struct ThresholdComparison {
  Relation relation = Relation::below;
  ThresholdKind kind = ThresholdKind::integer;
  std::int64_t threshold = 0;
  bool resolved_exactly = false;
  SpectralBound bound;
};

/// Collatz-Wielandt power iteration run per connected component.
///
/// Each component iterates x <- (A + I)x / max from the all-ones vector; the
/// shift keeps bipartite components from oscillating while leaving the
/// quotients (Ax)_i / x_i unchanged. Every quotient pair is widened outward
/// by the worst-case floating point error of its evaluation, so each
/// iteration's interval is rigorous and the estimator keeps the tightest
/// lo and hi seen so far. Regular components and isolated vertices are
/// resolved without iterating.
class RadiusEstimator {
 public:
  explicit RadiusEstimator(const Graph& g, long max_iterations = kDefaultIterationCap);

  const Graph& graph() const noexcept { return graph_; }
  SpectralBound bound() const;

  /// Iterates until done(bound()) is true, the width cannot shrink any
  /// further, or the iteration cap is reached.
  SpectralBound refine_until(const std::function<bool(const SpectralBound&)>& done);
  SpectralBound refine(double tol);

  /// True once no component can be refined further.
  bool exhausted() const noexcept;

 private:
  struct Component {
    int size = 0;
    std::vector<Row> rows;  // local labels
    std::vector<double> x;
    std::vector<double> next;
    double lo = 0.0;
    double hi = 0.0;
    bool settled = false;
    long since_improvement = 0;
    int restarts = 0;
  };

  void step(Component& c);
  void restart(Component& c);

  Graph graph_;
  long max_iterations_;
  long iterations_ = 0;
  std::vector<Component> components_;
};

SpectralBound spectral_radius_bound(const Graph& g, double tol = kDefaultTolerance);

ThresholdComparison compare_to_integer_threshold(const Graph& g, std::int64_t t);
ThresholdComparison compare_to_sqrt_threshold(const Graph& g, std::int64_t s);

/// Same as above but reuse (and further refine) an existing estimator.
ThresholdComparison compare_to_integer_threshold(RadiusEstimator& est, std::int64_t t);
ThresholdComparison compare_to_sqrt_threshold(RadiusEstimator& est, std::int64_t s);

/// -1/2 + sqrt(2m + 1/4), an upper bound on mu for any graph with m edges.
double stanley_bound(long long m);

struct HofmeisterResult {
  bool holds = true;
  long double lhs_upper = 0;  // n * hi^2
  long long degree_square_sum = 0;
};

/// n * mu^2 >= sum of squared degrees, checked with the certified upper
/// bound; `holds == false` is a true violation certificate.
HofmeisterResult hofmeister_check(const Graph& g, const SpectralBound& bound);
HofmeisterResult hofmeister_check(const Graph& g);

struct IdentityResult {
  bool holds = true;
  long long degree_square_sum = 0;
  long long edge_degree_sum = 0;
};

/// Sum of d(v)^2 over vertices against sum of d(u)+d(v) over edges, exact.
IdentityResult degree_square_edge_identity_check(const Graph& g);

std::string_view to_string(Relation r) noexcept;

}  // namespace hamcert
