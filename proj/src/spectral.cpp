#include "hamcert/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "hamcert/exact.hpp"

namespace hamcert {

namespace {

constexpr double kUnitRoundoff = DBL_EPSILON / 2;
constexpr long kStagnationWindow = 200;
constexpr int kMaxRestarts = 3;
// Extra iterations spent after a nonzero determinant before switching to
// the exact definiteness test.
constexpr long kPostDeterminantBudget = 2000;

double down(double v) { return std::nextafter(v, 0.0); }
double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

exact::IntMatrix negated(exact::IntMatrix m) {
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) m(i, j) = -m(i, j);
  }
  return m;
}

void require_nonnegative(std::int64_t t) {
  if (t < 0) throw std::invalid_argument("threshold must be nonnegative");
}

}  // namespace

RadiusEstimator::RadiusEstimator(const Graph& g, long max_iterations)
    : graph_(g), max_iterations_(max_iterations) {
  for (Row mask : connected_components(g)) {
    Component c;
    c.size = std::popcount(mask);
    std::array<int, Graph::kMaxOrder> local{};
    std::vector<int> members;
    for (Row m = mask; m; m &= m - 1) {
      local[std::countr_zero(m)] = static_cast<int>(members.size());
      members.push_back(std::countr_zero(m));
    }
    c.rows.resize(c.size);
    int max_degree = 0;
    long degree_sum = 0;
    for (int i = 0; i < c.size; ++i) {
      Row local_row = 0;
      for (Row r = g.row(members[i]); r; r &= r - 1) local_row |= Row{1} << local[std::countr_zero(r)];
      c.rows[i] = local_row;
      const int d = std::popcount(local_row);
      max_degree = std::max(max_degree, d);
      degree_sum += d;
    }
    // mu lies between the average degree (and sqrt of the max degree) and
    // the max degree; equal ends mean a regular component.
    c.hi = max_degree;
    if (degree_sum == static_cast<long>(max_degree) * c.size) {
      c.lo = max_degree;
    } else {
      c.lo = std::max(down(static_cast<double>(degree_sum) / c.size),
                      down(std::sqrt(static_cast<double>(max_degree))));
    }
    c.settled = c.lo >= c.hi;
    if (!c.settled) {
      c.x.assign(c.size, 1.0);
      c.next.assign(c.size, 0.0);
    }
    components_.push_back(std::move(c));
  }
}

SpectralBound RadiusEstimator::bound() const {
  SpectralBound b;
  for (const auto& c : components_) {
    b.lo = std::max(b.lo, c.lo);
    b.hi = std::max(b.hi, c.hi);
  }
  b.iterations = iterations_;
  return b;
}

bool RadiusEstimator::exhausted() const noexcept {
  if (iterations_ >= max_iterations_) return true;
  double global_lo = 0.0;
  for (const auto& c : components_) global_lo = std::max(global_lo, c.lo);
  return std::none_of(components_.begin(), components_.end(),
                      [global_lo](const Component& c) { return !c.settled && c.hi >= global_lo; });
}

void RadiusEstimator::restart(Component& c) {
  ++c.restarts;
  for (int i = 0; i < c.size; ++i) {
    c.x[i] = 1.0 + 0.5 * c.restarts * static_cast<double>(i + 1) / (c.size + 1);
  }
  c.since_improvement = 0;
}

void RadiusEstimator::step(Component& c) {
  double qmin = std::numeric_limits<double>::infinity();
  double qmax = 0.0;
  double peak = 0.0;
  for (int i = 0; i < c.size; ++i) {
    double s = 0.0;
    for (Row r = c.rows[i]; r; r &= r - 1) s += c.x[std::countr_zero(r)];
    const double q = s / c.x[i];
    qmin = std::min(qmin, q);
    qmax = std::max(qmax, q);
    c.next[i] = s + c.x[i];
    peak = std::max(peak, c.next[i]);
  }
  for (int i = 0; i < c.size; ++i) c.x[i] = c.next[i] / peak;

  // Worst case relative error of a sum of at most size-1 terms followed by
  // one division.
  const double slack = (c.size + 2) * kUnitRoundoff;
  const double lo = down(qmin * (1.0 - slack));
  const double hi = up(qmax * (1.0 + slack));
  const double width_before = c.hi - c.lo;
  c.lo = std::max(c.lo, lo);
  c.hi = std::min(c.hi, hi);
  if (c.hi - c.lo < width_before) {
    c.since_improvement = 0;
    c.restarts = 0;
  } else if (++c.since_improvement >= kStagnationWindow) {
    if (c.restarts >= kMaxRestarts) {
      c.settled = true;
    } else {
      restart(c);
    }
  }
  if (c.lo >= c.hi) c.settled = true;
}

SpectralBound RadiusEstimator::refine_until(const std::function<bool(const SpectralBound&)>& done) {
  for (;;) {
    SpectralBound b = bound();
    if (done(b)) return b;
    if (iterations_ >= max_iterations_) {
      b.cap_hit = true;
      return b;
    }
    double global_lo = b.lo;
    bool stepped = false;
    for (auto& c : components_) {
      if (c.settled || c.hi < global_lo) continue;
      step(c);
      stepped = true;
    }
    if (!stepped) {
      b.cap_hit = true;
      return b;
    }
    ++iterations_;
  }
}

SpectralBound RadiusEstimator::refine(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  return refine_until([tol](const SpectralBound& b) { return b.width() <= tol; });
}

SpectralBound spectral_radius_bound(const Graph& g, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  RadiusEstimator est(g);
  return est.refine(tol);
}

ThresholdComparison compare_to_integer_threshold(RadiusEstimator& est, std::int64_t t) {
  require_nonnegative(t);
  const double target = static_cast<double>(t);
  auto excludes = [target](const SpectralBound& b) { return b.hi < target || b.lo > target; };

  ThresholdComparison out;
  out.kind = ThresholdKind::integer;
  out.threshold = t;
  auto decide = [&out](Relation r, const SpectralBound& b, bool exact) {
    out.relation = r;
    out.bound = b;
    out.bound.cap_hit = false;
    out.resolved_exactly = exact;
    out.bound.resolved_exactly = exact;
    return out;
  };

  SpectralBound b = est.refine_until(
      [&](const SpectralBound& cur) { return excludes(cur) || cur.width() < kTieWidth; });
  if (b.hi < target) return decide(Relation::below, b, false);
  if (b.lo > target) return decide(Relation::above, b, false);

  const auto shifted = exact::shifted_adjacency(est.graph(), t);
  if (exact::determinant(shifted) == 0) {
    // t is an eigenvalue; it is mu unless some eigenvalue lies above it.
    const bool at_most_t = exact::is_positive_semidefinite(negated(shifted));
    return decide(at_most_t ? Relation::equal : Relation::above, b, true);
  }

  const long budget = b.iterations + kPostDeterminantBudget;
  b = est.refine_until([&](const SpectralBound& cur) {
    return excludes(cur) || cur.iterations >= budget;
  });
  if (b.hi < target) return decide(Relation::below, b, false);
  if (b.lo > target) return decide(Relation::above, b, false);
  const bool below_t = exact::is_positive_definite(negated(shifted));
  return decide(below_t ? Relation::below : Relation::above, b, true);
}

ThresholdComparison compare_to_sqrt_threshold(RadiusEstimator& est, std::int64_t s) {
  require_nonnegative(s);
  const double target = static_cast<double>(s);
  // lo >= 0, so squaring is monotone; one rounding step each way.
  auto sq_lo = [](const SpectralBound& b) { return down(b.lo * b.lo); };
  auto sq_hi = [](const SpectralBound& b) { return up(b.hi * b.hi); };
  auto excludes = [&](const SpectralBound& b) { return sq_hi(b) < target || sq_lo(b) > target; };

  ThresholdComparison out;
  out.kind = ThresholdKind::square_root;
  out.threshold = s;
  auto decide = [&out](Relation r, const SpectralBound& b, bool exact) {
    out.relation = r;
    out.bound = b;
    out.bound.cap_hit = false;
    out.resolved_exactly = exact;
    out.bound.resolved_exactly = exact;
    return out;
  };

  SpectralBound b = est.refine_until(
      [&](const SpectralBound& cur) { return excludes(cur) || cur.width() < kTieWidth; });
  if (sq_hi(b) < target) return decide(Relation::below, b, false);
  if (sq_lo(b) > target) return decide(Relation::above, b, false);

  // mu^2 is the largest eigenvalue of A^2.
  const auto shifted = exact::shifted_adjacency_squared(est.graph(), s);
  if (exact::determinant(shifted) == 0) {
    const bool at_most_s = exact::is_positive_semidefinite(negated(shifted));
    return decide(at_most_s ? Relation::equal : Relation::above, b, true);
  }

  const long budget = b.iterations + kPostDeterminantBudget;
  b = est.refine_until([&](const SpectralBound& cur) {
    return excludes(cur) || cur.iterations >= budget;
  });
  if (sq_hi(b) < target) return decide(Relation::below, b, false);
  if (sq_lo(b) > target) return decide(Relation::above, b, false);
  const bool below_s = exact::is_positive_definite(negated(shifted));
  return decide(below_s ? Relation::below : Relation::above, b, true);
}

ThresholdComparison compare_to_integer_threshold(const Graph& g, std::int64_t t) {
  RadiusEstimator est(g);
  return compare_to_integer_threshold(est, t);
}

ThresholdComparison compare_to_sqrt_threshold(const Graph& g, std::int64_t s) {
  RadiusEstimator est(g);
  return compare_to_sqrt_threshold(est, s);
}

double stanley_bound(long long m) {
  if (m < 0) throw std::invalid_argument("edge count must be nonnegative");
  return -0.5 + std::sqrt(2.0 * static_cast<double>(m) + 0.25);
}

HofmeisterResult hofmeister_check(const Graph& g, const SpectralBound& bound) {
  HofmeisterResult r;
  for (Row row : g.rows()) {
    const long long d = std::popcount(row);
    r.degree_square_sum += d * d;
  }
  const long double hi = bound.hi;
  r.lhs_upper = static_cast<long double>(g.order()) * hi * hi;
  // Only call it a violation when even a rounded-up n*hi^2 falls short.
  r.holds = r.lhs_upper * (1.0L + 1e-15L) >= static_cast<long double>(r.degree_square_sum);
  return r;
}

HofmeisterResult hofmeister_check(const Graph& g) {
  return hofmeister_check(g, spectral_radius_bound(g));
}

IdentityResult degree_square_edge_identity_check(const Graph& g) {
  IdentityResult r;
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    const long long du = std::popcount(g.row(u));
    r.degree_square_sum += du * du;
    for (Row nb = g.row(u) & ~Graph::full_mask(u + 1); nb; nb &= nb - 1) {
      r.edge_degree_sum += du + std::popcount(g.row(std::countr_zero(nb)));
    }
  }
  r.holds = r.degree_square_sum == r.edge_degree_sum;
  return r;
}

std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::below: return "below";
    case Relation::equal: return "equal";
    case Relation::above: return "above";
  }
  return "?";
}

}  // namespace hamcert
