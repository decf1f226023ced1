#include "hamcert/closure.hpp"

#include <bit>
#include <random>
#include <stdexcept>

namespace hamcert {

namespace {

struct State {
  std::array<Row, Graph::kMaxOrder> rows{};
  std::array<int, Graph::kMaxOrder> deg{};
  int n = 0;

  explicit State(const Graph& g) : n(g.order()) {
    for (int u = 0; u < n; ++u) {
      rows[u] = g.row(u);
      deg[u] = std::popcount(rows[u]);
    }
  }

  bool eligible(int u, int v, int k) const { return deg[u] + deg[v] >= k; }

  AddedEdge add(int u, int v) {
    AddedEdge e{u, v, deg[u] + deg[v]};
    rows[u] |= Row{1} << v;
    rows[v] |= Row{1} << u;
    ++deg[u];
    ++deg[v];
    return e;
  }

  // Nonadjacent pairs u < v as a mask of v's for each u.
  Row missing(int u) const { return ~rows[u] & Graph::full_mask(n) & ~Graph::full_mask(u + 1); }

  Graph graph() const { return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)}); }
};

void require_k(int k) {
  if (k < 0) throw std::invalid_argument("closure parameter must be nonnegative");
}

}  // namespace

ClosureResult k_closure(const Graph& g, int k) {
  require_k(k);
  State s(g);
  ClosureResult out{g, {}, k};
  // rescan from (0,1) after every addition
  for (bool found = true; found;) {
    found = false;
    for (int u = 0; u < s.n && !found; ++u) {
      for (Row m = s.missing(u); m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (s.eligible(u, v, k)) {
          out.added.push_back(s.add(u, v));
          found = true;
          break;
        }
      }
    }
  }
  out.closed = s.graph();
  return out;
}

ClosureResult k_closure_randomized(const Graph& g, int k, std::uint64_t seed) {
  require_k(k);
  State s(g);
  ClosureResult out{g, {}, k};
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> candidates;
  for (;;) {
    candidates.clear();
    for (int u = 0; u < s.n; ++u) {
      for (Row m = s.missing(u); m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (s.eligible(u, v, k)) candidates.emplace_back(u, v);
      }
    }
    if (candidates.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const auto [u, v] = candidates[pick(rng)];
    out.added.push_back(s.add(u, v));
  }
  out.closed = s.graph();
  return out;
}

OrderIndependenceResult closure_order_independence_check(const Graph& g, int k, int trials,
                                                         std::uint64_t seed) {
  if (trials < 2) throw std::invalid_argument("order independence needs at least two trials");
  OrderIndependenceResult r;
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(trials));
  {
    std::mt19937_64 gen(seed);
    for (auto& s : seeds) s = gen();
  }
  const ClosureResult first = k_closure_randomized(g, k, seeds[0]);
  for (int t = 1; t < trials; ++t) {
    ClosureResult other = k_closure_randomized(g, k, seeds[t]);
    if (!(other.closed == first.closed)) {
      r.holds = false;
      r.first_trace = first.added;
      r.second_trace = std::move(other.added);
      return r;
    }
  }
  return r;
}

std::optional<NonadjacentPair> main_property_check(const ClosureResult& result) {
  const Graph& h = result.closed;
  const int n = h.order();
  for (int u = 0; u < n; ++u) {
    const int du = std::popcount(h.row(u));
    for (Row m = ~h.row(u) & h.vertex_mask() & ~Graph::full_mask(u + 1); m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int sum = du + std::popcount(h.row(v));
      if (sum > result.k - 1) return NonadjacentPair{u, v, sum};
    }
  }
  return std::nullopt;
}

}  // namespace hamcert
