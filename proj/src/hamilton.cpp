#include "hamcert/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hamcert {

namespace {

using Subset = std::uint32_t;

void require_oracle_order(const Graph& g) {
  if (g.order() > kOracleMaxOrder) {
    throw std::domain_error("Hamiltonicity oracle is limited to order " +
                            std::to_string(kOracleMaxOrder) + ", got " +
                            std::to_string(g.order()));
  }
}

// ends[S] has bit v set iff some path visits exactly S and ends at v. With
// `anchor` >= 0 only paths starting at the anchor are tracked.
std::vector<Subset> reachability(const Graph& g, int anchor) {
  const int n = g.order();
  const Subset full = static_cast<Subset>(Graph::full_mask(n));
  std::vector<Subset> ends(static_cast<std::size_t>(full) + 1, 0);
  if (anchor >= 0) {
    ends[Subset{1} << anchor] = Subset{1} << anchor;
  } else {
    for (int v = 0; v < n; ++v) ends[Subset{1} << v] = Subset{1} << v;
  }
  for (Subset s = 1; s < full; ++s) {
    for (Subset e = ends[s]; e; e &= e - 1) {
      const int v = std::countr_zero(e);
      for (Subset ext = static_cast<Subset>(g.row(v)) & ~s; ext; ext &= ext - 1) {
        const Subset u = ext & (~ext + 1);
        ends[s | u] |= u;
      }
    }
  }
  return ends;
}

int highest(Subset s) { return 31 - std::countl_zero(s); }

// Walks back from endpoint `last` of the full set using the table itself.
std::vector<int> trace_back(const Graph& g, const std::vector<Subset>& ends, int last) {
  const int n = g.order();
  std::vector<int> order;
  order.reserve(n);
  Subset s = static_cast<Subset>(Graph::full_mask(n));
  int v = last;
  for (;;) {
    order.push_back(v);
    const Subset rest = s & ~(Subset{1} << v);
    if (rest == 0) break;
    const Subset prev = ends[rest] & static_cast<Subset>(g.row(v));
    v = std::countr_zero(prev);
    s = rest;
  }
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

bool witness_is_valid(const Graph& g, const HamWitness& w) {
  const int n = g.order();
  if (static_cast<int>(w.order.size()) != n) return false;
  Row seen = 0;
  for (int v : w.order) {
    if (v < 0 || v >= n || ((seen >> v) & 1u)) return false;
    seen |= Row{1} << v;
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (!g.adjacent(w.order[i], w.order[i + 1])) return false;
  }
  if (w.kind == WitnessKind::cycle) {
    return n >= 3 && g.adjacent(w.order.back(), w.order.front());
  }
  return true;
}

std::optional<HamWitness> has_ham_path(const Graph& g) {
  require_oracle_order(g);
  if (g.order() == 1) return HamWitness{WitnessKind::path, {0}};
  const auto ends = reachability(g, -1);
  const Subset final_ends = ends.back();
  if (!final_ends) return std::nullopt;
  return HamWitness{WitnessKind::path, trace_back(g, ends, highest(final_ends))};
}

std::optional<HamWitness> has_ham_cycle(const Graph& g) {
  require_oracle_order(g);
  if (g.order() < 3) return std::nullopt;
  const auto ends = reachability(g, 0);
  const Subset closing = ends.back() & static_cast<Subset>(g.row(0));
  if (!closing) return std::nullopt;
  return HamWitness{WitnessKind::cycle, trace_back(g, ends, highest(closing))};
}

OreResult ore_condition(const Graph& g, bool strict) {
  const int n = g.order();
  const int threshold = strict ? n : n - 1;
  for (int u = 0; u < n; ++u) {
    const int du = std::popcount(g.row(u));
    for (Row m = ~g.row(u) & g.vertex_mask() & ~Graph::full_mask(u + 1); m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const int sum = du + std::popcount(g.row(v));
      if (sum < threshold) return OreResult{false, u, v, sum};
    }
  }
  return OreResult{};
}

EdgeCountVerdict edge_count_condition(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("edge-count condition requires order >= 2");
  const long long m = edge_count(g);
  const long long threshold = binomial2(n - 1);
  if (m < threshold) return EdgeCountVerdict::inconclusive;
  const Extremal ext = recognize_extremal(g);
  const SmallException small = recognize_small_exception(g);
  if (m == threshold) {
    return ext == Extremal::clique_plus_isolated || small == SmallException::star_k13
               ? EdgeCountVerdict::exceptional_path
               : EdgeCountVerdict::path_guaranteed;
  }
  // no Hamiltonian cycle exists below three vertices
  if (n < 3) return EdgeCountVerdict::path_guaranteed;
  return ext == Extremal::clique_plus_pendant || small == SmallException::k2_join_3k1
             ? EdgeCountVerdict::exceptional_cycle
             : EdgeCountVerdict::cycle_guaranteed;
}

std::string_view to_string(EdgeCountVerdict v) noexcept {
  switch (v) {
    case EdgeCountVerdict::path_guaranteed: return "path_guaranteed";
    case EdgeCountVerdict::cycle_guaranteed: return "cycle_guaranteed";
    case EdgeCountVerdict::exceptional_path: return "exceptional_path";
    case EdgeCountVerdict::exceptional_cycle: return "exceptional_cycle";
    case EdgeCountVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace hamcert
