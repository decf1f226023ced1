#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hamcert/graph.hpp"

namespace hamcert {

/// Largest order the subset DP accepts; larger inputs throw std::domain_error.
inline constexpr int kOracleMaxOrder = 24;

enum class WitnessKind { path, cycle };

struct HamWitness {
  WitnessKind kind = WitnessKind::path;
  std::vector<int> order;
};

/// True iff w visits every vertex of g once along edges of g (closing back
/// to the start for cycles).
bool witness_is_valid(const Graph& g, const HamWitness& w);

/// Held-Karp style reachability over (vertex subset, endpoint). K_1 has the
/// one-vertex path.
std::optional<HamWitness> has_ham_path(const Graph& g);

/// Same DP anchored at vertex 0. Graphs with fewer than 3 vertices have no
/// Hamiltonian cycle.
std::optional<HamWitness> has_ham_cycle(const Graph& g);

struct OreResult {
  bool satisfied = true;
  // First failing nonadjacent pair when not satisfied.
  int u = -1;
  int v = -1;
  int degree_sum = 0;
};

/// d(u)+d(v) >= n-1 for every nonadjacent pair; >= n when strict.
OreResult ore_condition(const Graph& g, bool strict);

enum class EdgeCountVerdict {
  path_guaranteed,
  cycle_guaranteed,
  exceptional_path,
  exceptional_cycle,
  inconclusive,
};

/// Edge-count criterion against C(n-1, 2). Besides K_{n-1}+v and K_{n-1}+e,
/// the small-order exceptions K_{1,3} (no path) and K_2 v 3K_1 (no cycle) are
/// reported as exceptional rather than guaranteed.
EdgeCountVerdict edge_count_condition(const Graph& g);

std::string_view to_string(EdgeCountVerdict v) noexcept;

}  // namespace hamcert
