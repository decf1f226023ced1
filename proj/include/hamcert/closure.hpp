#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamcert/graph.hpp"

namespace hamcert {

struct AddedEdge {
  int u = 0;
  int v = 0;
  int degree_sum = 0;  // d(u) + d(v) just before the edge was added

  friend bool operator==(const AddedEdge&, const AddedEdge&) = default;
};

struct ClosureResult {
  Graph closed;
  std::vector<AddedEdge> added;
  int k = 0;
};

/// Bondy-Chvatal k-closure. The trace always adds the lexicographically
/// smallest eligible pair, with eligibility recomputed after every addition.
ClosureResult k_closure(const Graph& g, int k);

/// Closure with the eligible pair drawn uniformly at random at each step.
ClosureResult k_closure_randomized(const Graph& g, int k, std::uint64_t seed);

struct OrderIndependenceResult {
  bool holds = true;
  // On failure, the two traces whose final graphs differ.
  std::vector<AddedEdge> first_trace;
  std::vector<AddedEdge> second_trace;
};

/// Runs `trials` seeded randomized closures and compares their final edge sets.
OrderIndependenceResult closure_order_independence_check(const Graph& g, int k, int trials,
                                                         std::uint64_t seed);

struct NonadjacentPair {
  int u = 0;
  int v = 0;
  int degree_sum = 0;
};

/// First nonadjacent pair of result.closed with d(u)+d(v) >= k, if any.
std::optional<NonadjacentPair> main_property_check(const ClosureResult& result);

}  // namespace hamcert
