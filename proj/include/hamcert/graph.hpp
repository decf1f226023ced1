#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace hamcert {

using Row = std::uint64_t;

/// Simple undirected graph on at most 64 vertices.
///
/// Vertices are the dense labels 0..n-1. Row u is a 64-bit word whose bit v
/// is set iff {u,v} is an edge. A Graph is a value: every operation that
/// changes the edge set returns a new graph.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  /// Edgeless graph on n vertices; throws std::invalid_argument unless 1 <= n <= 64.
  explicit Graph(int n);

  /// Validates symmetry, loop-freeness and the high-bit mask.
  static Graph from_rows(std::span<const Row> rows);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  Row row(int u) const noexcept { return rows_[u]; }
  std::span<const Row> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1u; }

  /// Mask with the low n bits set.
  Row vertex_mask() const noexcept { return full_mask(n_); }

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  /// Same graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const int> perm) const;

  /// Edge-set containment on the same vertex set.
  bool is_subgraph_of(const Graph& other) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) noexcept;

  static constexpr Row full_mask(int n) noexcept {
    return n >= 64 ? ~Row{0} : ((Row{1} << n) - 1);
  }

 private:
  Graph() = default;
  void check_vertex(int u) const;

  int n_ = 0;
  std::array<Row, kMaxOrder> rows_{};
};

struct DegreeSequence {
  std::vector<int> degrees;
};

Graph complement(const Graph& g);

/// Throws std::out_of_range for u >= n.
int degree(const Graph& g, int u);
int edge_count(const Graph& g) noexcept;
DegreeSequence degree_sequence(const Graph& g);

/// Bitmask of each connected component, ordered by smallest vertex.
std::vector<Row> connected_components(const Graph& g);

enum class NamedKind {
  complete,
  empty,
  path,
  cycle,
  star,
  clique_plus_isolated,  // K_{n-1}+v
  clique_plus_pendant,   // K_{n-1}+e
};

/// Canonical labelings:
///   path      0-1-...-(n-1)
///   cycle     0-1-...-(n-1)-0
///   star      center 0, leaves 1..n-1
///   K_{n-1}+v clique on 0..n-2, vertex n-1 isolated
///   K_{n-1}+e clique on 0..n-2, pendant vertex n-1 attached to 0
Graph make_named(NamedKind kind, int n);

enum class Extremal { none, clique_plus_isolated, clique_plus_pendant };

/// Label-invariant recognition of K_{n-1}+v and K_{n-1}+e.
Extremal recognize_extremal(const Graph& g);

/// The two small graphs that reach the edge-count threshold C(n-1, 2) yet are
/// neither K_{n-1}+v nor K_{n-1}+e: the star K_{1,3} (m = 3 = C(3,2), no
/// Hamiltonian path) and K_2 joined to three independent vertices
/// (m = 7 > C(4,2), no Hamiltonian cycle).
enum class SmallException { none, star_k13, k2_join_3k1 };

SmallException recognize_small_exception(const Graph& g);

std::string_view to_string(NamedKind kind) noexcept;
std::string_view to_string(Extremal e) noexcept;
std::string_view to_string(SmallException e) noexcept;

inline long long binomial2(long long n) noexcept { return n * (n - 1) / 2; }

}  // namespace hamcert
