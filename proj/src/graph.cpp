#include "hamcert/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace hamcert {

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxOrder) {
    throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
  }
}

Graph Graph::from_rows(std::span<const Row> rows) {
  Graph g(static_cast<int>(rows.size()));
  const Row mask = g.vertex_mask();
  for (int u = 0; u < g.n_; ++u) {
    const Row r = rows[u];
    if (r & ~mask) throw std::invalid_argument("adjacency row has bits beyond the vertex count");
    if ((r >> u) & 1u) throw std::invalid_argument("adjacency row has a loop");
    g.rows_[u] = r;
  }
  for (int u = 0; u < g.n_; ++u) {
    for (Row r = g.rows_[u]; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (!g.adjacent(v, u)) throw std::invalid_argument("adjacency rows are not symmetric");
    }
  }
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    g.rows_[u] |= Row{1} << v;
    g.rows_[v] |= Row{1} << u;
  }
  return g;
}

void Graph::check_vertex(int u) const {
  if (u < 0 || u >= n_) {
    throw std::out_of_range("vertex " + std::to_string(u) + " out of range for order " +
                            std::to_string(n_));
  }
}

Graph Graph::with_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("loops are not allowed");
  Graph g = *this;
  g.rows_[u] |= Row{1} << v;
  g.rows_[v] |= Row{1} << u;
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  g.rows_[u] &= ~(Row{1} << v);
  g.rows_[v] &= ~(Row{1} << u);
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  Row seen = 0;
  for (int p : perm) {
    check_vertex(p);
    seen |= Row{1} << p;
  }
  if (seen != vertex_mask()) throw std::invalid_argument("not a permutation");
  Graph g(n_);
  for (int u = 0; u < n_; ++u) {
    for (Row r = rows_[u]; r; r &= r - 1) {
      g.rows_[perm[u]] |= Row{1} << perm[std::countr_zero(r)];
    }
  }
  return g;
}

bool Graph::is_subgraph_of(const Graph& other) const noexcept {
  if (n_ != other.n_) return false;
  for (int u = 0; u < n_; ++u) {
    if (rows_[u] & ~other.rows_[u]) return false;
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) noexcept {
  if (a.n_ != b.n_) return false;
  for (int u = 0; u < a.n_; ++u) {
    if (a.rows_[u] != b.rows_[u]) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::array<Row, Graph::kMaxOrder> rows{};
  const Row mask = g.vertex_mask();
  for (int u = 0; u < n; ++u) rows[u] = ~g.row(u) & mask & ~(Row{1} << u);
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

int degree(const Graph& g, int u) {
  if (u < 0 || u >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(u) + " out of range for order " +
                            std::to_string(g.order()));
  }
  return std::popcount(g.row(u));
}

int edge_count(const Graph& g) noexcept {
  int sum = 0;
  for (Row r : g.rows()) sum += std::popcount(r);
  return sum / 2;
}

DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence seq;
  seq.degrees.reserve(g.order());
  for (Row r : g.rows()) seq.degrees.push_back(std::popcount(r));
  return seq;
}

std::vector<Row> connected_components(const Graph& g) {
  std::vector<Row> out;
  Row unseen = g.vertex_mask();
  while (unseen) {
    Row comp = unseen & (~unseen + 1);
    Row frontier = comp;
    while (frontier) {
      Row next = 0;
      for (Row f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    unseen &= ~comp;
  }
  return out;
}

namespace {

void add_clique(std::array<Row, Graph::kMaxOrder>& rows, int count) {
  const Row mask = Graph::full_mask(count);
  for (int u = 0; u < count; ++u) rows[u] = mask & ~(Row{1} << u);
}

void require_order(int n, int minimum, NamedKind kind) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(to_string(kind)) + " requires order >= " +
                                std::to_string(minimum) + ", got " + std::to_string(n));
  }
}

}  // namespace

Graph make_named(NamedKind kind, int n) {
  switch (kind) {
    case NamedKind::cycle:
      require_order(n, 3, kind);
      break;
    case NamedKind::star:
    case NamedKind::clique_plus_isolated:
      require_order(n, 2, kind);
      break;
    case NamedKind::clique_plus_pendant:
      require_order(n, 3, kind);
      break;
    default:
      require_order(n, 1, kind);
  }
  if (n > Graph::kMaxOrder) throw std::invalid_argument("graph order must be in [1, 64]");

  std::array<Row, Graph::kMaxOrder> rows{};
  auto link = [&rows](int u, int v) {
    rows[u] |= Row{1} << v;
    rows[v] |= Row{1} << u;
  };
  switch (kind) {
    case NamedKind::complete:
      add_clique(rows, n);
      break;
    case NamedKind::empty:
      break;
    case NamedKind::path:
      for (int u = 0; u + 1 < n; ++u) link(u, u + 1);
      break;
    case NamedKind::cycle:
      for (int u = 0; u < n; ++u) link(u, (u + 1) % n);
      break;
    case NamedKind::star:
      for (int u = 1; u < n; ++u) link(0, u);
      break;
    case NamedKind::clique_plus_isolated:
      add_clique(rows, n - 1);
      break;
    case NamedKind::clique_plus_pendant:
      add_clique(rows, n - 1);
      link(0, n - 1);
      break;
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

Extremal recognize_extremal(const Graph& g) {
  const int n = g.order();
  const Row all = g.vertex_mask();

  if (n >= 2) {
    // exactly one isolated vertex, everything else a clique
    int isolated = -1;
    int isolated_count = 0;
    for (int u = 0; u < n; ++u) {
      if (g.row(u) == 0) {
        isolated = u;
        ++isolated_count;
      }
    }
    // n = 2: K_1+v is the edgeless pair, both vertices isolated.
    if (n == 2 && isolated_count == 2) return Extremal::clique_plus_isolated;
    if (isolated_count == 1) {
      const Row rest = all & ~(Row{1} << isolated);
      bool clique = true;
      for (int u = 0; u < n && clique; ++u) {
        if (u != isolated) clique = g.row(u) == (rest & ~(Row{1} << u));
      }
      if (clique) return Extremal::clique_plus_isolated;
    }
  }

  if (n >= 3) {
    int pendant = -1;
    int pendant_count = 0;
    for (int u = 0; u < n; ++u) {
      if (std::popcount(g.row(u)) == 1) {
        pendant = u;
        ++pendant_count;
      }
    }
    // n = 3: the path P_3 has two degree-1 vertices and is K_2+e; pick either.
    if (pendant_count == 1 || (n == 3 && pendant_count == 2)) {
      const Row rest = all & ~(Row{1} << pendant);
      const int anchor = std::countr_zero(g.row(pendant));
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        if (u == pendant) continue;
        Row expected = rest & ~(Row{1} << u);
        if (u == anchor) expected |= Row{1} << pendant;
        ok = g.row(u) == expected;
      }
      if (ok) return Extremal::clique_plus_pendant;
    }
  }
  return Extremal::none;
}

std::string_view to_string(NamedKind kind) noexcept {
  switch (kind) {
    case NamedKind::complete: return "complete";
    case NamedKind::empty: return "empty";
    case NamedKind::path: return "path";
    case NamedKind::cycle: return "cycle";
    case NamedKind::star: return "star";
    case NamedKind::clique_plus_isolated: return "K_{n-1}+v";
    case NamedKind::clique_plus_pendant: return "K_{n-1}+e";
  }
  return "?";
}

SmallException recognize_small_exception(const Graph& g) {
  // both graphs are determined by their degree sequences
  std::vector<int> sorted = degree_sequence(g).degrees;
  std::sort(sorted.begin(), sorted.end());
  if (sorted == std::vector<int>{1, 1, 1, 3}) return SmallException::star_k13;
  if (sorted == std::vector<int>{2, 2, 2, 4, 4}) return SmallException::k2_join_3k1;
  return SmallException::none;
}

std::string_view to_string(SmallException e) noexcept {
  switch (e) {
    case SmallException::none: return "none";
    case SmallException::star_k13: return "K_{1,3}";
    case SmallException::k2_join_3k1: return "K_2 v 3K_1";
  }
  return "?";
}

std::string_view to_string(Extremal e) noexcept {
  switch (e) {
    case Extremal::none: return "none";
    case Extremal::clique_plus_isolated: return "K_{n-1}+v";
    case Extremal::clique_plus_pendant: return "K_{n-1}+e";
  }
  return "?";
}

}  // namespace hamcert
