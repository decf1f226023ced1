#include "hamcert/harness.hpp"

#include <stdexcept>
#include <string>

namespace hamcert {

namespace {

void require_exhaustive_order(int n) {
  if (n < 1 || n > kMaxExhaustiveOrder) {
    throw std::invalid_argument("exhaustive labeled enumeration supports 1 <= n <= " +
                                std::to_string(kMaxExhaustiveOrder) + ", got " +
                                std::to_string(n));
  }
}

std::vector<std::pair<int, int>> row_major_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

Graph build(int n, std::uint64_t pattern, const std::vector<std::pair<int, int>>& pairs) {
  std::array<Row, Graph::kMaxOrder> rows{};
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    if ((pattern >> b) & 1u) {
      const auto [i, j] = pairs[b];
      rows[i] |= Row{1} << j;
      rows[j] |= Row{1} << i;
    }
  }
  return Graph::from_rows({rows.data(), static_cast<std::size_t>(n)});
}

}  // namespace

std::uint64_t labeled_count(int n) {
  require_exhaustive_order(n);
  return std::uint64_t{1} << binomial2(n);
}

Graph graph_from_pattern(int n, std::uint64_t pattern) {
  const std::uint64_t total = labeled_count(n);
  if (pattern >= total) throw std::out_of_range("pattern exceeds 2^C(n,2)");
  return build(n, pattern, row_major_pairs(n));
}

LabeledEnumerator::LabeledEnumerator(int n, Shard shard)
    : n_(n), shard_(shard), next_pattern_(shard.index), end_(labeled_count(n)),
      pairs_(row_major_pairs(n)) {
  if (shard.total < 1 || shard.index >= shard.total) {
    throw std::invalid_argument("shard index must satisfy 0 <= index < total");
  }
}

std::optional<LabeledGraph> LabeledEnumerator::next() {
  if (next_pattern_ >= end_) return std::nullopt;
  LabeledGraph out{next_pattern_, build(n_, next_pattern_, pairs_)};
  next_pattern_ += shard_.total;
  return out;
}

std::uint64_t LabeledEnumerator::size() const noexcept {
  if (shard_.index >= end_) return 0;
  return (end_ - shard_.index + shard_.total - 1) / shard_.total;
}

}  // namespace hamcert
