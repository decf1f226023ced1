#include "hamcert/exact.hpp"

#include <bit>
#include <cmath>
#include <utility>

namespace hamcert::exact {

namespace {

__extension__ using Wide = __int128;
__extension__ using UWide = unsigned __int128;

// All Bareiss intermediates are minors of the input, so they are bounded by
// the Hadamard bound H; cross products before each division stay below 2*H^2.
constexpr double kWideLog2Limit = 60.0;

template <typename T>
std::vector<T> widen(const IntMatrix& m) {
  std::vector<T> a(static_cast<std::size_t>(m.dim()) * m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) a[static_cast<std::size_t>(i) * m.dim() + j] = T(m(i, j));
  }
  return a;
}

template <typename T>
T bareiss_determinant(const IntMatrix& m) {
  const int n = m.dim();
  if (n == 0) return T(1);
  auto a = widen<T>(m);
  auto at = [&a, n](int i, int j) -> T& { return a[static_cast<std::size_t>(i) * n + j]; };
  T prev(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (at(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return T(0);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
      }
    }
    prev = at(k, k);
  }
  T det = at(n - 1, n - 1);
  return negate ? T(-det) : det;
}

enum class Definiteness { definite, semidefinite, indefinite };

// Symmetric Bareiss with positive diagonal pivots. Each pivot is a principal
// minor; the scaled Schur complement keeps the sign of the true one because
// the previous pivot is positive.
template <typename T>
Definiteness classify(const IntMatrix& m) {
  const int n = m.dim();
  auto a = widen<T>(m);
  auto at = [&a, n](int i, int j) -> T& { return a[static_cast<std::size_t>(i) * n + j]; };
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;

  T prev(1);
  bool singular = false;
  while (!active.empty()) {
    int pivot = -1;
    std::vector<int> kept;
    kept.reserve(active.size());
    for (int i : active) {
      const T& d = at(i, i);
      if (d < 0) return Definiteness::indefinite;
      if (d == 0) {
        for (int j : active) {
          if (at(i, j) != 0) return Definiteness::indefinite;
        }
        singular = true;
        continue;
      }
      if (pivot < 0) pivot = i;
      kept.push_back(i);
    }
    if (pivot < 0) break;
    std::erase(kept, pivot);
    const T p = at(pivot, pivot);
    for (int i : kept) {
      for (int j : kept) {
        at(i, j) = (at(i, j) * p - at(i, pivot) * at(pivot, j)) / prev;
      }
    }
    prev = p;
    active = std::move(kept);
  }
  return singular ? Definiteness::semidefinite : Definiteness::definite;
}

template <typename F>
auto dispatch(const IntMatrix& m, F&& f) {
  if (m.log2_hadamard_bound() <= kWideLog2Limit) return f(Wide{});
  return f(BigInt{});
}

BigInt to_big(Wide v) {
  const bool neg = v < 0;
  UWide u = neg ? static_cast<UWide>(-(v + 1)) + 1 : static_cast<UWide>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-r) : r;
}

}  // namespace

double IntMatrix::log2_hadamard_bound() const {
  double total = 0.0;
  for (int i = 0; i < dim_; ++i) {
    double norm2 = 0.0;
    for (int j = 0; j < dim_; ++j) {
      const double v = static_cast<double>((*this)(i, j));
      norm2 += v * v;
    }
    // rows are clamped at norm 1 so the bound also covers every minor
    if (norm2 > 1.0) total += 0.5 * std::log2(norm2);
  }
  // rounding slack
  return total + 1.0;
}

IntMatrix shifted_adjacency(const Graph& g, std::int64_t shift) {
  const int n = g.order();
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = g.adjacent(i, j) ? 1 : 0;
    m(i, i) = -shift;
  }
  return m;
}

IntMatrix shifted_adjacency_squared(const Graph& g, std::int64_t shift) {
  const int n = g.order();
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = std::popcount(g.row(i) & g.row(j));
    m(i, i) -= shift;
  }
  return m;
}

BigInt determinant(const IntMatrix& m) {
  if (m.log2_hadamard_bound() <= kWideLog2Limit) return to_big(bareiss_determinant<Wide>(m));
  return bareiss_determinant<BigInt>(m);
}

BigInt determinant_bigint(const IntMatrix& m) { return bareiss_determinant<BigInt>(m); }

bool is_positive_definite(const IntMatrix& m) {
  return dispatch(m, [&m](auto tag) { return classify<decltype(tag)>(m); }) ==
         Definiteness::definite;
}

bool is_positive_semidefinite(const IntMatrix& m) {
  return dispatch(m, [&m](auto tag) { return classify<decltype(tag)>(m); }) !=
         Definiteness::indefinite;
}

}  // namespace hamcert::exact
