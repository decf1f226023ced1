#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hamcert/graph.hpp"

namespace hamcert::exact {

using BigInt = boost::multiprecision::cpp_int;

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, 0) {}

  int dim() const noexcept { return dim_; }
  std::int64_t& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  std::int64_t operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }

  /// Upper bound on log2 of the Hadamard bound, i.e. of |det| of any
  /// principal submatrix.
  double log2_hadamard_bound() const;

 private:
  int dim_;
  std::vector<std::int64_t> data_;
};

/// A - shift*I for the 0/1 adjacency matrix A of g.
IntMatrix shifted_adjacency(const Graph& g, std::int64_t shift);

/// A*A - shift*I.
IntMatrix shifted_adjacency_squared(const Graph& g, std::int64_t shift);

/// Fraction-free Bareiss determinant. Runs in 128-bit machine integers when
/// the Hadamard bound allows it and in arbitrary precision otherwise.
BigInt determinant(const IntMatrix& m);
BigInt determinant_bigint(const IntMatrix& m);

/// Symmetric-matrix definiteness from the signs of Bareiss pivots with
/// diagonal pivoting. Inputs must be symmetric.
bool is_positive_definite(const IntMatrix& m);
bool is_positive_semidefinite(const IntMatrix& m);

}  // namespace hamcert::exact
