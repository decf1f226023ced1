#include <doctest.h>

#include <random>

#include "hamcert/exact.hpp"
#include "oracles.hpp"

using namespace hamcert;
using exact::BigInt;
using exact::IntMatrix;

namespace {

std::vector<std::vector<long long>> to_nested(const IntMatrix& m) {
  std::vector<std::vector<long long>> out(m.dim(), std::vector<long long>(m.dim()));
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

}  // namespace

TEST_CASE("Bareiss determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + static_cast<int>(rng() % 7);
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = (rng() % 3 == 0) ? 0 : entry(rng);
    }
    const BigInt expected = oracle::cofactor_determinant(to_nested(m));
    CHECK(exact::determinant(m) == expected);
    CHECK(exact::determinant_bigint(m) == expected);
  }
}

TEST_CASE("characteristic values of small graphs") {
  // K_5: eigenvalues 4, -1 (x4)
  const Graph k5 = make_named(NamedKind::complete, 5);
  CHECK(exact::determinant(exact::shifted_adjacency(k5, 4)) == 0);
  CHECK(exact::determinant(exact::shifted_adjacency(k5, 3)) != 0);
  // K_{1,4}: eigenvalues +-2, 0, 0, 0; A^2 - 4I singular
  const Graph star = make_named(NamedKind::star, 5);
  CHECK(exact::determinant(exact::shifted_adjacency_squared(star, 4)) == 0);
  CHECK(exact::determinant(exact::shifted_adjacency_squared(star, 3)) != 0);
  // det(A) of C_4 is 0, of C_5 is 2
  CHECK(exact::determinant(exact::shifted_adjacency(make_named(NamedKind::cycle, 4), 0)) == 0);
  CHECK(exact::determinant(exact::shifted_adjacency(make_named(NamedKind::cycle, 5), 0)) == 2);
}

TEST_CASE("large determinants take the arbitrary precision path") {
  // 40x40 with entries near 1000 cannot fit 128-bit intermediates
  std::mt19937_64 rng(9);
  IntMatrix m(40);
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 40; ++j) m(i, j) = static_cast<std::int64_t>(rng() % 2000) - 1000;
  }
  CHECK(m.log2_hadamard_bound() > 200);
  const BigInt det = exact::determinant(m);
  CHECK(det == exact::determinant_bigint(m));
  // scaling one row by 3 scales the determinant by 3
  IntMatrix scaled = m;
  for (int j = 0; j < 40; ++j) scaled(7, j) *= 3;
  CHECK(exact::determinant(scaled) == 3 * det);
}

TEST_CASE("definiteness of symmetric integer matrices") {
  // tI - A for K_4: eigenvalues t-3, t+1
  const Graph k4 = make_named(NamedKind::complete, 4);
  auto neg = [](IntMatrix m) {
    for (int i = 0; i < m.dim(); ++i) {
      for (int j = 0; j < m.dim(); ++j) m(i, j) = -m(i, j);
    }
    return m;
  };
  CHECK(exact::is_positive_definite(neg(exact::shifted_adjacency(k4, 4))));
  CHECK_FALSE(exact::is_positive_definite(neg(exact::shifted_adjacency(k4, 3))));
  CHECK(exact::is_positive_semidefinite(neg(exact::shifted_adjacency(k4, 3))));
  CHECK_FALSE(exact::is_positive_semidefinite(neg(exact::shifted_adjacency(k4, 2))));

  IntMatrix zero(3);
  CHECK(exact::is_positive_semidefinite(zero));
  CHECK_FALSE(exact::is_positive_definite(zero));

  // zero diagonal with off-diagonal mass is indefinite
  IntMatrix hollow(2);
  hollow(0, 1) = hollow(1, 0) = 1;
  CHECK_FALSE(exact::is_positive_semidefinite(hollow));

  // random Gram matrices B^T B are PSD, and PD when B has full column rank
  std::mt19937_64 rng(21);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const int rows = 1 + static_cast<int>(rng() % 8);
    std::vector<std::vector<long long>> b(rows, std::vector<long long>(n));
    for (auto& r : b) {
      for (auto& v : r) v = static_cast<long long>(rng() % 7) - 3;
    }
    IntMatrix gram(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        long long s = 0;
        for (int r = 0; r < rows; ++r) s += b[r][i] * b[r][j];
        gram(i, j) = s;
      }
    }
    CHECK(exact::is_positive_semidefinite(gram));
    const bool singular = oracle::cofactor_determinant(to_nested(gram)) == 0;
    CHECK(exact::is_positive_definite(gram) == !singular);
    if (!singular) CHECK_FALSE(exact::is_positive_semidefinite(neg(gram)));
  }
}
