#include <gtest/gtest.h>

#include <random>

#include "sldist/chartab/modular.hpp"

using namespace sldist::chartab;

namespace {

ModMatrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ModMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = rng() % m;
  return a;
}

ModMatrix naive_mul(const ModMatrix& a, const ModMatrix& b, std::uint64_t m) {
  ModMatrix c = ModMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index k = 0; k < a.cols(); ++k) c(i, j) = add_mod(c(i, j), mul_mod(a(i, k), b(k, j), m), m);
  return c;
}

}  // namespace

TEST(Modular, PrimesAndRoots) {
  EXPECT_EQ(least_prime_one_mod(15, 0), 31u);
  EXPECT_EQ(least_prime_one_mod(60, 100), 181u);
  const std::uint64_t l = least_prime_one_mod(1260, 2 * 426);
  EXPECT_EQ(l, 2521u);
  const auto w = primitive_root_of_unity(1260, l);
  EXPECT_EQ(pow_mod(w, 1260, l), 1u);
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) EXPECT_NE(pow_mod(w, 1260 / p, l), 1u);
}

TEST(Modular, MatMulAgreesWithNaive) {
  for (std::uint64_t m : {31ull, 2521ull, 4294967311ull, 2305843009213693951ull}) {
    const auto a = random_matrix(7, 40, m, 1), b = random_matrix(40, 5, m, 2);
    EXPECT_EQ(mat_mul_mod(a, b, m), naive_mul(a, b, m)) << m;
  }
}

TEST(Modular, NullspaceIsKernel) {
  const std::uint64_t m = 2521;
  auto a = random_matrix(6, 10, m, 3);
  a.row(5) = (a.row(0) + a.row(1)).unaryExpr([m](std::uint64_t x) { return x % m; });
  const auto basis = nullspace_mod(a, m);
  EXPECT_EQ(basis.rows(), 5);
  EXPECT_TRUE(mat_mul_mod(a, basis.transpose(), m).isZero());
}

TEST(Modular, CharpolyOfCompanionAndSimilar) {
  const std::uint64_t m = 101;
  // Companion matrix of x^3 - 6x^2 + 11x - 6 = (x-1)(x-2)(x-3).
  ModMatrix c = ModMatrix::Zero(3, 3);
  c(1, 0) = 1;
  c(2, 1) = 1;
  c(0, 2) = 6;
  c(1, 2) = m - 11;
  c(2, 2) = 6;
  EXPECT_EQ(charpoly_mod(c, m), (std::vector<std::uint64_t>{m - 6, 11, m - 6, 1}));
  EXPECT_EQ(roots_mod(charpoly_mod(c, m), m), (std::vector<std::uint64_t>{1, 2, 3}));
  // Trace and determinant of a random matrix appear as coefficients.
  const auto a = random_matrix(9, 9, m, 4);
  const auto p = charpoly_mod(a, m);
  std::uint64_t trace = 0;
  for (int i = 0; i < 9; ++i) trace = add_mod(trace, a(i, i), m);
  EXPECT_EQ(p[8], (m - trace) % m);
  EXPECT_EQ(p[9], 1u);
  // Cayley-Hamilton.
  ModMatrix acc = ModMatrix::Zero(9, 9), pw = ModMatrix::Identity(9, 9);
  for (std::size_t d = 0; d < p.size(); ++d) {
    acc = (acc + pw.unaryExpr([&](std::uint64_t x) { return mul_mod(x, p[d], m); })).unaryExpr([m](std::uint64_t x) {
      return x % m;
    });
    pw = mat_mul_mod(pw, a, m);
  }
  EXPECT_TRUE(acc.isZero());
}
