#include "tpoly/gf2.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <vector>

using tpoly::SimpleGraph;
using namespace tpoly::gf2;

namespace {

// rank = n - log2 |kernel|, with the kernel found by trying every vector.
std::size_t brute_rank(const Matrix& m) {
  const std::size_t n = m.size();
  std::size_t kernel = 0;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    bool zero = true;
    for (std::size_t i = 0; i < n && zero; ++i) zero = std::popcount(m.row(i) & v) % 2 == 0;
    kernel += zero;
  }
  std::size_t dim = 0;
  while ((std::size_t{1} << dim) < kernel) ++dim;
  return n - dim;
}

Matrix random_symmetric(std::mt19937& rng, std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const bool b = rng() & 1U;
      m.set(i, j, b);
      m.set(j, i, b);
    }
  return m;
}

}  // namespace

TEST(Gf2, RankExamples) {
  EXPECT_EQ(rank(Matrix::identity(3)), 3U);
  EXPECT_EQ(corank(Matrix::identity(3)), 0U);
  EXPECT_EQ(rank(Matrix(2)), 0U);
  EXPECT_EQ(corank(Matrix(2)), 2U);
  EXPECT_EQ(rank(Matrix{{0, 1}, {1, 0}}), 2U);
}

TEST(Gf2, PrincipalSubmatrix) {
  const Matrix m{{0, 1, 1}, {1, 1, 0}, {1, 0, 0}};
  const std::vector<std::size_t> all{0, 1, 2};
  EXPECT_EQ(principal_submatrix(m, all), m);
  EXPECT_EQ(principal_submatrix(m, std::uint64_t{0}).size(), 0U);
  EXPECT_EQ(principal_submatrix(Matrix{{0, 1}, {1, 0}}, std::uint64_t{1}), Matrix{{0}});
  EXPECT_EQ(principal_submatrix(m, std::uint64_t{0b110}), (Matrix{{1, 0}, {0, 0}}));
}

TEST(Gf2, Nondegenerate) {
  EXPECT_TRUE(is_nondegenerate(Matrix(0)));
  EXPECT_FALSE(is_nondegenerate(Matrix{{0}}));
  EXPECT_TRUE(is_nondegenerate(Matrix{{0, 1}, {1, 0}}));
}

TEST(Gf2, Adjacency) {
  SimpleGraph empty(2);
  EXPECT_EQ(adjacency(empty), Matrix(2));
  SimpleGraph k2(2);
  k2.add_edge(0, 1);
  EXPECT_EQ(adjacency(k2), (Matrix{{0, 1}, {1, 0}}));
  SimpleGraph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(0, 2);
  k3.add_edge(1, 2);
  const Matrix a = adjacency(k3);
  EXPECT_EQ(a, (Matrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
  EXPECT_EQ(rank(a), 2U);
  EXPECT_EQ(corank(a), 1U);
}

TEST(Gf2, SimpleGraphRejectsLoops) {
  SimpleGraph g(2);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
}

TEST(Gf2Property, RankAgainstKernelCount) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 400; ++iter) {
    const std::size_t n = rng() % 9;
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng() & 1U);
    EXPECT_EQ(rank(m), brute_rank(m));
    EXPECT_EQ(rank(m), rank(m.transpose()));
    const Matrix s = random_symmetric(rng, n);
    EXPECT_EQ(rank(s), rank(s.transpose()));
  }
}
