#pragma once

#include "tpoly/simple_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace tpoly::gf2 {

/// Square matrix over F2, one 64-bit word per row (n <= 64).
///
/// Bit j of row i is entry (i, j). Elimination always runs on a copy, so a
/// matrix is safe to share once built.
class Matrix {
public:
  static constexpr std::size_t kMaxDim = 64;

  Matrix() = default;
  explicit Matrix(std::size_t n);
  Matrix(std::initializer_list<std::initializer_list<int>> rows);

  static Matrix identity(std::size_t n);

  std::size_t size() const { return rows_.size(); }
  bool get(std::size_t i, std::size_t j) const { return (rows_.at(i) >> j) & 1U; }
  void set(std::size_t i, std::size_t j, bool value);
  std::uint64_t row(std::size_t i) const { return rows_.at(i); }

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

private:
  std::vector<std::uint64_t> rows_;
};

std::size_t rank(const Matrix& m);
inline std::size_t corank(const Matrix& m) { return m.size() - rank(m); }

/// True iff rank equals dimension; the 0x0 matrix is nondegenerate.
inline bool is_nondegenerate(const Matrix& m) { return rank(m) == m.size(); }

/// Rows and columns restricted to `idx`, in the given order.
Matrix principal_submatrix(const Matrix& m, std::span<const std::size_t> idx);

/// Same, with the index set given as a bitmask over 0..n-1 (ascending order).
Matrix principal_submatrix(const Matrix& m, std::uint64_t mask);

/// Symmetric adjacency matrix with zero diagonal.
Matrix adjacency(const SimpleGraph& g);

}  // namespace tpoly::gf2
