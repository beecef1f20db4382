#include "tpoly/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace tpoly::gf2 {

Matrix::Matrix(std::size_t n) {
  if (n > kMaxDim) throw std::invalid_argument("gf2::Matrix: dimension exceeds 64");
  rows_.assign(n, 0);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<int>> rows) : Matrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw std::invalid_argument("gf2::Matrix: not square");
    std::size_t j = 0;
    for (int v : r) set(i, j++, (v & 1) != 0);
    ++i;
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, bool value) {
  if (j >= size()) throw std::out_of_range("gf2::Matrix: column out of range");
  const std::uint64_t bit = std::uint64_t{1} << j;
  if (value)
    rows_.at(i) |= bit;
  else
    rows_.at(i) &= ~bit;
}

Matrix Matrix::transpose() const {
  Matrix t(size());
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::uint64_t> rows(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) rows[i] = m.row(i);

  std::size_t r = 0;
  for (std::size_t col = 0; col < m.size() && r < rows.size(); ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    std::size_t pivot = r;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i)
      if (rows[i] & bit) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

Matrix principal_submatrix(const Matrix& m, std::span<const std::size_t> idx) {
  Matrix out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j)
      if (m.get(idx[i], idx[j])) out.set(i, j, true);
  return out;
}

Matrix principal_submatrix(const Matrix& m, std::uint64_t mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.size(); ++i)
    if ((mask >> i) & 1U) idx.push_back(i);
  return principal_submatrix(m, idx);
}

Matrix adjacency(const SimpleGraph& g) {
  Matrix m(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    m.set(u, v, true);
    m.set(v, u, true);
  }
  return m;
}

}  // namespace tpoly::gf2
