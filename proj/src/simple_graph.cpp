#include "tpoly/simple_graph.hpp"

#include <stdexcept>

namespace tpoly {

SimpleGraph::SimpleGraph(std::size_t n) {
  if (n > kMaxVertices) throw std::invalid_argument("SimpleGraph: too many vertices");
  names_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  adj_.assign(n, 0);
}

SimpleGraph::SimpleGraph(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVertices) throw std::invalid_argument("SimpleGraph: too many vertices");
  adj_.assign(names_.size(), 0);
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("SimpleGraph: vertex out of range");
  if (u == v) throw std::invalid_argument("SimpleGraph: self-loop on " + names_[u]);
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertex_count(); ++u)
    for (std::size_t v = u + 1; v < vertex_count(); ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

}  // namespace tpoly
