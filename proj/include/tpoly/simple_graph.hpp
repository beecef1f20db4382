#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace tpoly {

/// Loopless undirected graph on at most 64 named vertices.
class SimpleGraph {
public:
  static constexpr std::size_t kMaxVertices = 64;

  SimpleGraph() = default;
  /// Vertices named "0", "1", ...
  explicit SimpleGraph(std::size_t n);
  explicit SimpleGraph(std::vector<std::string> names);

  /// Throws std::invalid_argument on a self-loop or an out-of-range vertex.
  void add_edge(std::size_t u, std::size_t v);

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  bool has_edge(std::size_t u, std::size_t v) const { return (adj_.at(u) >> v) & 1U; }
  std::uint64_t neighbors(std::size_t u) const { return adj_.at(u); }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> adj_;
};

}  // namespace tpoly
