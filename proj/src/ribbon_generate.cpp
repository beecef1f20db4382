#include "tpoly/ribbon_graph.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tpoly::ribbon {

namespace {

using EndpointList = std::vector<std::pair<std::size_t, std::size_t>>;

bool connects(std::size_t nv, const EndpointList& ends) {
  std::vector<std::size_t> comp(nv);
  for (std::size_t v = 0; v < nv; ++v) comp[v] = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : ends) {
      const std::size_t m = std::min(comp[u], comp[v]);
      if (comp[u] != m || comp[v] != m) {
        comp[u] = comp[v] = m;
        changed = true;
      }
    }
  }
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

// Nondecreasing sequences of vertex pairs (u <= v), i.e. edge multisets.
void edge_multisets(std::size_t nv, std::size_t ne, std::size_t from, EndpointList& cur,
                    const std::function<void(const EndpointList&)>& emit) {
  if (cur.size() == ne) {
    emit(cur);
    return;
  }
  std::size_t index = 0;
  for (std::size_t u = 0; u < nv; ++u)
    for (std::size_t v = u; v < nv; ++v, ++index) {
      if (index < from) continue;
      cur.emplace_back(u, v);
      edge_multisets(nv, ne, index, cur, emit);
      cur.pop_back();
    }
}

// Every cyclic order of each vertex's half-edges (first entry fixed).
void rotations(std::vector<std::vector<HalfEdge>>& at, std::size_t v,
               const std::function<void()>& emit) {
  if (v == at.size()) {
    emit();
    return;
  }
  auto& rot = at[v];
  if (rot.size() <= 2) {
    rotations(at, v + 1, emit);
    return;
  }
  std::sort(rot.begin() + 1, rot.end());
  do {
    rotations(at, v + 1, emit);
  } while (std::next_permutation(rot.begin() + 1, rot.end()));
}

}  // namespace

std::vector<RibbonGraph> enumerate_connected(std::size_t min_vertices, std::size_t max_vertices,
                                             std::size_t max_edges) {
  std::vector<RibbonGraph> out;
  std::set<std::string> seen;
  for (std::size_t nv = std::max<std::size_t>(min_vertices, 1); nv <= max_vertices; ++nv) {
    for (std::size_t ne = nv - 1; ne <= max_edges; ++ne) {
      EndpointList cur;
      edge_multisets(nv, ne, 0, cur, [&](const EndpointList& ends) {
        if (!connects(nv, ends)) return;
        std::vector<std::vector<HalfEdge>> at(nv);
        for (std::size_t k = 0; k < ends.size(); ++k) {
          at[ends[k].first].push_back(static_cast<HalfEdge>(2 * k));
          at[ends[k].second].push_back(static_cast<HalfEdge>(2 * k + 1));
        }
        rotations(at, 0, [&] {
          for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ne); ++mask) {
            std::vector<Vertex> vertices;
            for (std::size_t v = 0; v < nv; ++v)
              vertices.push_back({"v" + std::to_string(v), at[v]});
            std::vector<Edge> edges;
            for (std::size_t k = 0; k < ne; ++k)
              edges.push_back({"e" + std::to_string(k), static_cast<HalfEdge>(2 * k),
                               static_cast<HalfEdge>(2 * k + 1), ((mask >> k) & 1U) != 0});
            RibbonGraph g(std::move(vertices), std::move(edges));
            if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
          }
        });
      });
    }
  }
  return out;
}

std::vector<RibbonGraph> enumerate_one_vertex(std::size_t max_edges) {
  std::vector<RibbonGraph> out;
  for (std::size_t n = 1; n <= max_edges; ++n)
    for (const auto& d : chord::enumerate(static_cast<int>(n)))
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        out.push_back(from_chord_word(d, mask));
  return out;
}

}  // namespace tpoly::ribbon
