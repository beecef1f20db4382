#pragma once

#include "tpoly/chord_diagram.hpp"
#include "tpoly/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tpoly::ribbon {

using HalfEdge = int;

struct Vertex {
  std::string name;
  std::vector<HalfEdge> rotation;  // cyclic order
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string name;
  HalfEdge first;
  HalfEdge second;
  bool twisted = false;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Signed rotation system: vertices carry cyclic orders of half-edges, edges
/// pair half-edges and carry a twist bit. Half-edges are numbered
/// 0..2E-1 and each appears in exactly one rotation and one edge.
class RibbonGraph {
public:
  RibbonGraph() = default;
  /// Throws std::invalid_argument if the half-edge incidences are inconsistent.
  RibbonGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
              std::vector<std::string> half_edge_names = {});

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& half_edge_names() const { return half_edge_names_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t half_edge_count() const { return 2 * edges_.size(); }

  std::size_t edge_of(HalfEdge h) const { return edge_of_.at(h); }
  std::size_t vertex_of(HalfEdge h) const { return vertex_of_.at(h); }
  std::size_t slot_of(HalfEdge h) const { return slot_of_.at(h); }
  HalfEdge partner(HalfEdge h) const;
  HalfEdge successor(HalfEdge h) const;
  HalfEdge predecessor(HalfEdge h) const;

  friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

private:
  void index();

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::string> half_edge_names_;
  std::vector<std::size_t> edge_of_, vertex_of_, slot_of_;
};

using EdgeState = std::vector<Greek>;  // indexed by edge

/// One-vertex ribbon graph of a marked chord diagram: Phi chords dropped,
/// Chi chords become untwisted ribbons and Psi chords twisted ones.
RibbonGraph from_chord_state(const chord::Word& w, std::span<const Greek> state);

/// One-vertex ribbon graph with every chord a ribbon, twisted where the bit
/// of `twist_mask` for that chord is set.
RibbonGraph from_chord_word(const chord::Word& w, std::uint64_t twist_mask = 0);

/// Number of boundary circles; an isolated vertex contributes one.
std::size_t boundary_components(const RibbonGraph& r);

/// Keeps all vertices and the edges whose bit is set in `edge_mask`.
RibbonGraph spanning_subgraph(const RibbonGraph& r, std::uint64_t edge_mask);

/// Erases Phi edges and toggles the twist of Psi edges.
RibbonGraph apply_state(const RibbonGraph& r, std::span<const Greek> state);

/// Sum over the 3^E edge states of s^|Phi| t^|Chi| (-t)^|Psi| x^(c(R(L)) - 1).
Polynomial q_ribbon(const RibbonGraph& r);

bool is_connected(const RibbonGraph& r);
inline std::size_t vertex_count(const RibbonGraph& r) { return r.vertex_count(); }

/// Transposes `h` and its successor in their vertex rotation. The two must
/// belong to different edges.
RibbonGraph first_move(const RibbonGraph& r, HalfEdge h);

struct SlideResult {
  RibbonGraph graph;
  /// Side of the slid end relative to the far end of b after the slide.
  Side side;
};

/// Slides the end `a_end` of ribbon a along ribbon b, starting from the end
/// `b_end` it neighbors (Side::Before: b_end follows a_end in the rotation;
/// Side::After: a_end follows b_end). The end travels along one side of b and
/// re-attaches next to b's far end on that side, which flips to the other
/// side of the far end when b is untwisted. a's twist is XOR-ed with b's.
SlideResult handle_slide(const RibbonGraph& r, HalfEdge a_end, HalfEdge b_end,
                         Side side = Side::Before);

/// Q(R) - Q(R') - Q(R~) + Q(R~') for neighboring ends a_end, b_end (b_end
/// the successor of a_end): R' exchanges the two ends, R~ slides a along b
/// and R~' exchanges the slid end with the far end of b.
Polynomial four_term_ribbon(const RibbonGraph& r, HalfEdge a_end, HalfEdge b_end);

/// Isomorphism-invariant string: equal for graphs related by relabeling
/// half-edges, edges and vertices and by rotating cyclic orders. Vertex
/// flips are not quotiented. Cost is quadratic in the half-edge count.
std::string canonical_code(const RibbonGraph& r);

/// Line-based text format:
///   vertex <name>: h1 h2 ... hk
///   edge <name>: hi hj twist=<0|1>
/// with '#' comments.
RibbonGraph parse_ribbon(std::string_view text);
std::string to_text(const RibbonGraph& r);

/// Connected ribbon graphs with vertex count in [min_vertices, max_vertices]
/// and at most max_edges edges, every twist assignment, one representative
/// per canonical_code, in a deterministic order.
std::vector<RibbonGraph> enumerate_connected(std::size_t min_vertices, std::size_t max_vertices,
                                             std::size_t max_edges);

/// Every one-vertex graph from a chord diagram with 1..max_edges chords and
/// every twist assignment.
std::vector<RibbonGraph> enumerate_one_vertex(std::size_t max_edges);

}  // namespace tpoly::ribbon
