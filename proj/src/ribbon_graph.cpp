#include "tpoly/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tpoly::ribbon {

RibbonGraph::RibbonGraph(std::vector<Vertex> vertices, std::vector<Edge> edges,
                         std::vector<std::string> half_edge_names)
    : vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      half_edge_names_(std::move(half_edge_names)) {
  if (half_edge_names_.empty()) {
    for (std::size_t h = 0; h < half_edge_count(); ++h)
      half_edge_names_.push_back("h" + std::to_string(h));
  }
  if (half_edge_names_.size() != half_edge_count())
    throw std::invalid_argument("ribbon graph: half-edge name count mismatch");
  index();
}

void RibbonGraph::index() {
  const std::size_t nh = half_edge_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  edge_of_.assign(nh, unset);
  vertex_of_.assign(nh, unset);
  slot_of_.assign(nh, unset);
  auto check = [nh](HalfEdge h) {
    if (h < 0 || static_cast<std::size_t>(h) >= nh)
      throw std::invalid_argument("ribbon graph: half-edge id out of range");
  };
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    for (HalfEdge h : {edges_[e].first, edges_[e].second}) {
      check(h);
      if (edge_of_[h] != unset)
        throw std::invalid_argument("ribbon graph: half-edge in two edges");
      edge_of_[h] = e;
    }
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    const auto& rot = vertices_[v].rotation;
    for (std::size_t k = 0; k < rot.size(); ++k) {
      check(rot[k]);
      if (vertex_of_[rot[k]] != unset)
        throw std::invalid_argument("ribbon graph: half-edge at two vertices");
      vertex_of_[rot[k]] = v;
      slot_of_[rot[k]] = k;
    }
  }
  for (std::size_t h = 0; h < nh; ++h)
    if (vertex_of_[h] == unset)
      throw std::invalid_argument("ribbon graph: half-edge " + half_edge_names_[h] +
                                  " not attached to a vertex");
}

HalfEdge RibbonGraph::partner(HalfEdge h) const {
  const Edge& e = edges_.at(edge_of(h));
  return e.first == h ? e.second : e.first;
}

HalfEdge RibbonGraph::successor(HalfEdge h) const {
  const auto& rot = vertices_[vertex_of(h)].rotation;
  return rot[(slot_of(h) + 1) % rot.size()];
}

HalfEdge RibbonGraph::predecessor(HalfEdge h) const {
  const auto& rot = vertices_[vertex_of(h)].rotation;
  return rot[(slot_of(h) + rot.size() - 1) % rot.size()];
}

RibbonGraph from_chord_state(const chord::Word& w, std::span<const Greek> state) {
  if (state.size() != w.chord_count())
    throw std::invalid_argument("from_chord_state: state does not cover every chord");
  std::vector<int> half_at(w.size(), -1);
  Vertex v{"v", {}};
  std::vector<std::string> names;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (state[w[p]] == Greek::Phi) continue;
    half_at[p] = static_cast<int>(names.size());
    v.rotation.push_back(half_at[p]);
    names.push_back("p" + std::to_string(p));
  }
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < w.chord_count(); ++c) {
    if (state[c] == Greek::Phi) continue;
    auto [i, j] = w.ends(static_cast<int>(c));
    edges.push_back({"c" + std::to_string(c), half_at[i], half_at[j], state[c] == Greek::Psi});
  }
  return RibbonGraph({std::move(v)}, std::move(edges), std::move(names));
}

RibbonGraph from_chord_word(const chord::Word& w, std::uint64_t twist_mask) {
  chord::TransitionState state(w.chord_count());
  for (std::size_t c = 0; c < state.size(); ++c)
    state[c] = ((twist_mask >> c) & 1U) ? Greek::Psi : Greek::Chi;
  return from_chord_state(w, state);
}

std::size_t boundary_components(const RibbonGraph& r) {
  // Side 2h is the side of half-edge h facing its predecessor, 2h + 1 the
  // side facing its successor.
  const std::size_t nh = r.half_edge_count();
  std::vector<std::size_t> corner(2 * nh), band(2 * nh);
  std::size_t isolated = 0;
  for (const Vertex& v : r.vertices()) {
    const auto& rot = v.rotation;
    if (rot.empty()) {
      ++isolated;
      continue;
    }
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const std::size_t plus = 2 * rot[k] + 1;
      const std::size_t minus = 2 * rot[(k + 1) % rot.size()];
      corner[plus] = minus;
      corner[minus] = plus;
    }
  }
  for (const Edge& e : r.edges()) {
    const std::size_t hm = 2 * e.first, hp = hm + 1;
    const std::size_t km = 2 * e.second, kp = km + 1;
    if (e.twisted) {
      band[hp] = kp, band[kp] = hp;
      band[hm] = km, band[km] = hm;
    } else {
      band[hp] = km, band[km] = hp;
      band[hm] = kp, band[kp] = hm;
    }
  }
  std::vector<bool> seen(2 * nh, false);
  std::size_t cycles = 0;
  for (std::size_t start = 0; start < 2 * nh; ++start) {
    if (seen[start]) continue;
    ++cycles;
    std::size_t s = start;
    do {
      seen[s] = true;
      const std::size_t across = corner[s];
      seen[across] = true;
      s = band[across];
    } while (s != start);
  }
  return cycles + isolated;
}

namespace {

// Rebuilds a graph from a subset of edges (with optional twist overrides),
// renumbering half-edges densely and preserving names.
RibbonGraph restrict_edges(const RibbonGraph& r, const std::vector<bool>& keep,
                           const std::vector<bool>& twist) {
  std::vector<int> remap(r.half_edge_count(), -1);
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t e = 0; e < r.edge_count(); ++e) {
    if (!keep[e]) continue;
    const Edge& old = r.edges()[e];
    for (HalfEdge h : {old.first, old.second}) {
      remap[h] = static_cast<int>(names.size());
      names.push_back(r.half_edge_names()[h]);
    }
    edges.push_back({old.name, remap[old.first], remap[old.second], twist[e]});
  }
  std::vector<Vertex> vertices;
  for (const Vertex& v : r.vertices()) {
    Vertex nv{v.name, {}};
    for (HalfEdge h : v.rotation)
      if (remap[h] >= 0) nv.rotation.push_back(remap[h]);
    vertices.push_back(std::move(nv));
  }
  return RibbonGraph(std::move(vertices), std::move(edges), std::move(names));
}

std::vector<bool> twist_bits(const RibbonGraph& r) {
  std::vector<bool> out;
  for (const Edge& e : r.edges()) out.push_back(e.twisted);
  return out;
}

}  // namespace

RibbonGraph spanning_subgraph(const RibbonGraph& r, std::uint64_t edge_mask) {
  std::vector<bool> keep(r.edge_count());
  for (std::size_t e = 0; e < keep.size(); ++e) keep[e] = (edge_mask >> e) & 1U;
  return restrict_edges(r, keep, twist_bits(r));
}

RibbonGraph apply_state(const RibbonGraph& r, std::span<const Greek> state) {
  if (state.size() != r.edge_count())
    throw std::invalid_argument("apply_state: state does not cover every edge");
  std::vector<bool> keep(r.edge_count()), twist = twist_bits(r);
  for (std::size_t e = 0; e < keep.size(); ++e) {
    keep[e] = state[e] != Greek::Phi;
    if (state[e] == Greek::Psi) twist[e] = !twist[e];
  }
  return restrict_edges(r, keep, twist);
}

Polynomial q_ribbon(const RibbonGraph& r) {
  const std::size_t n = r.edge_count();
  // c(R(L)) <= V + 2E, so x-degree stays below V + 2E.
  StateSumAccumulator acc(n, n, r.vertex_count() + 2 * n);
  chord::for_each_state(n, [&](const EdgeState& state) {
    std::size_t phi = 0, psi = 0;
    for (Greek g : state) {
      phi += g == Greek::Phi;
      psi += g == Greek::Psi;
    }
    const std::size_t c = boundary_components(apply_state(r, state));
    acc.add(phi, n - phi, c - 1, psi % 2 ? -1 : 1);
  });
  return acc.finish();
}

bool is_connected(const RibbonGraph& r) {
  const std::size_t nv = r.vertex_count();
  if (nv == 0) return true;
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = nv;
  for (const Edge& e : r.edges()) {
    std::size_t a = find(r.vertex_of(e.first)), b = find(r.vertex_of(e.second));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

RibbonGraph first_move(const RibbonGraph& r, HalfEdge h) {
  const HalfEdge next = r.successor(h);
  if (next == h || r.edge_of(next) == r.edge_of(h))
    throw PreconditionError("ribbon first_move: neighboring ends belong to the same ribbon");
  std::vector<Vertex> vertices = r.vertices();
  auto& rot = vertices[r.vertex_of(h)].rotation;
  std::swap(rot[r.slot_of(h)], rot[r.slot_of(next)]);
  return RibbonGraph(std::move(vertices), r.edges(), r.half_edge_names());
}

SlideResult handle_slide(const RibbonGraph& r, HalfEdge a_end, HalfEdge b_end, Side side) {
  const bool adjacent =
      side == Side::Before ? r.successor(a_end) == b_end : r.successor(b_end) == a_end;
  if (!adjacent || a_end == b_end)
    throw PreconditionError("handle_slide: ends are not neighbors in a rotation");
  const std::size_t a = r.edge_of(a_end), b = r.edge_of(b_end);
  if (a == b) throw PreconditionError("handle_slide: a and b are the same ribbon");

  const bool b_twisted = r.edges()[b].twisted;
  const HalfEdge far = r.partner(b_end);
  // Travelling along an untwisted band swaps which side of the end we are on.
  const Side arrival = b_twisted ? side : (side == Side::Before ? Side::After : Side::Before);

  std::vector<Vertex> vertices = r.vertices();
  auto& from = vertices[r.vertex_of(a_end)].rotation;
  from.erase(from.begin() + static_cast<std::ptrdiff_t>(r.slot_of(a_end)));
  auto& to = vertices[r.vertex_of(far)].rotation;
  auto at = std::find(to.begin(), to.end(), far);
  if (arrival == Side::After) ++at;
  to.insert(at, a_end);

  std::vector<Edge> edges = r.edges();
  edges[a].twisted = edges[a].twisted != b_twisted;
  return {RibbonGraph(std::move(vertices), std::move(edges), r.half_edge_names()), arrival};
}

Polynomial four_term_ribbon(const RibbonGraph& r, HalfEdge a_end, HalfEdge b_end) {
  if (r.successor(a_end) != b_end || a_end == b_end)
    throw PreconditionError("four_term_ribbon: b_end must follow a_end in its rotation");
  if (r.edge_of(a_end) == r.edge_of(b_end))
    throw PreconditionError("four_term_ribbon: a and b are the same ribbon");

  const RibbonGraph exchanged = first_move(r, a_end);
  const SlideResult slid = handle_slide(r, a_end, b_end, Side::Before);
  const HalfEdge far = r.partner(b_end);
  const RibbonGraph both = first_move(slid.graph, slid.side == Side::After ? far : a_end);

  Polynomial sum = q_ribbon(r);
  sum -= q_ribbon(exchanged);
  sum -= q_ribbon(slid.graph);
  sum += q_ribbon(both);
  return sum;
}

namespace {

// Traversal code of the component containing `root`, reading each vertex's
// rotation from the half-edge through which it was reached.
std::string rooted_code(const RibbonGraph& r, HalfEdge root) {
  std::vector<int> label(r.half_edge_count(), -1);
  std::vector<HalfEdge> start(r.vertex_count(), -1);
  std::vector<std::size_t> queue{r.vertex_of(root)};
  start[r.vertex_of(root)] = root;
  int next = 0;
  std::string code;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const std::size_t v = queue[qi];
    const auto& rot = r.vertices()[v].rotation;
    const std::size_t s = r.slot_of(start[v]);
    code += '(';
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const HalfEdge h = rot[(s + k) % rot.size()];
      if (label[h] < 0) label[h] = next++;
      const HalfEdge p = r.partner(h);
      if (label[p] < 0) label[p] = next++;
      const std::size_t pv = r.vertex_of(p);
      if (start[pv] < 0) {
        start[pv] = p;
        queue.push_back(pv);
      }
      code += std::to_string(label[h]) + ':' + std::to_string(label[p]) +
              (r.edges()[r.edge_of(h)].twisted ? 't' : 'u') + ',';
    }
    code += ')';
  }
  return code;
}

}  // namespace

std::string canonical_code(const RibbonGraph& r) {
  std::vector<std::string> components;
  std::vector<bool> done(r.vertex_count(), false);
  for (std::size_t v = 0; v < r.vertex_count(); ++v) {
    if (done[v]) continue;
    const auto& rot = r.vertices()[v].rotation;
    if (rot.empty()) {
      done[v] = true;
      components.emplace_back("()");
      continue;
    }
    // Collect the component's half-edges, then minimize over roots.
    std::vector<std::size_t> stack{v};
    std::vector<HalfEdge> halves;
    done[v] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (HalfEdge h : r.vertices()[u].rotation) {
        halves.push_back(h);
        const std::size_t pv = r.vertex_of(r.partner(h));
        if (!done[pv]) {
          done[pv] = true;
          stack.push_back(pv);
        }
      }
    }
    std::string best;
    for (HalfEdge h : halves) {
      std::string code = rooted_code(r, h);
      if (best.empty() || code < best) best = std::move(code);
    }
    components.push_back(std::move(best));
  }
  std::sort(components.begin(), components.end());
  std::string out;
  for (const auto& c : components) out += c + ';';
  return out;
}

}  // namespace tpoly::ribbon
