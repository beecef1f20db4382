#include "tpoly/ribbon_graph.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace tpoly::ribbon {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw std::invalid_argument("ribbon file line " + std::to_string(line) + ": " + msg);
}

}  // namespace

RibbonGraph parse_ribbon(std::string_view text) {
  struct PendingEdge {
    std::string name, h1, h2;
    bool twisted;
    std::size_t line;
  };
  std::vector<Vertex> vertices;
  std::vector<PendingEdge> pending;
  std::map<std::string, HalfEdge> ids;
  std::vector<std::string> names;

  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(lineno, "missing ':'");
    std::istringstream head(line.substr(0, colon));
    std::string keyword, name, extra;
    head >> keyword >> name;
    if (name.empty() || (head >> extra)) fail(lineno, "expected '<keyword> <name>:'");
    std::istringstream body(line.substr(colon + 1));
    std::vector<std::string> tokens;
    for (std::string tok; body >> tok;) tokens.push_back(tok);

    if (keyword == "vertex") {
      Vertex v{name, {}};
      for (const auto& tok : tokens) {
        auto [it, inserted] = ids.try_emplace(tok, static_cast<HalfEdge>(names.size()));
        if (!inserted) fail(lineno, "half-edge " + tok + " appears at two vertex positions");
        names.push_back(tok);
        v.rotation.push_back(it->second);
      }
      vertices.push_back(std::move(v));
    } else if (keyword == "edge") {
      bool twisted = false;
      if (tokens.size() == 3) {
        if (tokens[2] == "twist=1")
          twisted = true;
        else if (tokens[2] != "twist=0")
          fail(lineno, "expected twist=0 or twist=1");
      } else if (tokens.size() != 2) {
        fail(lineno, "edge needs two half-edges");
      }
      pending.push_back({name, tokens[0], tokens[1], twisted, lineno});
    } else {
      fail(lineno, "unknown keyword '" + keyword + "'");
    }
  }

  std::vector<Edge> edges;
  std::vector<bool> used(names.size(), false);
  for (const auto& pe : pending) {
    Edge e{pe.name, -1, -1, pe.twisted};
    for (auto [tok, slot] : {std::pair{pe.h1, &e.first}, std::pair{pe.h2, &e.second}}) {
      auto it = ids.find(tok);
      if (it == ids.end()) fail(pe.line, "half-edge " + tok + " is not at any vertex");
      if (used[it->second]) fail(pe.line, "half-edge " + tok + " used by two edges");
      used[it->second] = true;
      *slot = it->second;
    }
    edges.push_back(std::move(e));
  }
  for (std::size_t h = 0; h < names.size(); ++h)
    if (!used[h]) throw std::invalid_argument("ribbon file: half-edge " + names[h] + " has no edge");

  // Renumber so that edge k owns half-edges 2k and 2k + 1.
  std::vector<HalfEdge> renumber(names.size());
  std::vector<std::string> ordered(names.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    renumber[edges[k].first] = static_cast<HalfEdge>(2 * k);
    renumber[edges[k].second] = static_cast<HalfEdge>(2 * k + 1);
  }
  for (std::size_t h = 0; h < names.size(); ++h) ordered[renumber[h]] = names[h];
  for (auto& e : edges) e.first = renumber[e.first], e.second = renumber[e.second];
  for (auto& v : vertices)
    for (auto& h : v.rotation) h = renumber[h];
  return RibbonGraph(std::move(vertices), std::move(edges), std::move(ordered));
}

std::string to_text(const RibbonGraph& r) {
  std::ostringstream out;
  for (const Vertex& v : r.vertices()) {
    out << "vertex " << v.name << ":";
    for (HalfEdge h : v.rotation) out << ' ' << r.half_edge_names()[h];
    out << '\n';
  }
  for (const Edge& e : r.edges()) {
    out << "edge " << e.name << ": " << r.half_edge_names()[e.first] << ' '
        << r.half_edge_names()[e.second] << " twist=" << (e.twisted ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace tpoly::ribbon
