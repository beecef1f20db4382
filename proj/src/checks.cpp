#include "tpoly/checks.hpp"

#include "tpoly/chord_diagram.hpp"
#include "tpoly/gf2.hpp"

#include <sstream>
#include <stdexcept>

namespace tpoly::checks {

namespace {

void require_chords(int max_n) {
  if (max_n < 1 || max_n > kMaxChords)
    throw std::out_of_range("--max-n must be in 1.." + std::to_string(kMaxChords));
}

void require_edges(std::size_t max_edges) {
  if (max_edges < 1 || max_edges > kMaxEdges)
    throw std::out_of_range("--max-edges must be in 1.." + std::to_string(kMaxEdges));
}

// Records one residual; the first nonzero one becomes the counterexample.
void record(Report& r, const Polynomial& residual, const std::string& instance) {
  ++r.instances;
  const Integer m = residual.max_abs_coefficient();
  if (m > r.max_residual) r.max_residual = m;
  if (!residual.is_zero() && r.passed) {
    r.passed = false;
    r.counterexample = instance + "residual: " + residual.to_text() + "\n";
  }
}

void record(Report& r, bool ok, const std::string& instance) {
  ++r.instances;
  if (!ok && r.passed) {
    r.passed = false;
    r.counterexample = instance;
  }
}

std::string chord_instance(const chord::Word& w, const std::string& extra) {
  return "word: " + w.to_text() + "\n" + extra;
}

}  // namespace

std::string format(const Report& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.instances << ' ' << r.unit
      << ", max residual " << r.max_residual << '\n';
  if (!r.passed) out << r.counterexample;
  return out.str();
}

std::vector<ribbon::RibbonGraph> ribbon_instances(std::size_t max_edges) {
  auto out = ribbon::enumerate_one_vertex(max_edges);
  auto multi = ribbon::enumerate_connected(2, 3, max_edges);
  out.insert(out.end(), multi.begin(), multi.end());
  return out;
}

Report chord_4t(int max_n) {
  require_chords(max_n);
  Report r{"chord-4t", true, 0, "diagrams", 0, {}};
  std::size_t diagrams = 0;
  for (int n = 1; n <= max_n; ++n)
    for (const auto& d : chord::enumerate(n)) {
      ++diagrams;
      for (const auto& pair : chord::adjacent_pairs(d))
        for (Convention conv : {Convention::Sec4, Convention::Sec23}) {
          const Polynomial res = chord::four_term_sum(d, pair.position, conv);
          std::string where = "position: " + std::to_string(pair.position) + "\nconvention: " +
                              (conv == Convention::Sec4 ? "sec4" : "sec23") + "\n";
          record(r, res, chord_instance(d, where));
        }
    }
  r.instances = diagrams;
  return r;
}

Report corank(int max_n) {
  require_chords(max_n);
  Report r{"corank", true, 0, "diagrams", 0, {}};
  for (int n = 1; n <= max_n; ++n)
    for (const auto& d : chord::enumerate(n)) {
      const std::size_t lhs =
          gf2::corank(gf2::adjacency(chord::intersection_graph(d))) + 1;
      const std::size_t rhs = ribbon::boundary_components(ribbon::from_chord_word(d));
      Polynomial diff;
      diff.add_term({0, 0, 0}, Integer(static_cast<long long>(lhs)) -
                                   Integer(static_cast<long long>(rhs)));
      record(r, diff, chord_instance(d, ""));
    }
  return r;
}

Report ribbon_4t(std::size_t max_edges) {
  require_edges(max_edges);
  Report r{"ribbon-4t", true, 0, "ribbon graphs", 0, {}};
  std::size_t graphs = 0;
  for (const auto& g : ribbon_instances(max_edges)) {
    ++graphs;
    for (ribbon::HalfEdge h = 0; h < static_cast<ribbon::HalfEdge>(g.half_edge_count()); ++h) {
      const ribbon::HalfEdge next = g.successor(h);
      if (g.edge_of(h) == g.edge_of(next)) continue;
      const std::string where = "# ends " + g.half_edge_names()[h] + " " +
                                g.half_edge_names()[next] + "\n";
      record(r, ribbon::four_term_ribbon(g, h, next), ribbon::to_text(g) + where);
    }
  }
  r.instances = graphs;
  return r;
}

Report qdr(std::size_t max_edges) {
  require_edges(max_edges);
  Report r{"qdr", true, 0, "ribbon graphs", 0, {}};
  for (const auto& g : ribbon_instances(max_edges))
    record(r, dm::q_dm(dm::from_ribbon_graph(g)) - ribbon::q_ribbon(g), ribbon::to_text(g));
  return r;
}

std::vector<Report> qdr_on(const ribbon::RibbonGraph& g, const std::optional<dm::SetSystem>& d) {
  const dm::SetSystem derived = dm::from_ribbon_graph(g);
  const dm::SetSystem& used = d ? *d : derived;
  std::vector<Report> out;
  Report q{"qdr", true, 0, "ribbon graphs", 0, {}};
  record(q, dm::q_dm(used) - ribbon::q_ribbon(g), ribbon::to_text(g) + dm::to_text(used));
  out.push_back(std::move(q));
  if (d) {
    Report same{"dm-of-ribbon", true, 0, "ribbon graphs", 0, {}};
    record(same, *d == derived, dm::to_text(*d));
    out.push_back(std::move(same));
  }
  return out;
}

Report dm_4t(std::size_t max_edges) {
  require_edges(max_edges);
  Report r{"dm-4t", true, 0, "delta-matroids", 0, {}};
  std::size_t systems = 0;
  auto run = [&](const dm::SetSystem& d) {
    ++systems;
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = 0; b < d.size(); ++b) {
        if (a == b) continue;
        const std::string where = "# pair " + d.ground()[a] + " " + d.ground()[b] + "\n";
        record(r, dm::four_term_dm(d, a, b), dm::to_text(d) + where);
      }
  };
  for (const auto& g : ribbon_instances(max_edges)) {
    const dm::SetSystem d = dm::from_ribbon_graph(g);
    run(d);
    if (d.size() <= 3)
      for (dm::Mask a = 1; a <= d.full_mask(); ++a) run(dm::twist(d, a));
  }
  r.instances = systems;
  return r;
}

std::vector<Report> dm_4t_on(const dm::SetSystem& d) {
  Report sea{"sea", true, 0, "set systems", 0, {}};
  record(sea, !d.feasible().empty() && dm::validate_sea(d), dm::to_text(d));
  Report four{"dm-4t", true, 0, "set systems", 0, {}};
  if (d.feasible().empty()) return {sea};
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b) {
      if (a == b) continue;
      const std::string where = "# pair " + d.ground()[a] + " " + d.ground()[b] + "\n";
      record(four, dm::four_term_dm(d, a, b), dm::to_text(d) + where);
    }
  four.instances = 1;
  return {sea, four};
}

}  // namespace tpoly::checks
