#pragma once

#include "tpoly/delta_matroid.hpp"
#include "tpoly/ribbon_graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace tpoly::checks {

/// Outcome of one identity check over a family of instances.
struct Report {
  std::string name;
  bool passed = true;
  std::size_t instances = 0;
  std::string unit;            // what an instance is, for the summary line
  Integer max_residual = 0;    // largest |coefficient| of any residual polynomial
  std::string counterexample;  // first violating instance, in its input format
};

/// "PASS chord-4t: 8 diagrams, max residual 0", followed by the
/// counterexample block when the check failed.
std::string format(const Report& r);

inline constexpr int kMaxChords = 6;
inline constexpr std::size_t kMaxEdges = 5;

/// One-vertex graphs with every twist plus connected 2-3 vertex graphs.
std::vector<ribbon::RibbonGraph> ribbon_instances(std::size_t max_edges);

/// Four-term sum of every diagram with 1..max_n chords at every adjacent
/// position, under both conventions.
Report chord_4t(int max_n);

/// corank of the interlacement matrix + 1 = all-Chi boundary count.
Report corank(int max_n);

/// Ribbon four-term sum on every neighboring pair of ends.
Report ribbon_4t(std::size_t max_edges);

/// Q(D(R)) = Q(R) over ribbon_instances(max_edges).
Report qdr(std::size_t max_edges);

/// Q(D) = Q(R) and D = D(R) for one given pair.
std::vector<Report> qdr_on(const ribbon::RibbonGraph& r, const std::optional<dm::SetSystem>& d);

/// Delta-matroid four-term sum for all ordered pairs, on D(R) for
/// ribbon_instances(max_edges) and on every partial dual when |E| <= 3.
Report dm_4t(std::size_t max_edges);

/// Exchange axiom and four-term sum over all ordered pairs of one system.
std::vector<Report> dm_4t_on(const dm::SetSystem& d);

}  // namespace tpoly::checks
