#include "tpoly/checks.hpp"
#include "tpoly/chord_diagram.hpp"
#include "tpoly/delta_matroid.hpp"
#include "tpoly/ribbon_graph.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

using namespace tpoly;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const std::vector<checks::Report>& reports) {
  bool ok = true;
  for (const auto& r : reports) {
    std::cout << checks::format(r);
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transition polynomial Q on chord diagrams, ribbon graphs and delta-matroids"};
  app.require_subcommand(1);

  auto* chord_cmd = app.add_subcommand("chord", "chord diagrams")->require_subcommand(1);
  auto* chord_q = chord_cmd->add_subcommand("q", "print Q of a double-occurrence word");
  std::string word;
  std::string convention = "sec4";
  chord_q->add_option("word", word, "e.g. abab or \"0 1 0 1\"")->required();
  chord_q->add_option("--convention", convention, "weight convention")
      ->check(CLI::IsMember({"sec4", "sec23"}));

  auto* ribbon_cmd = app.add_subcommand("ribbon", "ribbon graphs")->require_subcommand(1);
  auto* ribbon_q = ribbon_cmd->add_subcommand("q", "print Q of a ribbon graph file");
  std::string ribbon_file;
  ribbon_q->add_option("file", ribbon_file)->required();

  auto* dm_cmd = app.add_subcommand("dm", "delta-matroids")->require_subcommand(1);
  auto* dm_q = dm_cmd->add_subcommand("q", "print Q of a delta-matroid file");
  std::string dm_file;
  dm_q->add_option("file", dm_file)->required();

  auto* check = app.add_subcommand("check", "exhaustive verification")->require_subcommand(1);
  int max_n = 0;
  std::size_t max_edges = 0;
  std::string input, dm_input;

  auto* c_chord = check->add_subcommand("chord-4t", "four-term relation on chord diagrams");
  c_chord->add_option("--max-n", max_n)->required();
  auto* c_corank = check->add_subcommand("corank", "corank + 1 = boundary count");
  c_corank->add_option("--max-n", max_n)->required();
  auto* c_ribbon = check->add_subcommand("ribbon-4t", "four-term relation on ribbon graphs");
  c_ribbon->add_option("--max-edges", max_edges)->required();
  auto* c_dm = check->add_subcommand("dm-4t", "four-term relation on delta-matroids");
  auto* dm_edges = c_dm->add_option("--max-edges", max_edges);
  c_dm->add_option("--input", input, "check one delta-matroid file instead")->excludes(dm_edges);
  auto* c_qdr = check->add_subcommand("qdr", "Q(D(R)) = Q(R)");
  auto* qdr_edges = c_qdr->add_option("--max-edges", max_edges);
  auto* qdr_input =
      c_qdr->add_option("--input", input, "check one ribbon graph file instead")->excludes(qdr_edges);
  c_qdr->add_option("--dm", dm_input, "delta-matroid file claimed to be D(R)")->needs(qdr_input);
  auto* c_all = check->add_subcommand("all", "every suite");
  c_all->add_option("--max-n", max_n)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (chord_q->parsed()) {
      const auto conv = convention == "sec23" ? Convention::Sec23 : Convention::Sec4;
      std::cout << chord::q_chord(chord::Word::parse(word), conv) << '\n';
      return 0;
    }
    if (ribbon_q->parsed()) {
      std::cout << ribbon::q_ribbon(ribbon::parse_ribbon(slurp(ribbon_file))) << '\n';
      return 0;
    }
    if (dm_q->parsed()) {
      std::cout << dm::q_dm(dm::parse_set_system(slurp(dm_file))) << '\n';
      return 0;
    }
    if (c_chord->parsed()) return emit({checks::chord_4t(max_n)});
    if (c_corank->parsed()) return emit({checks::corank(max_n)});
    if (c_ribbon->parsed()) return emit({checks::ribbon_4t(max_edges)});
    if (c_dm->parsed()) {
      if (!input.empty()) return emit(checks::dm_4t_on(dm::parse_set_system(slurp(input))));
      if (!*dm_edges) throw std::invalid_argument("dm-4t needs --max-edges or --input");
      return emit({checks::dm_4t(max_edges)});
    }
    if (c_qdr->parsed()) {
      if (!input.empty()) {
        std::optional<dm::SetSystem> d;
        if (!dm_input.empty()) d = dm::parse_set_system(slurp(dm_input));
        return emit(checks::qdr_on(ribbon::parse_ribbon(slurp(input)), d));
      }
      if (!*qdr_edges) throw std::invalid_argument("qdr needs --max-edges or --input");
      return emit({checks::qdr(max_edges)});
    }
    if (c_all->parsed()) {
      if (max_n < 1 || max_n > checks::kMaxChords)
        throw std::out_of_range("--max-n must be in 1.." + std::to_string(checks::kMaxChords));
      const std::size_t edges = std::min<std::size_t>(static_cast<std::size_t>(max_n), checks::kMaxEdges);
      return emit({checks::chord_4t(max_n), checks::corank(max_n), checks::ribbon_4t(edges),
                   checks::qdr(edges), checks::dm_4t(edges)});
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
