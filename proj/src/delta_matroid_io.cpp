#include "tpoly/delta_matroid.hpp"

#include <sstream>
#include <stdexcept>

namespace tpoly::dm {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw std::invalid_argument("delta-matroid file line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

SetSystem parse_set_system(std::string_view text) {
  std::vector<std::string> ground;
  bool have_ground = false;
  std::string feasible_text;
  std::size_t feasible_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t lineno = 1; std::getline(in, raw); ++lineno) {
    const std::string line = raw.substr(0, raw.find('#'));
    if (words(line).empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(lineno, "missing ':'");
    const auto key = words(line.substr(0, colon));
    if (key.size() != 1) fail(lineno, "expected 'ground:' or 'feasible:'");
    const std::string body = line.substr(colon + 1);
    if (key[0] == "ground") {
      if (have_ground) fail(lineno, "duplicate ground line");
      have_ground = true;
      ground = words(body);
    } else if (key[0] == "feasible") {
      if (feasible_line) fail(lineno, "duplicate feasible line");
      feasible_line = lineno;
      feasible_text = body;
    } else {
      fail(lineno, "unknown keyword '" + key[0] + "'");
    }
  }
  if (!have_ground) fail(0, "missing ground line");
  if (!feasible_line) fail(0, "missing feasible line");
  if (ground.size() > SetSystem::kMaxGround) fail(0, "ground set too large");

  std::vector<Mask> feasible;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < feasible_text.size() &&
           (feasible_text[pos] == ' ' || feasible_text[pos] == '\t' || feasible_text[pos] == '\r'))
      ++pos;
  };
  skip();
  while (pos < feasible_text.size()) {
    if (feasible_text[pos] != '{') fail(feasible_line, "expected '{'");
    const auto close = feasible_text.find('}', pos);
    if (close == std::string::npos) fail(feasible_line, "unclosed '{'");
    std::string inner = feasible_text.substr(pos + 1, close - pos - 1);
    for (char& ch : inner)
      if (ch == ',') ch = ' ';
    Mask f = 0;
    for (const auto& name : words(inner)) {
      std::size_t idx = ground.size();
      for (std::size_t i = 0; i < ground.size(); ++i)
        if (ground[i] == name) idx = i;
      if (idx == ground.size()) fail(feasible_line, "element " + name + " not in ground");
      f |= Mask{1} << idx;
    }
    feasible.push_back(f);
    pos = close + 1;
    skip();
    if (pos < feasible_text.size()) {
      if (feasible_text[pos] != ',') fail(feasible_line, "expected ',' between sets");
      ++pos;
      skip();
    }
  }
  return SetSystem(std::move(ground), std::move(feasible));
}

std::string to_text(const SetSystem& s) {
  std::string out = "ground:";
  for (const auto& g : s.ground()) out += " " + g;
  out += "\nfeasible:";
  bool first = true;
  for (Mask f : s.feasible()) {
    out += first ? " {" : ", {";
    first = false;
    bool first_elem = true;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (f & (Mask{1} << i)) {
        if (!first_elem) out += ' ';
        out += s.ground()[i];
        first_elem = false;
      }
    out += '}';
  }
  out += '\n';
  return out;
}

}  // namespace tpoly::dm
