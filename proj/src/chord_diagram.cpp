#include "tpoly/chord_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace tpoly {

char greek_name(Greek g) {
  switch (g) {
    case Greek::Phi: return 'P';
    case Greek::Chi: return 'X';
    case Greek::Psi: return 'S';
  }
  return '?';
}

namespace chord {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.size() % 2 != 0) throw std::invalid_argument("chord word has odd length");
  std::vector<int> count(letters_.size() / 2, 0);
  for (int c : letters_) {
    if (c < 0 || static_cast<std::size_t>(c) >= count.size())
      throw std::invalid_argument("chord id " + std::to_string(c) + " out of range");
    ++count[c];
  }
  for (std::size_t c = 0; c < count.size(); ++c)
    if (count[c] != 2)
      throw std::invalid_argument("chord " + std::to_string(c) + " occurs " +
                                  std::to_string(count[c]) + " times");
}

Word Word::parse(std::string_view text) {
  std::vector<std::string> symbols;
  const bool spaced = std::any_of(text.begin(), text.end(),
                                  [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (spaced) {
    std::istringstream in{std::string(text)};
    for (std::string tok; in >> tok;) symbols.push_back(tok);
  } else {
    for (char ch : text) symbols.emplace_back(1, ch);
  }

  std::map<std::string, int> ids;
  std::vector<std::string> order;
  std::vector<int> letters;
  for (const auto& sym : symbols) {
    if (!std::all_of(sym.begin(), sym.end(),
                     [](char ch) { return std::isalnum(static_cast<unsigned char>(ch)); }))
      throw std::invalid_argument("invalid chord symbol '" + sym + "'");
    auto [it, inserted] = ids.try_emplace(sym, static_cast<int>(ids.size()));
    if (inserted) order.push_back(sym);
    letters.push_back(it->second);
  }
  std::vector<int> count(order.size(), 0);
  for (int c : letters) ++count[c];
  for (std::size_t c = 0; c < order.size(); ++c)
    if (count[c] != 2)
      throw std::invalid_argument("symbol " + order[c] + " occurs " +
                                  (count[c] == 1 ? std::string("once")
                                                 : std::to_string(count[c]) + " times"));
  return Word(std::move(letters));
}

std::pair<std::size_t, std::size_t> Word::ends(int chord) const {
  std::size_t first = letters_.size(), second = letters_.size();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] != chord) continue;
    if (first == letters_.size())
      first = i;
    else
      second = i;
  }
  if (second == letters_.size()) throw std::out_of_range("no such chord");
  return {first, second};
}

std::string Word::to_text() const {
  std::string out;
  if (chord_count() <= 26) {
    for (int c : letters_) out += static_cast<char>('a' + c);
    return out;
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(letters_[i]);
  }
  return out;
}

namespace {

std::vector<int> relabel_rotation(const std::vector<int>& w, std::size_t shift) {
  const std::size_t len = w.size();
  std::vector<int> map(len / 2, -1);
  std::vector<int> out(len);
  int next = 0;
  for (std::size_t k = 0; k < len; ++k) {
    int c = w[(k + shift) % len];
    if (map[c] < 0) map[c] = next++;
    out[k] = map[c];
  }
  return out;
}

std::vector<int> canonical_letters(const std::vector<int>& w) {
  std::vector<int> best = relabel_rotation(w, 0);
  for (std::size_t r = 1; r < w.size(); ++r) {
    auto cand = relabel_rotation(w, r);
    if (cand < best) best = std::move(cand);
  }
  return best;
}

void complete_matchings(std::vector<int>& w, int next, std::set<std::vector<int>>& out) {
  auto open = std::find(w.begin(), w.end(), -1);
  if (open == w.end()) {
    out.insert(canonical_letters(w));
    return;
  }
  *open = next;
  for (auto it = open + 1; it != w.end(); ++it) {
    if (*it != -1) continue;
    *it = next;
    complete_matchings(w, next + 1, out);
    *it = -1;
  }
  *open = -1;
}

}  // namespace

Diagram canonicalize(const Word& w) { return Diagram(Word(canonical_letters(w.letters()))); }

std::vector<Diagram> enumerate(int n) {
  if (n < 1 || n > 7) throw std::out_of_range("enumerate: n must be in 1..7");
  std::vector<int> w(2 * static_cast<std::size_t>(n), -1);
  std::set<std::vector<int>> classes;
  complete_matchings(w, 0, classes);
  std::vector<Diagram> out;
  out.reserve(classes.size());
  for (const auto& letters : classes) out.push_back(canonicalize(Word(letters)));
  return out;
}

SimpleGraph intersection_graph(const Word& w) {
  const std::size_t n = w.chord_count();
  SimpleGraph g(n);
  std::vector<std::pair<std::size_t, std::size_t>> ends(n);
  for (std::size_t c = 0; c < n; ++c) ends[c] = w.ends(static_cast<int>(c));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      auto [a1, a2] = ends[a];
      auto [b1, b2] = ends[b];
      const bool b1_inside = a1 < b1 && b1 < a2;
      const bool b2_inside = a1 < b2 && b2 < a2;
      if (b1_inside != b2_inside) g.add_edge(a, b);
    }
  return g;
}

Diagram multiply(const Diagram& a, const Diagram& b) {
  std::vector<int> letters = a.word().letters();
  const int shift = static_cast<int>(a.chord_count());
  for (int c : b.word().letters()) letters.push_back(c + shift);
  return canonicalize(Word(std::move(letters)));
}

std::vector<AdjacentPair> adjacent_pairs(const Word& w) {
  std::vector<AdjacentPair> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int a = w[i];
    const int b = w[(i + 1) % w.size()];
    if (a != b) out.push_back({i, a, b});
  }
  return out;
}

Word first_move(const Word& w, std::size_t i) {
  if (w.empty() || i >= w.size()) throw PreconditionError("first_move: position out of range");
  const std::size_t j = (i + 1) % w.size();
  if (w[i] == w[j]) throw PreconditionError("first_move: positions hold the same chord");
  std::vector<int> letters = w.letters();
  std::swap(letters[i], letters[j]);
  return Word(std::move(letters));
}

namespace {

std::size_t other_end(const Word& w, std::size_t pos) {
  auto [p, q] = w.ends(w[pos]);
  return pos == p ? q : p;
}

// Removes the letter at `from` and re-inserts it immediately after (or
// before) position `target` of the original word. Returns the new word and
// the new index of the letter that was at `target`.
std::pair<std::vector<int>, std::size_t> move_letter(const Word& w, std::size_t from,
                                                     std::size_t target, bool after) {
  std::vector<int> letters = w.letters();
  const int moved = letters[from];
  letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(from));
  const std::size_t anchor = target > from ? target - 1 : target;
  const std::size_t insert_at = after ? anchor + 1 : anchor;
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(insert_at), moved);
  return {std::move(letters), after ? anchor : anchor + 1};
}

}  // namespace

SlideResult slide_end(const Word& w, std::size_t i) {
  if (w.empty() || i >= w.size()) throw PreconditionError("second_move: position out of range");
  const std::size_t next = (i + 1) % w.size();
  if (w[i] == w[next]) throw PreconditionError("second_move: positions hold the same chord");
  const std::size_t far_b = other_end(w, next);
  auto [letters, anchor] = move_letter(w, i, far_b, /*after=*/true);
  return {Word(std::move(letters)), anchor};
}

Word second_move(const Word& w, std::size_t i, Side side) {
  if (side == Side::Before) return slide_end(w, i).word;
  if (w.empty() || i >= w.size()) throw PreconditionError("second_move: position out of range");
  const std::size_t a_pos = (i + 1) % w.size();
  if (w[i] == w[a_pos]) throw PreconditionError("second_move: positions hold the same chord");
  const std::size_t far_b = other_end(w, i);
  return Word(move_letter(w, a_pos, far_b, /*after=*/false).first);
}

std::size_t state_boundary_count(const Word& w, std::span<const Greek> state) {
  const std::size_t len = w.size();
  if (state.size() != w.chord_count())
    throw std::invalid_argument("state_boundary_count: state does not cover every chord");
  if (len == 0) return 1;

  // Endpoints: arc k runs from position k to k + 1; its tail is 2k, head 2k+1.
  const auto tail = [](std::size_t k) { return 2 * k; };
  const auto head = [len](std::size_t k) { return 2 * ((k + len - 1) % len) + 1; };  // entering k

  std::vector<std::size_t> transition(2 * len);
  for (std::size_t c = 0; c < w.chord_count(); ++c) {
    auto [i, j] = w.ends(static_cast<int>(c));
    const std::size_t in_i = head(i), out_i = tail(i), in_j = head(j), out_j = tail(j);
    auto pair = [&](std::size_t u, std::size_t v) {
      transition[u] = v;
      transition[v] = u;
    };
    switch (state[c]) {
      case Greek::Phi: pair(in_i, out_i); pair(in_j, out_j); break;
      case Greek::Chi: pair(in_i, out_j); pair(in_j, out_i); break;
      case Greek::Psi: pair(in_i, in_j); pair(out_i, out_j); break;
    }
  }

  std::vector<bool> seen(2 * len, false);
  std::size_t circles = 0;
  for (std::size_t start = 0; start < 2 * len; ++start) {
    if (seen[start]) continue;
    ++circles;
    std::size_t v = start;
    do {
      seen[v] = true;
      const std::size_t along = v ^ 1U;  // other endpoint of the same arc
      seen[along] = true;
      v = transition[along];
    } while (v != start);
  }
  return circles;
}

Polynomial q_chord(const Word& w, Convention conv) {
  const std::size_t n = w.chord_count();
  StateSumAccumulator acc(n, n, n);
  const Greek positive = conv == Convention::Sec4 ? Greek::Chi : Greek::Psi;
  for_each_state(n, [&](const TransitionState& state) {
    std::size_t phi = 0, negative = 0;
    for (Greek g : state) {
      if (g == Greek::Phi)
        ++phi;
      else if (g != positive)
        ++negative;
    }
    const std::size_t circles = state_boundary_count(w, state);
    acc.add(phi, n - phi, circles - 1, negative % 2 ? -1 : 1);
  });
  return acc.finish();
}

Polynomial four_term_sum(const Word& w, std::size_t i, Convention conv) {
  const Word exchanged = first_move(w, i);
  const SlideResult slid = slide_end(w, i);
  const Word both = first_move(slid.word, slid.anchor);
  Polynomial sum = q_chord(w, conv);
  sum -= q_chord(exchanged, conv);
  sum -= q_chord(slid.word, conv);
  sum += q_chord(both, conv);
  return sum;
}

}  // namespace chord
}  // namespace tpoly
