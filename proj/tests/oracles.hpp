#pragma once

// Brute-force oracles shared by the unit tests and the acceptance suite.
// They work from the definitions directly and share no code with the library
// beyond the value types.

#include "tpoly/chord_diagram.hpp"
#include "tpoly/delta_matroid.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <vector>

namespace oracle {

using namespace tpoly;
using dm::Mask;
using dm::SetSystem;
using chord::Word;

// Walks the circle with an explicit direction; at a chord end Phi continues,
// Chi jumps to the partner end keeping direction, Psi jumps and reverses.
inline std::size_t walk_circles(const Word& w, const std::vector<Greek>& state) {
  const long len = static_cast<long>(w.size());
  if (len == 0) return 1;
  std::vector<long> partner(len);
  for (long p = 0; p < len; ++p) {
    auto [i, j] = w.ends(w[p]);
    partner[p] = static_cast<long>(p == static_cast<long>(i) ? j : i);
  }
  auto arc_of = [len](long from, int dir) { return dir > 0 ? from : (from - 1 + len) % len; };
  std::vector<bool> used(len, false);
  std::size_t circles = 0;
  for (long start = 0; start < len; ++start) {
    if (used[start]) continue;
    ++circles;
    long p = start;
    int dir = 1;
    while (!used[arc_of(p, dir)]) {
      used[arc_of(p, dir)] = true;
      p = (p + dir + len) % len;
      switch (state[w[p]]) {
        case Greek::Phi: break;
        case Greek::Chi: p = partner[p]; break;
        case Greek::Psi: p = partner[p]; dir = -dir; break;
      }
    }
  }
  return circles;
}

inline Polynomial q_chord(const Word& w, Convention conv) {
  Polynomial sum;
  chord::for_each_state(w.chord_count(), [&](const std::vector<Greek>& st) {
    Polynomial term(1);
    for (Greek g : st) {
      if (g == Greek::Phi) term *= Polynomial::s();
      else if ((g == Greek::Chi) == (conv == Convention::Sec4)) term *= Polynomial::t();
      else term *= -Polynomial::t();
    }
    for (std::size_t k = 1; k < walk_circles(w, st); ++k) term *= Polynomial::x();
    sum += term;
  });
  return sum;
}

// Rotation class key: sequence of forward distances to the partner end,
// minimized over rotations.
inline std::vector<int> gap_key(const std::vector<int>& letters) {
  const int len = static_cast<int>(letters.size());
  std::vector<int> gaps(len);
  for (int p = 0; p < len; ++p)
    for (int d = 1; d < len; ++d)
      if (letters[(p + d) % len] == letters[p]) gaps[p] = d;
  std::vector<int> best = gaps;
  for (int r = 1; r < len; ++r) {
    std::rotate(gaps.begin(), gaps.begin() + 1, gaps.end());
    best = std::min(best, gaps);
  }
  return best;
}

inline void all_matchings(std::vector<int>& w, int next, std::set<std::vector<int>>& keys) {
  auto open = std::find(w.begin(), w.end(), -1);
  if (open == w.end()) {
    keys.insert(gap_key(w));
    return;
  }
  *open = next;
  for (auto it = open + 1; it != w.end(); ++it)
    if (*it == -1) {
      *it = next;
      all_matchings(w, next + 1, keys);
      *it = -1;
    }
  *open = -1;
}

// Number of rotation classes of chord diagrams with n chords.
inline std::size_t diagram_count(int n) {
  std::vector<int> w(2 * n, -1);
  std::set<std::vector<int>> keys;
  all_matchings(w, 0, keys);
  return keys.size();
}

// Literal families of element-index sets, used as an oracle.
using Set = std::set<int>;
using Family = std::set<Set>;

inline Family family_of(const SetSystem& s) {
  Family out;
  for (Mask f : s.feasible()) {
    Set x;
    for (int i = 0; i < static_cast<int>(s.size()); ++i)
      if (f >> i & 1U) x.insert(i);
    out.insert(x);
  }
  return out;
}

inline Set sym_diff(const Set& a, const Set& b) {
  Set out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

inline Family fam_diff(const Family& a, const Family& b) {
  Family out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

inline Family o_twist(const Family& f, const Set& a) {
  Family out;
  for (const auto& x : f) out.insert(sym_diff(x, a));
  return out;
}

inline Family o_loop(const Family& f, int u) {
  Family add;
  for (const auto& x : f)
    if (!x.count(u)) {
      Set y = x;
      y.insert(u);
      add.insert(y);
    }
  return fam_diff(f, add);
}

inline Family o_loops(Family f, const Set& a) {
  for (int u : a) f = o_loop(f, u);
  return f;
}

inline std::size_t o_d0(const Family& f) {
  std::size_t best = 99;
  for (const auto& x : f) best = std::min(best, x.size());
  return best;
}

inline Polynomial o_q(const SetSystem& s) {
  const Family base = family_of(s);
  const int n = static_cast<int>(s.size());
  Polynomial sum;
  std::vector<int> part(n, 0);
  for (;;) {
    Set phi, chi, psi;
    for (int u = 0; u < n; ++u) (part[u] == 0 ? phi : part[u] == 1 ? chi : psi).insert(u);
    Family f = o_twist(o_loops(base, phi), chi);
    f = o_loops(o_twist(o_loops(f, psi), psi), psi);
    Polynomial term(1);
    for (std::size_t i = 0; i < phi.size(); ++i) term *= Polynomial::s();
    for (std::size_t i = 0; i < chi.size(); ++i) term *= Polynomial::t();
    for (std::size_t i = 0; i < psi.size(); ++i) term *= -Polynomial::t();
    for (std::size_t i = 0; i < o_d0(f); ++i) term *= Polynomial::x();
    sum += term;
    int k = 0;
    while (k < n && part[k] == 2) part[k++] = 0;
    if (k == n) break;
    ++part[k];
  }
  return sum;
}

// det over F2 of the principal submatrix on `a`, by permutation expansion.
inline bool o_nondegenerate(const SimpleGraph& g, std::vector<std::size_t> a) {
  std::sort(a.begin(), a.end());
  std::vector<std::size_t> perm = a;
  int parity = 0;
  do {
    bool term = true;
    for (std::size_t i = 0; i < a.size() && term; ++i) term = g.has_edge(a[i], perm[i]);
    parity ^= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return a.empty() || parity;
}

}  // namespace oracle
