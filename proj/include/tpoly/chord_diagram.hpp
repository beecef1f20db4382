#pragma once

#include "tpoly/polynomial.hpp"
#include "tpoly/simple_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tpoly {

/// Transition type at a chord (equivalently, the marking of a ribbon).
///   Phi: each entering half-edge paired with the one that follows it
///   Chi: each entering half-edge paired with the other leaving one
///   Psi: the two entering half-edges paired together
enum class Greek : std::uint8_t { Phi = 0, Chi = 1, Psi = 2 };

/// Which transition gets t and which gets -t; Phi always gets s.
///   Sec23: Psi -> t,  Chi -> -t
///   Sec4:  Chi -> t,  Psi -> -t  (default; agrees with the ribbon graph and
///                                 delta-matroid polynomials)
enum class Convention { Sec23, Sec4 };

/// Where the sliding end sits relative to the end it slides along.
enum class Side { Before, After };

/// Raised when a move or relation is requested at a position that does not
/// satisfy its adjacency precondition.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

char greek_name(Greek g);

namespace chord {

/// Double-occurrence word: each chord id 0..n-1 appears exactly twice.
class Word {
public:
  Word() = default;
  /// Throws std::invalid_argument unless every id in 0..n-1 occurs twice.
  explicit Word(std::vector<int> letters);

  /// Whitespace-separated alphanumeric symbols, or (without whitespace) one
  /// symbol per character. Chords are numbered by first occurrence.
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  std::size_t chord_count() const { return letters_.size() / 2; }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  /// Positions of the two ends of `chord`, ascending.
  std::pair<std::size_t, std::size_t> ends(int chord) const;

  /// Contiguous letters "abab" when n <= 26, else space-separated integers.
  std::string to_text() const;

  auto operator<=>(const Word&) const = default;

private:
  std::vector<int> letters_;
};

/// A chord diagram, stored as the canonical word of its rotation class.
class Diagram {
public:
  Diagram() = default;
  const Word& word() const { return word_; }
  operator const Word&() const { return word_; }  // NOLINT(google-explicit-constructor)
  std::size_t chord_count() const { return word_.chord_count(); }

  auto operator<=>(const Diagram&) const = default;

private:
  explicit Diagram(Word w) : word_(std::move(w)) {}
  friend Diagram canonicalize(const Word& w);
  Word word_;
};

/// Lexicographically least word over all rotations, chords relabeled by
/// first occurrence. Reflections are not identified.
Diagram canonicalize(const Word& w);

/// All diagrams with n chords, 1 <= n <= 7, sorted by canonical word.
std::vector<Diagram> enumerate(int n);

/// Chords are adjacent iff their ends alternate around the circle.
SimpleGraph intersection_graph(const Word& w);

/// Cut both circles at the basepoint and glue; result canonicalized.
Diagram multiply(const Diagram& a, const Diagram& b);

struct AdjacentPair {
  std::size_t position;
  int a;  // chord at position
  int b;  // chord at position + 1 (cyclically)
  friend bool operator==(const AdjacentPair&, const AdjacentPair&) = default;
};

/// Every cyclic position whose letter and successor belong to distinct chords.
std::vector<AdjacentPair> adjacent_pairs(const Word& w);

/// Transposes the letters at cyclic positions i and i + 1.
Word first_move(const Word& w, std::size_t i);

struct SlideResult {
  Word word;
  /// Position of the far b-end; the slid a-end sits at anchor + 1.
  std::size_t anchor;
};

/// Slides an end of chord a along chord b.
///
/// Side::Before: a-end at i, b-end at i + 1; the a-end is re-inserted
/// immediately after the other end of b. Side::After: b-end at i, a-end at
/// i + 1; the a-end is re-inserted immediately before the other end of b.
/// In both cases the end stays in the region of the disc on its side of b.
Word second_move(const Word& w, std::size_t i, Side side = Side::Before);
SlideResult slide_end(const Word& w, std::size_t i);

using TransitionState = std::vector<Greek>;  // indexed by chord id

/// Number of circles obtained by resolving every chord per `state`.
std::size_t state_boundary_count(const Word& w, std::span<const Greek> state);

/// Sum over all 3^n transition states of weight * x^(c - 1).
Polynomial q_chord(const Word& w, Convention conv = Convention::Sec4);

/// Q(C) - Q(C') - Q(C~) + Q(C~') for the chords adjacent at position i,
/// where C' = first_move(C, i), C~ = second_move(C, i) and C~' is the first
/// move applied to C~ at the adjacency the slide created.
Polynomial four_term_sum(const Word& w, std::size_t i, Convention conv = Convention::Sec4);

/// Calls fn(state) for each of the 3^n states in odometer order.
template <typename Fn>
void for_each_state(std::size_t n, Fn&& fn) {
  TransitionState state(n, Greek::Phi);
  for (;;) {
    fn(std::as_const(state));
    std::size_t k = 0;
    while (k < n && state[k] == Greek::Psi) state[k++] = Greek::Phi;
    if (k == n) return;
    state[k] = static_cast<Greek>(static_cast<int>(state[k]) + 1);
  }
}

}  // namespace chord
}  // namespace tpoly
