#pragma once

#include "tpoly/gf2.hpp"
#include "tpoly/polynomial.hpp"
#include "tpoly/ribbon_graph.hpp"
#include "tpoly/simple_graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tpoly::dm {

/// Subset of the ground set: bit i stands for ground()[i].
using Mask = std::uint32_t;

/// Finite ground set with a duplicate-free family of feasible subsets.
///
/// Feasible sets are kept as a sorted list of masks. All operations below
/// return new values; element arguments are indices into ground().
class SetSystem {
public:
  static constexpr std::size_t kMaxGround = 24;

  SetSystem() : feasible_{0} {}
  /// Sorts and dedupes `feasible`; throws if a mask leaves the ground set.
  SetSystem(std::vector<std::string> ground, std::vector<Mask> feasible);

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<Mask>& feasible() const { return feasible_; }
  std::size_t size() const { return ground_.size(); }
  Mask full_mask() const { return size() == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << size()) - 1); }
  bool contains(Mask f) const;
  /// Throws std::out_of_range for an unknown element name.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

private:
  std::vector<std::string> ground_;
  std::vector<Mask> feasible_;
};

/// Set system with a non-empty family satisfying the symmetric exchange axiom.
class DeltaMatroid {
public:
  /// Throws std::invalid_argument if `s` is not a delta-matroid.
  static DeltaMatroid validated(SetSystem s);
  /// For constructions that are delta-matroids by theory (graphs, ribbon graphs).
  static DeltaMatroid trusted(SetSystem s) { return DeltaMatroid(std::move(s)); }

  const SetSystem& system() const { return system_; }
  operator const SetSystem&() const { return system_; }  // NOLINT(google-explicit-constructor)
  friend bool operator==(const DeltaMatroid&, const DeltaMatroid&) = default;

private:
  explicit DeltaMatroid(SetSystem s) : system_(std::move(s)) {}
  SetSystem system_;
};

/// Brute-force check of the symmetric exchange axiom. Throws on an empty family.
bool validate_sea(const SetSystem& s);

// Partial duality, loop complementation and dual pivot. Multi-element forms
// apply the single-element operation to each element of A in ground order.
SetSystem twist(const SetSystem& s, Mask a);
SetSystem loop_complement(const SetSystem& s, std::size_t u);
SetSystem loop_complement_set(const SetSystem& s, Mask a);
/// D+A*A+A.
SetSystem dual_pivot(const SetSystem& s, Mask a);
/// D*A+A*A; equal to dual_pivot.
SetSystem dual_pivot_alt(const SetSystem& s, Mask a);

bool is_bridge(const SetSystem& s, std::size_t a);
bool is_loop(const SetSystem& s, std::size_t a);
/// Delete / contract `a`, with the bridge and loop cases handled separately.
SetSystem deletion(const SetSystem& s, std::size_t a);
SetSystem contraction(const SetSystem& s, std::size_t a);

/// min over feasible F of |A xor F|; throws on an empty family.
std::size_t d_of(const SetSystem& s, Mask a);
inline std::size_t d0(const SetSystem& s) { return d_of(s, 0); }

/// A subset is feasible iff the principal submatrix on it is nondegenerate.
DeltaMatroid from_matrix(std::vector<std::string> ground, const gf2::Matrix& m);
DeltaMatroid from_simple_graph(const SimpleGraph& g);

/// Edge subsets whose spanning ribbon subgraph has one boundary component.
/// Throws std::invalid_argument if `r` is disconnected.
DeltaMatroid from_ribbon_graph(const ribbon::RibbonGraph& r);

/// True iff s = D(G) for a simple graph G. G is forced: its edges are the
/// feasible pairs, so one reconstruction decides.
bool is_graphic(const SetSystem& s);

/// True iff s = D(M) for a symmetric F2 matrix M with arbitrary diagonal
/// (a graph that may carry loops). M is forced by the feasible singletons
/// and pairs.
bool is_looped_graphic(const SetSystem& s);

/// Smallest n such that s * (E \ A) is looped-graphic for some |A| = n - 1.
/// Throws std::domain_error if no such A exists.
std::size_t bc(const SetSystem& s);

/// Second move: S xor { A + a : A + b in S, A inside E - {a, b} }.
SetSystem slide(const SetSystem& s, std::size_t a, std::size_t b);
/// First move: ((S * b) slid a over b) * b.
SetSystem exchange(const SetSystem& s, std::size_t a, std::size_t b);

/// Sum over ordered partitions E = Phi + X + Psi of
/// s^|Phi| t^|X| (-t)^|Psi| x^d0(((D + Phi) * X) dual-pivot Psi).
Polynomial q_dm(const SetSystem& s);

/// The same sum computed by composing the SetSystem operations literally.
/// Slow; kept as an independent route for cross-checking q_dm.
Polynomial q_dm_reference(const SetSystem& s);

/// Q(D) - Q(D'_ab) - Q(D~_ab) + Q(D~'_ab) with D~'_ab = exchange(slide(D)).
/// Callers pass binary delta-matroids; binarity is not re-checked.
Polynomial four_term_dm(const SetSystem& s, std::size_t a, std::size_t b);

/// Text format:
///   ground: a b c
///   feasible: {}, {a b}, {a c}
/// with '#' comments.
SetSystem parse_set_system(std::string_view text);
std::string to_text(const SetSystem& s);

}  // namespace tpoly::dm
