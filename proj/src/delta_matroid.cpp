#include "tpoly/delta_matroid.hpp"

#include "tpoly/chord_diagram.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <stdexcept>

namespace tpoly::dm {

SetSystem::SetSystem(std::vector<std::string> ground, std::vector<Mask> feasible)
    : ground_(std::move(ground)), feasible_(std::move(feasible)) {
  if (ground_.size() > kMaxGround) throw std::invalid_argument("set system: ground set too large");
  for (Mask f : feasible_)
    if (f & ~full_mask()) throw std::invalid_argument("set system: feasible set outside ground");
  std::sort(feasible_.begin(), feasible_.end());
  feasible_.erase(std::unique(feasible_.begin(), feasible_.end()), feasible_.end());
}

bool SetSystem::contains(Mask f) const {
  return std::binary_search(feasible_.begin(), feasible_.end(), f);
}

std::size_t SetSystem::index_of(std::string_view name) const {
  auto it = std::find(ground_.begin(), ground_.end(), name);
  if (it == ground_.end()) throw std::out_of_range("no element '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - ground_.begin());
}

DeltaMatroid DeltaMatroid::validated(SetSystem s) {
  if (!validate_sea(s)) throw std::invalid_argument("set system violates the exchange axiom");
  return DeltaMatroid(std::move(s));
}

namespace {

Mask bit(std::size_t i) { return Mask{1} << i; }

void require_element(const SetSystem& s, std::size_t u) {
  if (u >= s.size()) throw std::out_of_range("element index out of range");
}

// Membership table over all 2^n subsets.
std::vector<bool> member_table(const SetSystem& s) {
  std::vector<bool> in(std::size_t{1} << s.size(), false);
  for (Mask f : s.feasible()) in[f] = true;
  return in;
}

// Drops bit `a` from a mask, shifting higher bits down.
Mask squeeze(Mask f, std::size_t a) {
  const Mask low = f & (bit(a) - 1);
  const Mask high = (f >> (a + 1)) << a;
  return low | high;
}

SetSystem remove_element(const SetSystem& s, std::size_t a, const std::vector<Mask>& family) {
  std::vector<std::string> ground = s.ground();
  ground.erase(ground.begin() + static_cast<std::ptrdiff_t>(a));
  std::vector<Mask> out;
  out.reserve(family.size());
  for (Mask f : family) out.push_back(squeeze(f, a));
  return SetSystem(std::move(ground), std::move(out));
}

// Symmetric difference of a sorted family with an arbitrary list.
std::vector<Mask> xor_family(const std::vector<Mask>& sorted, std::vector<Mask> other) {
  std::sort(other.begin(), other.end());
  std::vector<Mask> out;
  std::set_symmetric_difference(sorted.begin(), sorted.end(), other.begin(), other.end(),
                                std::back_inserter(out));
  return out;
}

}  // namespace

bool validate_sea(const SetSystem& s) {
  if (s.feasible().empty()) throw std::invalid_argument("validate_sea: empty feasible family");
  const auto in = member_table(s);
  for (Mask x : s.feasible())
    for (Mask y : s.feasible()) {
      const Mask diff = x ^ y;
      for (Mask rest = diff; rest; rest &= rest - 1) {
        const Mask a = rest & -rest;
        bool found = false;
        for (Mask cand = diff; cand && !found; cand &= cand - 1) {
          const Mask b = cand & -cand;
          found = in[x ^ (a | b)];
        }
        if (!found) return false;
      }
    }
  return true;
}

SetSystem twist(const SetSystem& s, Mask a) {
  std::vector<Mask> out;
  out.reserve(s.feasible().size());
  for (Mask f : s.feasible()) out.push_back(f ^ a);
  return SetSystem(s.ground(), std::move(out));
}

SetSystem loop_complement(const SetSystem& s, std::size_t u) {
  require_element(s, u);
  std::vector<Mask> added;
  for (Mask f : s.feasible())
    if (!(f & bit(u))) added.push_back(f | bit(u));
  return SetSystem(s.ground(), xor_family(s.feasible(), std::move(added)));
}

SetSystem loop_complement_set(const SetSystem& s, Mask a) {
  SetSystem out = s;
  for (std::size_t u = 0; u < s.size(); ++u)
    if (a & bit(u)) out = loop_complement(out, u);
  return out;
}

SetSystem dual_pivot(const SetSystem& s, Mask a) {
  return loop_complement_set(twist(loop_complement_set(s, a), a), a);
}

SetSystem dual_pivot_alt(const SetSystem& s, Mask a) {
  return twist(loop_complement_set(twist(s, a), a), a);
}

bool is_bridge(const SetSystem& s, std::size_t a) {
  require_element(s, a);
  return std::all_of(s.feasible().begin(), s.feasible().end(),
                     [&](Mask f) { return (f & bit(a)) != 0; });
}

bool is_loop(const SetSystem& s, std::size_t a) {
  require_element(s, a);
  return std::none_of(s.feasible().begin(), s.feasible().end(),
                      [&](Mask f) { return (f & bit(a)) != 0; });
}

SetSystem deletion(const SetSystem& s, std::size_t a) {
  require_element(s, a);
  std::vector<Mask> family;
  if (!is_bridge(s, a)) {
    for (Mask f : s.feasible())
      if (!(f & bit(a))) family.push_back(f);
  } else {
    for (Mask f : s.feasible()) family.push_back(f & ~bit(a));
  }
  return remove_element(s, a, family);
}

SetSystem contraction(const SetSystem& s, std::size_t a) {
  require_element(s, a);
  std::vector<Mask> family;
  if (!is_loop(s, a)) {
    for (Mask f : s.feasible())
      if (f & bit(a)) family.push_back(f & ~bit(a));
  } else {
    family = s.feasible();
  }
  return remove_element(s, a, family);
}

std::size_t d_of(const SetSystem& s, Mask a) {
  if (s.feasible().empty()) throw std::invalid_argument("d_of: empty feasible family");
  std::size_t best = s.size() + 1;
  for (Mask f : s.feasible()) best = std::min<std::size_t>(best, std::popcount(f ^ a));
  return best;
}

DeltaMatroid from_matrix(std::vector<std::string> ground, const gf2::Matrix& m) {
  if (ground.size() != m.size()) throw std::invalid_argument("from_matrix: size mismatch");
  if (ground.size() > SetSystem::kMaxGround) throw std::invalid_argument("from_matrix: too large");
  std::vector<Mask> feasible;
  const Mask full = static_cast<Mask>((std::uint64_t{1} << ground.size()) - 1);
  for (std::uint64_t f = 0; f <= full; ++f)
    if (gf2::is_nondegenerate(gf2::principal_submatrix(m, f)))
      feasible.push_back(static_cast<Mask>(f));
  return DeltaMatroid::trusted(SetSystem(std::move(ground), std::move(feasible)));
}

DeltaMatroid from_simple_graph(const SimpleGraph& g) {
  return from_matrix(g.names(), gf2::adjacency(g));
}

DeltaMatroid from_ribbon_graph(const ribbon::RibbonGraph& r) {
  if (!ribbon::is_connected(r))
    throw std::invalid_argument("from_ribbon_graph: ribbon graph is not connected");
  if (r.edge_count() > SetSystem::kMaxGround)
    throw std::invalid_argument("from_ribbon_graph: too many edges");
  std::vector<std::string> ground;
  for (const auto& e : r.edges()) ground.push_back(e.name);
  std::vector<Mask> feasible;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << r.edge_count()); ++f)
    if (ribbon::boundary_components(ribbon::spanning_subgraph(r, f)) == 1)
      feasible.push_back(static_cast<Mask>(f));
  return DeltaMatroid::trusted(SetSystem(std::move(ground), std::move(feasible)));
}

bool is_graphic(const SetSystem& s) {
  if (!s.contains(0)) return false;
  for (std::size_t u = 0; u < s.size(); ++u)
    if (s.contains(bit(u))) return false;
  SimpleGraph g(s.ground());
  for (std::size_t u = 0; u < s.size(); ++u)
    for (std::size_t v = u + 1; v < s.size(); ++v)
      if (s.contains(bit(u) | bit(v))) g.add_edge(u, v);
  return from_simple_graph(g).system() == s;
}

bool is_looped_graphic(const SetSystem& s) {
  if (!s.contains(0)) return false;
  gf2::Matrix m(s.size());
  for (std::size_t u = 0; u < s.size(); ++u) m.set(u, u, s.contains(bit(u)));
  for (std::size_t u = 0; u < s.size(); ++u)
    for (std::size_t v = u + 1; v < s.size(); ++v) {
      // det [[du, e], [e, dv]] = du*dv + e over F2.
      const bool e = s.contains(bit(u) | bit(v)) != (m.get(u, u) && m.get(v, v));
      m.set(u, v, e);
      m.set(v, u, e);
    }
  return from_matrix(s.ground(), m).system() == s;
}

std::size_t bc(const SetSystem& s) {
  const Mask full = s.full_mask();
  for (std::size_t k = 0; k <= s.size(); ++k) {
    for (std::uint64_t a = 0; a <= full; ++a) {
      if (static_cast<std::size_t>(std::popcount(a)) != k) continue;
      if (is_looped_graphic(twist(s, full & ~static_cast<Mask>(a)))) return k + 1;
    }
  }
  throw std::domain_error("bc: no partial dual of the set system is graphic");
}

SetSystem slide(const SetSystem& s, std::size_t a, std::size_t b) {
  require_element(s, a);
  require_element(s, b);
  if (a == b) throw std::invalid_argument("slide: a and b must differ");
  std::vector<Mask> toggled;
  for (Mask f : s.feasible())
    if ((f & bit(b)) && !(f & bit(a))) toggled.push_back((f & ~bit(b)) | bit(a));
  return SetSystem(s.ground(), xor_family(s.feasible(), std::move(toggled)));
}

SetSystem exchange(const SetSystem& s, std::size_t a, std::size_t b) {
  require_element(s, b);
  return twist(slide(twist(s, bit(b)), a, b), bit(b));
}

namespace {

// Indicator vector of a family over all 2^n subsets, one bit per subset.
// Single-element operations act on it as fixed bit permutations and shifts.
class Family {
public:
  explicit Family(const SetSystem& s)
      : n_(s.size()), words_(std::max<std::size_t>(1, (std::size_t{1} << n_) / 64), 0) {
    for (Mask f : s.feasible()) words_[f / 64] |= std::uint64_t{1} << (f % 64);
  }

  void twist(std::size_t u) {
    if (u < 6) {
      const unsigned shift = 1U << u;
      const std::uint64_t low = kLowMasks[u];
      for (auto& w : words_) w = ((w & low) << shift) | ((w >> shift) & low);
    } else {
      const std::size_t stride = std::size_t{1} << (u - 6);
      for (std::size_t i = 0; i < words_.size(); ++i)
        if (!(i & stride)) std::swap(words_[i], words_[i | stride]);
    }
  }

  void loop(std::size_t u) {
    if (u < 6) {
      const unsigned shift = 1U << u;
      const std::uint64_t low = kLowMasks[u];
      for (auto& w : words_) w ^= (w & low) << shift;
    } else {
      const std::size_t stride = std::size_t{1} << (u - 6);
      for (std::size_t i = 0; i < words_.size(); ++i)
        if (!(i & stride)) words_[i | stride] ^= words_[i];
    }
  }

  void dual_pivot(std::size_t u) {
    loop(u);
    twist(u);
    loop(u);
  }

  /// Smallest feasible cardinality; n + 1 for an empty family.
  std::size_t min_cardinality() const {
    std::size_t best = n_ + 1;
    const std::size_t limit = std::size_t{1} << n_;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      if (limit < 64) w &= (std::uint64_t{1} << limit) - 1;
      while (w) {
        const std::size_t f = i * 64 + static_cast<std::size_t>(std::countr_zero(w));
        best = std::min<std::size_t>(best, std::popcount(f));
        w &= w - 1;
      }
    }
    return best;
  }

private:
  // Bit positions whose index has bit u clear, for u = 0..5.
  static constexpr std::uint64_t kLowMasks[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL};

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

void q_dm_walk(const Family& fam, std::size_t u, std::size_t n, std::size_t phi, std::size_t psi,
               StateSumAccumulator& acc) {
  if (u == n) {
    const std::size_t d = fam.min_cardinality();
    if (d > n) throw std::domain_error("q_dm: empty feasible family");
    acc.add(phi, n - phi, d, psi % 2 ? -1 : 1);
    return;
  }
  Family next = fam;
  next.loop(u);
  q_dm_walk(next, u + 1, n, phi + 1, psi, acc);
  next = fam;
  next.twist(u);
  q_dm_walk(next, u + 1, n, phi, psi, acc);
  next = fam;
  next.dual_pivot(u);
  q_dm_walk(next, u + 1, n, phi, psi + 1, acc);
}

}  // namespace

Polynomial q_dm(const SetSystem& s) {
  const std::size_t n = s.size();
  StateSumAccumulator acc(n, n, n);
  q_dm_walk(Family(s), 0, n, 0, 0, acc);
  return acc.finish();
}

Polynomial q_dm_reference(const SetSystem& s) {
  const std::size_t n = s.size();
  Polynomial out;
  chord::for_each_state(n, [&](const std::vector<Greek>& part) {
    Mask phi = 0, chi = 0, psi = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (part[u] == Greek::Phi) phi |= bit(u);
      if (part[u] == Greek::Chi) chi |= bit(u);
      if (part[u] == Greek::Psi) psi |= bit(u);
    }
    const SetSystem target = dual_pivot(twist(loop_complement_set(s, phi), chi), psi);
    const auto np = static_cast<std::uint32_t>(std::popcount(phi));
    const auto nx = static_cast<std::uint32_t>(std::popcount(chi));
    const auto ns = static_cast<std::uint32_t>(std::popcount(psi));
    out.add_term({np, nx + ns, static_cast<std::uint32_t>(d0(target))}, ns % 2 ? -1 : 1);
  });
  return out;
}

Polynomial four_term_dm(const SetSystem& s, std::size_t a, std::size_t b) {
  if (a == b) throw std::invalid_argument("four_term_dm: a and b must differ");
  const SetSystem slid = slide(s, a, b);
  Polynomial sum = q_dm(s);
  sum -= q_dm(exchange(s, a, b));
  sum -= q_dm(slid);
  sum += q_dm(exchange(slid, a, b));
  return sum;
}

}  // namespace tpoly::dm
