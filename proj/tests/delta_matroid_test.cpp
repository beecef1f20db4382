#include "tpoly/checks.hpp"
#include "tpoly/delta_matroid.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace tpoly;
using dm::Mask;
using dm::SetSystem;

namespace {

SetSystem S(std::vector<std::string> ground, std::vector<Mask> feasible) {
  return SetSystem(std::move(ground), std::move(feasible));
}

SetSystem random_system(std::mt19937& rng) {
  const std::size_t n = rng() % 7;
  std::vector<std::string> ground;
  for (std::size_t i = 0; i < n; ++i) ground.push_back(std::string(1, static_cast<char>('a' + i)));
  std::vector<Mask> fam;
  const unsigned density = 1 + rng() % 4;
  for (Mask f = 0; f < (Mask{1} << n); ++f)
    if (rng() % 5 < density) fam.push_back(f);
  if (fam.empty()) fam.push_back(static_cast<Mask>(rng() % (Mask{1} << n)));
  return S(std::move(ground), std::move(fam));
}

std::vector<ribbon::RibbonGraph> ribbons() { return checks::ribbon_instances(4); }

}  // namespace

TEST(DeltaMatroid, SetSystemInvariants) {
  const auto s = S({"a", "b"}, {3, 0, 3});
  EXPECT_EQ(s.feasible(), (std::vector<Mask>{0, 3}));
  EXPECT_THROW(S({"a"}, {2}), std::invalid_argument);
  EXPECT_EQ(s.index_of("b"), 1U);
  EXPECT_THROW((void)s.index_of("z"), std::out_of_range);
}

TEST(DeltaMatroid, Sea) {
  EXPECT_TRUE(dm::validate_sea(S({}, {0})));
  EXPECT_TRUE(dm::validate_sea(S({"a", "b"}, {0, 3})));
  EXPECT_FALSE(dm::validate_sea(S({"a", "b", "c"}, {0, 7})));
  EXPECT_THROW(dm::validate_sea(S({"a"}, {})), std::invalid_argument);
  EXPECT_THROW(dm::DeltaMatroid::validated(S({"a", "b", "c"}, {0, 7})), std::invalid_argument);
}

TEST(DeltaMatroid, TwistAndLoopComplement) {
  const auto a0 = S({"a"}, {0});
  EXPECT_EQ(dm::twist(a0, 0), a0);
  EXPECT_EQ(dm::twist(a0, 1), S({"a"}, {1}));
  EXPECT_EQ(dm::loop_complement(a0, 0), S({"a"}, {0, 1}));
  EXPECT_EQ(dm::loop_complement(S({"a"}, {0, 1}), 0), a0);
  EXPECT_THROW(dm::loop_complement(a0, 1), std::out_of_range);
}

TEST(DeltaMatroid, DualPivot) {
  const auto a0 = S({"a"}, {0});
  // +a: {0, a}; *a: {a, 0}; +a: {0}.
  EXPECT_EQ(dm::dual_pivot(a0, 1), a0);
  EXPECT_EQ(dm::dual_pivot_alt(a0, 1), a0);
  EXPECT_EQ(dm::dual_pivot(a0, 0), a0);
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto s = random_system(rng);
    const Mask a = s.size() ? static_cast<Mask>(rng() % (Mask{1} << s.size())) : 0;
    EXPECT_EQ(dm::dual_pivot(s, a), dm::dual_pivot_alt(s, a));
  }
}

TEST(DeltaMatroid, SingleElementOperationsCommute) {
  std::mt19937 rng(6);
  for (int i = 0; i < 500; ++i) {
    const auto s = random_system(rng);
    if (s.size() < 2) continue;
    const std::size_t u = rng() % s.size();
    const std::size_t v = (u + 1 + rng() % (s.size() - 1)) % s.size();
    EXPECT_EQ(dm::loop_complement(dm::loop_complement(s, u), v),
              dm::loop_complement(dm::loop_complement(s, v), u));
    EXPECT_EQ(dm::twist(dm::loop_complement(s, u), Mask{1} << v),
              dm::loop_complement(dm::twist(s, Mask{1} << v), u));
  }
}

TEST(DeltaMatroid, DeleteContract) {
  const auto e = S({"e"}, {1});
  EXPECT_TRUE(dm::is_bridge(e, 0));
  EXPECT_EQ(dm::deletion(e, 0), S({}, {0}));
  const auto a = S({"a"}, {0});
  EXPECT_TRUE(dm::is_loop(a, 0));
  EXPECT_EQ(dm::contraction(a, 0), S({}, {0}));
  const auto ab = S({"a", "b"}, {0, 3});
  EXPECT_FALSE(dm::is_bridge(ab, 0));
  EXPECT_FALSE(dm::is_loop(ab, 0));
  EXPECT_EQ(dm::deletion(ab, 0), S({"b"}, {0}));
  EXPECT_EQ(dm::contraction(ab, 0), S({"b"}, {1}));
  EXPECT_THROW(dm::deletion(ab, 2), std::out_of_range);
}

TEST(DeltaMatroid, Distance) {
  EXPECT_EQ(dm::d0(S({"a", "b"}, {0, 3})), 0U);
  EXPECT_EQ(dm::d0(S({"e"}, {1})), 1U);
  EXPECT_EQ(dm::d_of(S({"a", "b"}, {0, 3}), 1), 1U);
  EXPECT_THROW(dm::d0(S({"a"}, {})), std::invalid_argument);
}

TEST(DeltaMatroid, FromSimpleGraph) {
  EXPECT_EQ(dm::from_simple_graph(SimpleGraph({"v"})).system(), S({"v"}, {0}));
  SimpleGraph k2({"u", "v"});
  k2.add_edge(0, 1);
  EXPECT_EQ(dm::from_simple_graph(k2).system(), S({"u", "v"}, {0, 3}));
  SimpleGraph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(0, 2);
  k3.add_edge(1, 2);
  EXPECT_EQ(dm::from_simple_graph(k3).system(), S({"0", "1", "2"}, {0, 3, 5, 6}));
  std::mt19937 rng(8);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 1 + rng() % 5;
    SimpleGraph g(n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng() & 1U) g.add_edge(u, v);
    const auto d = dm::from_simple_graph(g);
    for (Mask f = 0; f < (Mask{1} << n); ++f) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i)
        if (f >> i & 1U) idx.push_back(i);
      EXPECT_EQ(d.system().contains(f), oracle::o_nondegenerate(g, idx));
    }
    EXPECT_TRUE(dm::validate_sea(d));
    EXPECT_TRUE(dm::is_graphic(d));
  }
}

TEST(DeltaMatroid, FromRibbonGraph) {
  EXPECT_EQ(dm::from_ribbon_graph(ribbon::parse_ribbon("vertex v: p q\nedge a: p q\n")).system(),
            S({"a"}, {0}));
  EXPECT_EQ(
      dm::from_ribbon_graph(ribbon::parse_ribbon("vertex v: p q\nedge a: p q twist=1\n")).system(),
      S({"a"}, {0, 1}));
  EXPECT_EQ(dm::from_ribbon_graph(
                ribbon::parse_ribbon("vertex v: p q r s\nedge a: p r\nedge b: q s\n"))
                .system(),
            S({"a", "b"}, {0, 3}));
  EXPECT_THROW(dm::from_ribbon_graph(ribbon::parse_ribbon("vertex u:\nvertex v:\n")),
               std::invalid_argument);
}

TEST(DeltaMatroid, Graphic) {
  EXPECT_TRUE(dm::is_graphic(S({"v"}, {0})));
  EXPECT_FALSE(dm::is_graphic(S({"a"}, {1})));
  EXPECT_TRUE(dm::is_graphic(S({"u", "v"}, {0, 3})));
  EXPECT_FALSE(dm::is_graphic(S({"u", "v"}, {0, 1, 3})));
  // A loop on the vertex makes the singleton feasible.
  EXPECT_FALSE(dm::is_graphic(S({"a"}, {0, 1})));
  EXPECT_TRUE(dm::is_looped_graphic(S({"a"}, {0, 1})));
  EXPECT_FALSE(dm::is_looped_graphic(S({"a"}, {1})));
  EXPECT_FALSE(dm::is_looped_graphic(S({"a", "b", "c"}, {0, 7})));
}

TEST(DeltaMatroid, BoundaryCount) {
  EXPECT_EQ(dm::bc(S({"a"}, {0})), 2U);
  EXPECT_EQ(dm::bc(S({"a"}, {0, 1})), 1U);
  EXPECT_EQ(dm::bc(S({"a", "b"}, {0, 3})), 1U);
  EXPECT_THROW(dm::bc(S({"a", "b", "c"}, {0, 7})), std::domain_error);
}

TEST(DeltaMatroid, Slide) {
  EXPECT_EQ(dm::slide(S({"a", "b"}, {0, 2}), 0, 1), S({"a", "b"}, {0, 1, 2}));
  // b a loop: nothing to toggle.
  EXPECT_EQ(dm::slide(S({"a", "b"}, {0, 1}), 0, 1), S({"a", "b"}, {0, 1}));
  // b a bridge: the slide still moves a, as for a loop slid over a bridge
  // between two vertices.
  EXPECT_EQ(dm::slide(S({"a", "b"}, {2}), 0, 1), S({"a", "b"}, {1, 2}));
  EXPECT_THROW(dm::slide(S({"a", "b"}, {0}), 1, 1), std::invalid_argument);
  std::mt19937 rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto s = random_system(rng);
    if (s.size() < 2) continue;
    EXPECT_EQ(dm::slide(dm::slide(s, 0, 1), 0, 1), s);
  }
}

TEST(DeltaMatroid, Exchange) {
  EXPECT_EQ(dm::exchange(S({"a", "b"}, {2}), 0, 1), S({"a", "b"}, {2}));
  const auto d = dm::from_simple_graph(chord::intersection_graph(chord::Word::parse("abab")));
  const auto expected =
      dm::from_simple_graph(chord::intersection_graph(chord::Word::parse("aabb")));
  EXPECT_EQ(dm::exchange(d, 0, 1), expected.system());
  EXPECT_EQ(dm::exchange(dm::exchange(d, 0, 1), 0, 1), d.system());
}

TEST(DeltaMatroid, MovesMatchChordMoves) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& c : chord::enumerate(n)) {
      const auto d = dm::from_simple_graph(chord::intersection_graph(c));
      for (const auto& p : chord::adjacent_pairs(c)) {
        const auto a = static_cast<std::size_t>(p.a), b = static_cast<std::size_t>(p.b);
        EXPECT_EQ(dm::from_simple_graph(chord::intersection_graph(chord::first_move(c, p.position)))
                      .system(),
                  dm::exchange(d, a, b));
        EXPECT_EQ(dm::from_simple_graph(chord::intersection_graph(chord::second_move(c, p.position)))
                      .system(),
                  dm::slide(d, a, b));
      }
    }
}

TEST(DeltaMatroid, QExamples) {
  EXPECT_EQ(dm::q_dm(S({}, {0})).to_text(), "1");
  EXPECT_EQ(dm::q_dm(S({"a"}, {0})).to_text(), "s + t*x - t");
  EXPECT_EQ(dm::q_dm(S({"a"}, {0, 1})), Polynomial::parse("s + t - t*x"));
}

TEST(DeltaMatroidProperty, QAgainstLiteralOracle) {
  std::mt19937 rng(10);
  for (int i = 0; i < 150; ++i) {
    const auto s = random_system(rng);
    const Polynomial q = dm::q_dm(s);
    EXPECT_EQ(q, oracle::o_q(s)) << dm::to_text(s);
    if (s.size() <= 4) EXPECT_EQ(q, dm::q_dm_reference(s));
  }
}

TEST(DeltaMatroid, FourTermExamples) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& c : chord::enumerate(n)) {
      const auto d = dm::from_ribbon_graph(ribbon::from_chord_word(c));
      for (std::size_t a = 0; a < d.system().size(); ++a)
        for (std::size_t b = 0; b < d.system().size(); ++b)
          if (a != b) EXPECT_TRUE(dm::four_term_dm(d, a, b).is_zero());
    }
  // b a bridge: the exchange fixes D and D~, so the sum cancels in pairs.
  const auto bridge = dm::from_ribbon_graph(
      ribbon::parse_ribbon("vertex u: p r\nvertex v: q\nedge b: p q\nedge a: r s\nvertex w: s\n"));
  const auto b = bridge.system().index_of("b"), a = bridge.system().index_of("a");
  EXPECT_TRUE(dm::is_bridge(bridge, b));
  EXPECT_EQ(dm::exchange(bridge, a, b), bridge.system());
  EXPECT_TRUE(dm::four_term_dm(bridge, a, b).is_zero());
  EXPECT_THROW(dm::four_term_dm(bridge, a, a), std::invalid_argument);
}

TEST(DeltaMatroidProperty, FourTermOnEverySmallSetSystem) {
  // The relation does not need binarity here: it holds for every family on
  // at most three elements.
  const std::vector<std::string> ground{"a", "b", "c"};
  for (std::uint32_t fam = 1; fam < 256; ++fam) {
    std::vector<Mask> f;
    for (Mask m = 0; m < 8; ++m)
      if (fam >> m & 1U) f.push_back(m);
    const auto s = S(ground, f);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (a != b) EXPECT_TRUE(dm::four_term_dm(s, a, b).is_zero()) << dm::to_text(s);
  }
}

TEST(DeltaMatroidProperty, RibbonIdentities) {
  for (const auto& r : ribbons()) {
    const auto d = dm::from_ribbon_graph(r);
    const SetSystem& s = d;
    EXPECT_TRUE(dm::validate_sea(s));
    EXPECT_TRUE(dm::validate_sea(dm::twist(s, s.full_mask() & 5)));
    EXPECT_EQ(dm::q_dm(s), ribbon::q_ribbon(r));
    EXPECT_EQ(dm::d0(s) + 1, r.vertex_count());
    EXPECT_EQ(dm::bc(s), ribbon::boundary_components(r));
    EXPECT_EQ(dm::d0(s) + 1, dm::bc(dm::twist(s, s.full_mask())));
    for (std::size_t u = 0; u < s.size(); ++u) {
      const std::size_t expect = dm::d0(dm::deletion(s, u)) + (dm::is_bridge(s, u) ? 1 : 0);
      EXPECT_EQ(dm::d0(s), expect);
    }
  }
}

TEST(DeltaMatroid, TextRoundTripAndErrors) {
  const auto s = dm::parse_set_system("# c\nground: a b c\nfeasible: {}, {a b}, {a,c}\n");
  EXPECT_EQ(s, S({"a", "b", "c"}, {0, 3, 5}));
  EXPECT_EQ(dm::to_text(s), "ground: a b c\nfeasible: {}, {a b}, {a c}\n");
  EXPECT_EQ(dm::parse_set_system(dm::to_text(s)), s);
  EXPECT_EQ(dm::parse_set_system("ground:\nfeasible:\n"), S({}, {}));
  EXPECT_THROW(dm::parse_set_system("ground: a\nfeasible: {b}\n"), std::invalid_argument);
  EXPECT_THROW(dm::parse_set_system("ground: a\nfeasible: {a\n"), std::invalid_argument);
  EXPECT_THROW(dm::parse_set_system("feasible: {}\n"), std::invalid_argument);
  EXPECT_THROW(dm::parse_set_system("ground: a\nfeasible: {} {a}\n"), std::invalid_argument);
}
