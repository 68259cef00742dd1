#include <gtest/gtest.h>

#include <random>

#include "../support/generators.hpp"
#include "sbrokit/catalog.hpp"
#include "sbrokit/circuit_cover.hpp"
#include "sbrokit/errors.hpp"
#include "sbrokit/representations.hpp"

namespace sbrokit {
namespace {

using testing::random_pair;

// Alternating-path witness for (A, B): right vertices, no repeats, strict
// alternation, and every circuit of C[A u B] covered.
::testing::AssertionResult valid_pp(const Matroid& m, ElementSet a,
                                    ElementSet b, const PathWitness& p) {
  CoverGraph g = p.graph(true);
  if (static_cast<int>(p.sequence.size()) != (a ^ b).size()) {
    return ::testing::AssertionFailure() << "wrong length";
  }
  if (!has_shape(g, a - b, b - a)) {
    return ::testing::AssertionFailure() << "not an alternating path";
  }
  if (!covers_pair(m, a, b, g)) {
    return ::testing::AssertionFailure() << "misses a circuit";
  }
  if (!covers_pair(m, a, b, close_path(p)) ||
      !has_shape(close_path(p), a - b, b - a)) {
    return ::testing::AssertionFailure() << "closed path fails (R)";
  }
  return ::testing::AssertionSuccess();
}

std::vector<int> spike_seq(std::initializer_list<std::pair<char, int>> items) {
  std::vector<int> out;
  for (auto [c, i] : items) {
    out.push_back(c == 't' ? 0 : c == 'x' ? SpikeRep::x(i) : SpikeRep::y(i));
  }
  return out;
}

TEST(Covers, Basics) {
  CoverGraph g;
  EXPECT_TRUE(covers(g, {}));
  g.vertices = ElementSet{0, 1};
  g.edges = {{0, 1}};
  EXPECT_TRUE(covers(g, {ElementSet{0, 1}}));
  EXPECT_FALSE(covers(g, {ElementSet{1, 2}}));
}

TEST(Covers, SpikeTipDeletedPath) {
  for (int r = 3; r <= 5; ++r) {
    std::mt19937 rng(r);
    Matroid m = testing::random_spike(r, 3, rng);
    PathWitness p;
    p.sequence.push_back(SpikeRep::y(r));
    for (int i = 1; i < r; ++i) {
      p.sequence.push_back(SpikeRep::x(i));
      p.sequence.push_back(SpikeRep::y(i));
    }
    p.sequence.push_back(SpikeRep::x(r));
    EXPECT_TRUE(covers(p.graph(), circuits_within(m, m.ground_set().without(0))));
  }
}

TEST(Reduce, Examples) {
  Matroid m = make_uniform(2, 4);
  Reduction same = reduce_to_disjoint(m, ElementSet{0, 1}, ElementSet{0, 1});
  EXPECT_EQ(same.minor.matroid.size(), 0);
  EXPECT_EQ(same.minor.matroid.rank(), 0);
  Reduction whole = reduce_to_disjoint(m, ElementSet{0, 1}, ElementSet{2, 3});
  EXPECT_EQ(whole.minor.matroid.size(), 4);
  EXPECT_EQ(whole.a, (ElementSet{0, 1}));
  Matroid s = catalog_get("s_5_6_12");
  Reduction rs = reduce_to_disjoint(s, ElementSet::range(6),
                                    s.ground_set() - ElementSet::range(6));
  EXPECT_EQ(rs.minor.matroid.size(), 12);
  EXPECT_EQ(rs.minor.matroid.rank(), 6);
  EXPECT_THROW(reduce_to_disjoint(m, ElementSet{0}, ElementSet{2, 3}),
               InputError);
}

TEST(CoverFind, UniformOneTwo) {
  Matroid m = make_uniform(1, 2);
  auto r = find_cover_path(m, ElementSet{0}, ElementSet{1}, true);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.witness->sequence, (std::vector<int>{1, 0}));
  EXPECT_TRUE(valid_pp(m, ElementSet{0}, ElementSet{1}, *r.witness));
}

TEST(CoverFind, SpikeRankThreeTransversals) {
  Matroid m = make_spike(3, {});
  ElementSet a{1, 3, 5};
  ElementSet b{2, 4, 6};
  auto r = find_cover_graph(m, a, b, CoverProperty::p_plus);
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(covers_pair(m, a, b, *r.witness));
}

TEST(CoverFind, K4DisjointTreesAllShapes) {
  Matroid m = catalog_get("m_k4");
  ElementSet a{0, 3, 5};
  ElementSet b{1, 2, 4};
  for (auto prop : {CoverProperty::r, CoverProperty::r_plus, CoverProperty::p,
                    CoverProperty::p_plus}) {
    auto r = find_cover_graph(m, a, b, prop);
    ASSERT_TRUE(r.found()) << to_string(prop);
    EXPECT_EQ(r.witness->shape, shape_of(prop));
    EXPECT_TRUE(has_shape(*r.witness, a - b, b - a)) << to_string(prop);
    EXPECT_TRUE(covers_pair(m, a, b, *r.witness)) << to_string(prop);
  }
}

TEST(CoverFind, BudgetGivesUnknown) {
  Matroid m = catalog_get("s_5_6_12");
  auto r = find_cover_graph(m, ElementSet::range(6),
                            m.ground_set() - ElementSet::range(6),
                            CoverProperty::p_plus, 3);
  EXPECT_EQ(r.verdict, Verdict::unknown);
}

TEST(CoverFind, SboMatroidsHavePathsOnEveryPair) {
  std::vector<Matroid> ms = {
      make_uniform(3, 6),
      make_graphic(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}})};
  for (const Matroid& m : ms) {
    auto bases = enumerate_bases(m);
    for (ElementSet a : bases) {
      for (ElementSet b : bases) {
        auto r = find_cover_path(m, a, b, true);
        ASSERT_TRUE(r.found());
        EXPECT_TRUE(valid_pp(m, a, b, *r.witness));
      }
    }
  }
}

TEST(CoverFind, RandomPairsAcrossCatalog) {
  std::mt19937 rng(11);
  for (const char* name : {"m_k4", "j", "p8", "whirl_3", "ag_3_2", "u_2_5"}) {
    Matroid m = catalog_get(name);
    auto bases = enumerate_bases(m);
    for (int t = 0; t < 20; ++t) {
      auto [a, b] = random_pair(bases, rng);
      for (auto prop : {CoverProperty::r, CoverProperty::r_plus,
                        CoverProperty::p, CoverProperty::p_plus}) {
        auto r = find_cover_graph(m, a, b, prop);
        ASSERT_TRUE(r.found()) << name << " " << to_string(prop);
        EXPECT_TRUE(has_shape(*r.witness, a - b, b - a)) << name;
        EXPECT_TRUE(covers_pair(m, a, b, *r.witness)) << name;
      }
    }
  }
}

TEST(Fundamental, UniformTwoFour) {
  Matroid m = make_uniform(2, 4);
  ElementSet a{0, 1};
  ElementSet b{2, 3};
  CoverGraph g = fundamental_cover_2regular(m, a, b);
  EXPECT_TRUE(has_shape(g, a, b));
  auto fc = fundamental_circuits(m, a, b);
  EXPECT_EQ(fc.size(), 4u);
  EXPECT_TRUE(covers(g, fc));
  CoverGraph t = fundamental_cover_tree(m, a, b);
  EXPECT_EQ(t.edges.size(), 3u);
  EXPECT_TRUE(has_shape(t, a, b));
  EXPECT_TRUE(covers(t, fc));
}

TEST(Fundamental, EqualBasesGiveEmptyGraphs) {
  Matroid m = catalog_get("m_k4");
  ElementSet a{0, 1, 2};
  EXPECT_TRUE(fundamental_cover_2regular(m, a, a).edges.empty());
  EXPECT_TRUE(fundamental_cover_tree(m, a, a).edges.empty());
}

TEST(Fundamental, K4TreeHasFiveEdges) {
  Matroid m = catalog_get("m_k4");
  ElementSet a{0, 3, 5};
  ElementSet b{1, 2, 4};
  CoverGraph t = fundamental_cover_tree(m, a, b);
  EXPECT_EQ(t.edges.size(), 5u);
  EXPECT_TRUE(has_shape(t, a, b));
  EXPECT_TRUE(covers(t, fundamental_circuits(m, a, b)));
}

TEST(Fundamental, RandomPairsCover) {
  std::mt19937 rng(5);
  for (const auto& entry : catalog_entries()) {
    Matroid m = catalog_get(entry.name);
    if (m.size() > 12) continue;
    auto bases = enumerate_bases(m);
    for (int t = 0; t < 30; ++t) {
      auto [a, b] = random_pair(bases, rng);
      auto fc = fundamental_circuits(m, a, b);
      CoverGraph g = fundamental_cover_2regular(m, a, b);
      CoverGraph tree = fundamental_cover_tree(m, a, b);
      EXPECT_TRUE(has_shape(g, a - b, b - a)) << entry.name;
      EXPECT_TRUE(covers(g, fc)) << entry.name;
      EXPECT_TRUE(has_shape(tree, a - b, b - a)) << entry.name;
      EXPECT_TRUE(covers(tree, fc)) << entry.name;
    }
  }
}

TEST(Graphic, ParallelPair) {
  Matroid m = make_graphic(2, {{0, 1}, {0, 1}});
  PathWitness p = graphic_pp_path(m, ElementSet{0}, ElementSet{1});
  EXPECT_EQ(p.sequence, (std::vector<int>{0, 1}));
}

TEST(Graphic, TwoDigons) {
  // u=0, v=1, w=2; A = {uv1, vw1}, B = {uv2, vw2}.
  Matroid m = make_graphic(3, {{0, 1}, {1, 2}, {0, 1}, {1, 2}});
  ElementSet a{0, 1};
  ElementSet b{2, 3};
  PathWitness p = graphic_pp_path(m, a, b);
  EXPECT_EQ(p.sequence.size(), 4u);
  EXPECT_TRUE(valid_pp(m, a, b, p));
}

TEST(Graphic, K4DisjointTrees) {
  Matroid m = catalog_get("m_k4");
  ElementSet a{0, 3, 5};
  ElementSet b{1, 2, 4};
  PathWitness p = graphic_pp_path(m, a, b);
  EXPECT_EQ(p.sequence.size(), 6u);
  EXPECT_EQ(circuits_within(m, m.ground_set()).size(), 7u);
  EXPECT_TRUE(valid_pp(m, a, b, p));
}

TEST(Graphic, RandomTwoTrees) {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    int n = 2 + static_cast<int>(rng() % 7);
    auto inst = testing::random_two_trees(n, rng);
    PathWitness p = graphic_pp_path(inst.graph, inst.a, inst.b);
    EXPECT_TRUE(valid_pp(inst.graph, inst.a, inst.b, p)) << t;
  }
}

TEST(Graphic, SharedElementsAndDisconnectedGraphs) {
  std::mt19937 rng(23);
  // Two components plus a loop-free bridge structure.
  Matroid m = make_graphic(7, {{0, 1}, {1, 2}, {0, 2}, {0, 1}, {3, 4},
                               {4, 5}, {3, 5}, {5, 6}, {4, 6}, {3, 6}});
  auto bases = enumerate_bases(m);
  for (ElementSet a : bases) {
    for (int t = 0; t < 4; ++t) {
      ElementSet b = bases[rng() % bases.size()];
      EXPECT_TRUE(valid_pp(m, a, b, graphic_pp_path(m, a, b)));
    }
  }
  EXPECT_THROW(graphic_pp_path(make_uniform(2, 4), ElementSet{0, 1},
                               ElementSet{2, 3}),
               InputError);
}

TEST(Paving, Examples) {
  Matroid u24 = make_uniform(2, 4);
  EXPECT_TRUE(valid_pp(u24, ElementSet{0, 1}, ElementSet{2, 3},
                       paving_pp_path(u24, ElementSet{0, 1}, ElementSet{2, 3})));
  Matroid u12 = make_uniform(1, 2);
  EXPECT_EQ(paving_pp_path(u12, ElementSet{0}, ElementSet{1}).sequence,
            (std::vector<int>{0, 1}));
  Matroid x10 = catalog_get("x10");
  ElementSet a = elements_of(x10, "1,2,3,5,a");
  ElementSet b = elements_of(x10, "4,6,7,8,b");
  PathWitness p = paving_pp_path(x10, a, b);
  EXPECT_EQ(p.sequence.size(), 10u);
  EXPECT_TRUE(valid_pp(x10, a, b, p));
  EXPECT_THROW(paving_pp_path(catalog_get("m_k4"), ElementSet{0, 3, 5},
                              ElementSet{1, 2, 4}),
               InputError);
}

TEST(Paving, RandomSparsePaving) {
  std::mt19937 rng(29);
  for (int t = 0; t < 40; ++t) {
    int r = 2 + static_cast<int>(rng() % 4);
    int n = r + 2 + static_cast<int>(rng() % (12 - r - 1));
    Matroid m = testing::random_paving(r, n, 12, rng);
    auto bases = enumerate_bases(m);
    for (int k = 0; k < 5; ++k) {
      auto [a, b] = random_pair(bases, rng);
      EXPECT_TRUE(valid_pp(m, a, b, paving_pp_path(m, a, b)));
    }
  }
}

TEST(Spike, TransversalPair) {
  for (int r = 3; r <= 5; ++r) {
    Matroid m = make_spike(r, {});
    ElementSet a, b;
    for (int i = 1; i <= r; ++i) {
      a = a.with(SpikeRep::x(i));
      b = b.with(SpikeRep::y(i));
    }
    PathWitness p = spike_pp_path(m, a, b);
    std::vector<int> want = {SpikeRep::y(r)};
    for (int i = 1; i < r; ++i) {
      want.push_back(SpikeRep::x(i));
      want.push_back(SpikeRep::y(i));
    }
    want.push_back(SpikeRep::x(r));
    EXPECT_EQ(p.sequence, want);
    EXPECT_TRUE(valid_pp(m, a, b, p));
  }
}

TEST(Spike, TipWithPairOnMissingLeg) {
  Matroid m = make_spike(4, {});
  ElementSet a = ElementSet::from(spike_seq({{'t', 0}, {'x', 1}, {'x', 2}, {'x', 3}}));
  ElementSet b = ElementSet::from(spike_seq({{'y', 2}, {'y', 3}, {'y', 4}, {'x', 4}}));
  PathWitness p = spike_pp_path(m, a, b);
  EXPECT_EQ(p.sequence, spike_seq({{'x', 2}, {'y', 2}, {'x', 3}, {'y', 3},
                                   {'t', 0}, {'x', 4}, {'x', 1}, {'y', 4}}));
  EXPECT_TRUE(valid_pp(m, a, b, p));
}

TEST(Spike, RankTwoBaseCase) {
  Matroid m = make_spike(2, {});
  for (ElementSet a : enumerate_bases(m)) {
    for (ElementSet b : enumerate_bases(m)) {
      EXPECT_TRUE(valid_pp(m, a, b, spike_pp_path(m, a, b)));
    }
  }
}

TEST(Spike, AllPairsOfRandomSpikes) {
  std::mt19937 rng(31);
  for (int r = 3; r <= 4; ++r) {
    for (int h = 0; h <= 4; ++h) {
      Matroid m = testing::random_spike(r, h, rng);
      auto bases = enumerate_bases(m);
      for (ElementSet a : bases) {
        for (ElementSet b : bases) {
          ASSERT_TRUE(valid_pp(m, a, b, spike_pp_path(m, a, b)))
              << "r=" << r << " A=" << a.to_string() << " B=" << b.to_string();
        }
      }
    }
  }
  EXPECT_THROW(spike_pp_path(make_uniform(2, 4), ElementSet{0, 1},
                             ElementSet{2, 3}),
               InputError);
}

TEST(Construct, DispatchAndParse) {
  EXPECT_EQ(parse_construction("auto"), Construction::automatic);
  EXPECT_THROW(parse_construction("magic"), InputError);
  EXPECT_EQ(parse_cover_property("pplus"), CoverProperty::p_plus);
  EXPECT_THROW(parse_cover_property("q"), InputError);
  Matroid j = catalog_get("j");
  auto bases = enumerate_bases(j);
  PathWitness p = construct_pp_path(j, bases.front(), bases.back());
  EXPECT_TRUE(valid_pp(j, bases.front(), bases.back(), p));
}

}  // namespace
}  // namespace sbrokit
