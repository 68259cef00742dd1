#include <gtest/gtest.h>

#include <random>

#include "sbrokit/catalog.hpp"
#include "sbrokit/covering.hpp"
#include "sbrokit/errors.hpp"
#include "sbrokit/representations.hpp"
#include "../support/generators.hpp"

namespace sbrokit {
namespace {

// Smallest k with E split into k sets independent in every matroid given,
// by plain assignment backtracking.
bool split(const std::vector<Matroid>& ms, int e, int n,
           std::vector<ElementSet>& parts) {
  if (e == n) return true;
  for (size_t i = 0; i < parts.size(); ++i) {
    ElementSet next = parts[i].with(e);
    bool ok = true;
    for (const Matroid& m : ms) ok = ok && m.is_independent(next);
    if (!ok) continue;
    ElementSet saved = parts[i];
    parts[i] = next;
    if (split(ms, e + 1, n, parts)) return true;
    parts[i] = saved;
    if (saved.empty()) break;  // empty parts are interchangeable
  }
  return false;
}

int brute_cover(const std::vector<Matroid>& ms) {
  const int n = ms.front().size();
  for (int k = 1; k <= n; ++k) {
    std::vector<ElementSet> parts(k);
    if (split(ms, 0, n, parts)) return k;
  }
  return -1;
}

Matroid random_graph(int vertices, int edges, std::mt19937& rng) {
  std::vector<std::pair<int, int>> list;
  while (static_cast<int>(list.size()) < edges) {
    int u = rng() % vertices, v = rng() % vertices;
    if (u != v) list.emplace_back(u, v);
  }
  return make_graphic(vertices, list);
}

Matroid random_partition(int n, int classes, std::mt19937& rng) {
  std::vector<ElementSet> c(classes);
  for (int e = 0; e < n; ++e) {
    int i = rng() % classes;
    c[i] = c[i].with(e);
  }
  std::vector<ElementSet> nonempty;
  for (ElementSet s : c) {
    if (!s.empty()) nonempty.push_back(s);
  }
  return make_partition(nonempty);
}

TEST(Beta, K4AndMatchings) {
  Matroid k4 = catalog_get("m_k4");
  Matroid mp = catalog_get("k4_matching_partition");
  EXPECT_EQ(covering_number(k4), 2);
  EXPECT_EQ(covering_number(mp), 2);
  IntersectionCover c = covering_number_intersection(k4, mp);
  ASSERT_EQ(c.verdict, Verdict::found);
  EXPECT_EQ(c.value, 3);
  EXPECT_EQ(c.refuted_below, 2);
}

TEST(Beta, JAndPartition) {
  Matroid j = catalog_get("j");
  Matroid jp = catalog_get("j_partition");
  EXPECT_EQ(covering_number(j), 2);
  EXPECT_EQ(covering_number(jp), 2);
  IntersectionCover c = covering_number_intersection(j, jp);
  ASSERT_EQ(c.verdict, Verdict::found);
  EXPECT_EQ(c.value, 3);
  EXPECT_EQ(brute_cover({j, jp}), 3);
}

TEST(Beta, JCommonBasesThroughH) {
  Matroid j = catalog_get("j");
  Matroid jp = catalog_get("j_partition");
  const int h = element_of(j, "h");
  std::vector<ElementSet> found;
  for (ElementSet b : enumerate_bases(j)) {
    if (b.contains(h) && jp.is_basis(b)) found.push_back(b);
  }
  std::vector<ElementSet> expected = {elements_of(j, "b,d,e,h"),
                                      elements_of(j, "c,f,g,h")};
  std::sort(found.begin(), found.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(found, expected);
  for (ElementSet b : found) EXPECT_FALSE(j.is_basis(j.ground_set() - b));
}

TEST(Beta, MatchesBruteForce) {
  std::mt19937 rng(11);
  for (int t = 0; t < 60; ++t) {
    int n = 4 + rng() % 5;
    Matroid m = t % 3 == 0   ? random_graph(4, n, rng)
                : t % 3 == 1 ? make_uniform(1 + rng() % 3, n)
                             : random_partition(n, 2 + rng() % 3, rng);
    if (!loops(m).empty()) continue;
    int beta = covering_number(m);
    EXPECT_EQ(beta, brute_cover({m}));
    auto p = find_partition(m, beta);
    ASSERT_TRUE(p);
    EXPECT_TRUE(p->well_formed());
    if (beta > 1) {
      EXPECT_FALSE(find_partition(m, beta - 1));
    }
  }
}

TEST(Beta, IntersectionMatchesBruteForce) {
  std::mt19937 rng(12);
  int checked = 0;
  for (int t = 0; t < 80; ++t) {
    int n = 4 + rng() % 4;
    Matroid m1 = t % 2 == 0 ? random_graph(4, n, rng) : make_uniform(2, n);
    Matroid m2 = random_partition(n, 2 + rng() % 3, rng);
    if (!loops(m1).empty()) continue;
    IntersectionCover c = covering_number_intersection(m1, m2);
    ASSERT_EQ(c.verdict, Verdict::found);
    EXPECT_EQ(c.value, brute_cover({m1, m2}));
    ASSERT_TRUE(c.partition);
    for (ElementSet part : c.partition->parts) {
      EXPECT_TRUE(m1.is_independent(part) && m2.is_independent(part));
    }
    ++checked;
  }
  EXPECT_GT(checked, 40);
}

TEST(Beta, LoopsRejected) {
  Matroid m = make_graphic(2, {{0, 0}, {0, 1}});
  EXPECT_THROW(covering_number(m), InputError);
}

TEST(Beta, BudgetGivesUnknown) {
  IntersectionCover c = covering_number_intersection(
      catalog_get("j"), catalog_get("j_partition"), 2);
  EXPECT_EQ(c.verdict, Verdict::unknown);
}

TEST(Pad, FillsToKBases) {
  Matroid m = make_graphic(3, {{0, 1}, {1, 2}, {0, 2}});
  Matroid p = pad_to_k_bases(m, 2);
  EXPECT_EQ(p.size(), 4);
  EXPECT_EQ(p.rank(), 2);
  EXPECT_EQ(covering_number(p), 2);
}

void check_decomposition(const Matroid& m1, const Matroid& m2) {
  CommonDecomposition d = decompose_common_sbro(m1, m2);
  const int k = std::max(covering_number(m1), covering_number(m2));
  EXPECT_EQ(d.k, k);
  EXPECT_LE(static_cast<int>(d.partition.parts.size()), k);
  EXPECT_TRUE(d.partition.well_formed());
  EXPECT_EQ(d.partition.ground, m1.ground_set());
  for (ElementSet part : d.partition.parts) {
    EXPECT_TRUE(m1.is_independent(part) && m2.is_independent(part));
  }
  for (size_t i = 1; i < d.potentials.size(); ++i) {
    EXPECT_GT(d.potentials[i], d.potentials[i - 1]);
  }
  EXPECT_EQ(static_cast<int>(d.potentials.size()), d.rounds + 1);
}

TEST(Decompose, UniformAndPartitionPairs) {
  std::mt19937 rng(13);
  for (int t = 0; t < 25; ++t) {
    int n = 4 + rng() % 5;
    Matroid m1 = make_uniform(1 + rng() % 3, n);
    Matroid m2 = random_partition(n, 2 + rng() % 3, rng);
    check_decomposition(m1, m2);
  }
}

TEST(Decompose, K4WithMatchingsIsNotSbro) {
  try {
    decompose_common_sbro(catalog_get("m_k4"),
                          catalog_get("k4_matching_partition"));
    FAIL() << "expected NotSbroError";
  } catch (const NotSbroError& e) {
    EXPECT_EQ(e.matroid_index(), 1);
  }
}

}  // namespace
}  // namespace sbrokit
