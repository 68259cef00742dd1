#include <gtest/gtest.h>

#include <random>

#include "sbrokit/catalog.hpp"
#include "sbrokit/errors.hpp"
#include "sbrokit/orderability.hpp"
#include "sbrokit/representations.hpp"

namespace sbrokit {
namespace {

ExchangeWitness identity_shift(ElementSet a, ElementSet b,
                               std::vector<std::pair<int, int>> phi) {
  return ExchangeWitness{a, b, std::move(phi), std::nullopt};
}

TEST(Property, Parse) {
  EXPECT_EQ(ExchangeProperty::parse("kbo:3").k, 3);
  EXPECT_EQ(ExchangeProperty::parse("sbro").mode, ExchangeMode::sbro);
  EXPECT_EQ(ExchangeProperty::kbo(2).to_string(), "kbo:2");
  EXPECT_THROW(ExchangeProperty::parse("kbo:0"), InputError);
  EXPECT_THROW(ExchangeProperty::parse("xyz"), InputError);
}

TEST(Verify, TrivialPair) {
  Matroid m = catalog_get("m_k4");
  ElementSet a{0, 1, 2};
  EXPECT_TRUE(verify_witness(m, a, a, identity_shift(a, a, {})));
}

TEST(Verify, ListedWitnessOnP) {
  Matroid p = catalog_get("p8");
  ElementSet a{0, 1, 2, 3};
  ElementSet b{4, 5, 6, 7};
  EXPECT_TRUE(verify_witness(p, a, b,
                             identity_shift(a, b, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})));
}

TEST(Verify, ListedWitnessOnTPrime) {
  Matroid t = catalog_get("t_prime");
  ElementSet a = ElementSet::range(5);
  ElementSet b = ElementSet::range(10) - a;
  std::vector<std::pair<int, int>> phi;
  for (int i = 0; i < 5; ++i) phi.emplace_back(i, i + 5);
  EXPECT_TRUE(verify_witness(t, a, b, identity_shift(a, b, phi)));
}

TEST(Verify, MAlphaDisjointPair) {
  Matroid m = catalog_get("m_alpha");
  ElementSet a = elements_of(m, "a,b1,c1,e1,f1");
  ElementSet b = elements_of(m, "d,b2,c2,e2,f2");
  std::vector<std::pair<int, int>> phi;
  for (auto [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"a", "d"}, {"b1", "b2"}, {"c1", "c2"}, {"e1", "e2"}, {"f1", "f2"}}) {
    phi.emplace_back(element_of(m, x), element_of(m, y));
  }
  std::sort(phi.begin(), phi.end());
  EXPECT_TRUE(verify_witness(m, a, b, identity_shift(a, b, phi)));
}

TEST(Verify, Malformed) {
  Matroid m = make_uniform(2, 4);
  ElementSet a{0, 1};
  ElementSet b{2, 3};
  EXPECT_THROW(verify_witness(m, a, b, identity_shift(a, b, {{0, 2}})),
               InputError);
  EXPECT_THROW(verify_witness(m, a, b, identity_shift(a, b, {{0, 2}, {1, 2}})),
               InputError);
  EXPECT_THROW(verify_witness(m, a, ElementSet{0}, identity_shift(a, b, {})),
               InputError);
  EXPECT_THROW(
      verify_witness(m, a, b, identity_shift(ElementSet{0, 2}, b, {})),
      InputError);
}

TEST(Find, K4DisjointTreesNotSbro) {
  Matroid m = catalog_get("m_k4");
  // Two disjoint spanning trees: star at 0 (01,02,03) and path 1-2-3... use
  // {01,12,23} and {02,03,13}.
  ElementSet a{0, 3, 5};
  ElementSet b{1, 2, 4};
  ASSERT_TRUE(m.is_basis(a));
  ASSERT_TRUE(m.is_basis(b));
  auto r = find_exchange_witness(m, a, b, ExchangeProperty::sbro());
  EXPECT_EQ(r.verdict, Verdict::none);
}

TEST(Find, X10ListedPairNotSbro) {
  Matroid m = catalog_get("x10");
  auto r = find_exchange_witness(m, elements_of(m, "1,2,3,5,a"),
                                 elements_of(m, "4,6,7,8,b"),
                                 ExchangeProperty::sbro());
  EXPECT_EQ(r.verdict, Verdict::none);
}

TEST(Find, BudgetGivesUnknown) {
  Matroid m = catalog_get("x10");
  auto r = find_exchange_witness(m, elements_of(m, "1,2,3,5,a"),
                                 elements_of(m, "4,6,7,8,b"),
                                 ExchangeProperty::sbro(), 50);
  EXPECT_EQ(r.verdict, Verdict::unknown);
  EXPECT_FALSE(r.witness.has_value());
}

TEST(Find, SComplementaryPairHasWitness) {
  Matroid s = catalog_get("s_5_6_12");
  ElementSet a = ElementSet::range(6);
  auto r = find_exchange_witness(s, a, s.ground_set() - a,
                                 ExchangeProperty::sbro());
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_witness(s, a, s.ground_set() - a, *r.witness));
}

TEST(Find, ModeImplicationsAndRoundTrip) {
  std::mt19937 rng(3);
  for (const char* name : {"m_k4", "j", "p8", "m_alpha", "ag_3_2", "whirl_3"}) {
    Matroid m = catalog_get(name);
    auto bases = enumerate_bases(m);
    for (int trial = 0; trial < 25; ++trial) {
      ElementSet a = bases[rng() % bases.size()];
      ElementSet b = bases[rng() % bases.size()];
      std::map<std::string, Verdict> v;
      for (auto p : {ExchangeProperty::sbo(), ExchangeProperty::kbo(2),
                     ExchangeProperty::bo(), ExchangeProperty::sbro()}) {
        auto r = find_exchange_witness(m, a, b, p);
        ASSERT_NE(r.verdict, Verdict::unknown);
        v[p.to_string()] = r.verdict;
        if (r.found()) EXPECT_TRUE(verify_witness(m, a, b, *r.witness));
      }
      if (v["sbo"] == Verdict::found) {
        EXPECT_EQ(v["kbo:2"], Verdict::found) << name;
        EXPECT_EQ(v["sbro"], Verdict::found) << name;
      }
      if (v["kbo:2"] == Verdict::found) EXPECT_EQ(v["bo"], Verdict::found);
    }
  }
}

TEST(Class, UniformHoldsSbo) {
  auto r = check_class(make_uniform(3, 6), ExchangeProperty::sbo());
  EXPECT_EQ(r.verdict, ClassVerdict::holds);
  EXPECT_EQ(r.pairs_total, 20u * 19u / 2u);
}

TEST(Class, MAlphaFailsSbo) {
  auto r = check_class(catalog_get("m_alpha"), ExchangeProperty::sbo());
  EXPECT_EQ(r.verdict, ClassVerdict::fails);
  ASSERT_TRUE(r.counterexample.has_value());
}

TEST(Class, BinaryTernarySbroMatchesBo) {
  for (const char* name : {"m_k4", "j"}) {
    auto sbro = check_class(catalog_get(name), ExchangeProperty::sbro());
    auto bo = check_class(catalog_get(name), ExchangeProperty::bo());
    EXPECT_EQ(sbro.verdict, ClassVerdict::fails) << name;
    EXPECT_EQ(bo.verdict, sbro.verdict) << name;
  }
  // Series-parallel graph: K4 minus an edge.
  Matroid sp = make_graphic(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(check_class(sp, ExchangeProperty::sbro()).verdict,
            ClassVerdict::holds);
  EXPECT_EQ(check_class(sp, ExchangeProperty::bo()).verdict,
            ClassVerdict::holds);
}

TEST(Class, RelabelingInvariance) {
  Matroid m = catalog_get("m_alpha");
  const auto* rep = m.as<CyclicFlatsRep>();
  std::vector<int> perm = {3, 7, 1, 9, 0, 5, 2, 8, 6, 4};
  std::vector<std::pair<ElementSet, int>> flats;
  for (auto [z, r] : rep->flats()) {
    ElementSet image;
    for (int e : z) image = image.with(perm[e]);
    flats.emplace_back(image, r);
  }
  Matroid permuted = make_cyclic_flats(5, 10, flats);
  EXPECT_EQ(check_class(permuted, ExchangeProperty::sbo()).verdict,
            ClassVerdict::fails);
  EXPECT_EQ(check_class(permuted, ExchangeProperty::bo()).verdict,
            check_class(m, ExchangeProperty::bo()).verdict);
}

}  // namespace
}  // namespace sbrokit
