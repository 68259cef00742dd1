#include <gtest/gtest.h>

#include "sbrokit/catalog.hpp"
#include "sbrokit/derive.hpp"
#include "sbrokit/errors.hpp"
#include "sbrokit/io.hpp"
#include "sbrokit/representations.hpp"

namespace sbrokit {
namespace {

bool same_ranks(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  const uint64_t n = uint64_t{1} << a.size();
  for (uint64_t x = 0; x < n; ++x) {
    if (a.rank(ElementSet(x)) != b.rank(ElementSet(x))) return false;
  }
  return true;
}

std::string error_of(std::string_view doc) {
  try {
    parse_matroid(doc);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(Document, Uniform) {
  Matroid m = parse_matroid(R"({"type": "uniform", "r": 2, "n": 4})");
  EXPECT_EQ(m.kind(), RepKind::uniform);
  EXPECT_TRUE(same_ranks(m, make_uniform(2, 4)));
}

TEST(Document, CatalogLeaf) {
  Matroid m = parse_matroid(R"({"type": "catalog", "name": "s_5_6_12"})");
  EXPECT_EQ(m.size(), 12);
  EXPECT_EQ(m.rank(ElementSet::range(6)), 6);
}

TEST(Document, ContractDeleteGivesT) {
  Matroid m = parse_matroid(R"({"op": "contract", "set": [5], "of":
      {"op": "delete", "set": [11], "of":
        {"type": "catalog", "name": "s_5_6_12"}}})");
  EXPECT_TRUE(same_ranks(m, catalog_get("t")));
}

TEST(Document, EveryLeafType) {
  const char* docs[] = {
      R"({"type": "linear", "p": 3, "matrix": [[1, 0, 1], [0, 1, -1]]})",
      R"({"type": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]})",
      R"({"type": "partition", "classes": [[0, 1], [2]]})",
      R"({"type": "paving", "r": 3, "n": 6, "hyperplanes": [[0, 1, 2]]})",
      R"({"type": "spike", "r": 3, "transversals": [[1, 3, 5]]})",
      R"({"type": "spike", "r": 3})",
      R"({"type": "cyclic_flats", "r": 2, "n": 4, "flats": [{"set": [0, 1], "rank": 1}]})",
  };
  for (const char* doc : docs) {
    Matroid m = parse_matroid(doc);
    Matroid again = parse_matroid(serialize_matroid(m));
    EXPECT_TRUE(same_ranks(m, again)) << doc;
    EXPECT_EQ(serialize_matroid(m), serialize_matroid(again)) << doc;
  }
}

TEST(Document, OperatorsRoundTrip) {
  const char* docs[] = {
      R"({"op": "dual", "of": {"type": "uniform", "r": 2, "n": 5}})",
      R"({"op": "direct_sum", "args": [{"type": "uniform", "r": 1, "n": 2},
          {"type": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}]})",
      R"({"op": "truncate", "k": 2, "of": {"type": "uniform", "r": 3, "n": 5}})",
      R"({"op": "principal_extension", "flat": [0, 1, 2],
          "of": {"type": "graphic", "vertices": 4,
                 "edges": [[0, 1], [1, 2], [0, 2], [2, 3]]}})",
      R"({"op": "delete", "set": [0], "labels": ["p", "q", "r"],
          "of": {"type": "uniform", "r": 2, "n": 4}})",
  };
  for (const char* doc : docs) {
    Matroid m = parse_matroid(doc);
    std::string text = serialize_matroid(m);
    Matroid again = parse_matroid(text);
    EXPECT_TRUE(same_ranks(m, again)) << doc;
    EXPECT_EQ(text, serialize_matroid(again)) << doc;
    EXPECT_EQ(m.labels(), again.labels());
  }
}

TEST(Document, CatalogEntriesRoundTrip) {
  for (const std::string& name : catalog_names()) {
    if (!catalog_has(name)) continue;  // family placeholders
    Matroid m = catalog_get(name);
    if (m.size() > 12) continue;
    Matroid again = parse_matroid(serialize_matroid(m));
    EXPECT_TRUE(same_ranks(m, again)) << name;
    EXPECT_EQ(m.labels(), again.labels()) << name;
  }
  Matroid w = parse_matroid(serialize_matroid(make_whirl(3)));
  EXPECT_TRUE(same_ranks(w, make_whirl(3)));
}

TEST(Document, ErrorsCarryLocation) {
  EXPECT_NE(error_of("{").find("at byte"), std::string::npos);
  EXPECT_NE(error_of(R"({"type": "uniform", "r": 2})").find("missing \"n\""),
            std::string::npos);
  EXPECT_NE(error_of(R"({"type": "nope"})").find("at /type"), std::string::npos);
  EXPECT_NE(error_of(R"({"op": "delete", "set": [99],
      "of": {"type": "uniform", "r": 2, "n": 4}})").find("at /set/0"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"op": "delete", "set": [7],
      "of": {"type": "uniform", "r": 2, "n": 4}})").find("at /:"),
            std::string::npos);
  // Edge 1 is parallel to edge 0, so {0} is not closed.
  EXPECT_NE(error_of(R"({"op": "principal_extension", "flat": [0],
      "of": {"type": "graphic", "vertices": 2, "edges": [[0, 1], [0, 1]]}})")
                .find("not a flat"),
            std::string::npos);
  // Hyperplanes meeting in r - 1 elements.
  EXPECT_NE(error_of(R"({"type": "paving", "r": 3, "n": 5,
      "hyperplanes": [[0, 1, 2], [0, 1, 3]]})").find("at /"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"type": "spike", "r": 3, "transversals": [[0, 1, 3]]})")
                .find("at /"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"op": "direct_sum", "args": [{"type": "uniform",
      "r": 1, "n": 1}]})").find("at /args"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"type": "uniform", "r": 1, "n": 2, "labels": ["x"]})")
                .find("at /labels"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"op": "relaxation", "set": [0],
      "of": {"type": "catalog", "name": "m_k4"}})").find("at /:"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"type": "uniform", "op": "dual", "r": 1, "n": 2})")
                .find("exactly one"),
            std::string::npos);
}

TEST(Csv, Sets) {
  EXPECT_EQ(parse_csv_set(""), ElementSet());
  EXPECT_EQ(parse_csv_set("0, 3,5"), (ElementSet{0, 3, 5}));
  EXPECT_THROW(parse_csv_set("1,"), InputError);
  EXPECT_THROW(parse_csv_set("1,,2"), InputError);
  EXPECT_THROW(parse_csv_set("a"), InputError);
  EXPECT_THROW(parse_csv_set("64"), InputError);
  EXPECT_THROW(parse_csv_set("2,2"), InputError);
  auto [a, b] = parse_csv_pair("0,1;2");
  EXPECT_EQ(a, (ElementSet{0, 1}));
  EXPECT_EQ(b, (ElementSet{2}));
  EXPECT_THROW(parse_csv_pair("0,1"), InputError);
  EXPECT_THROW(parse_csv_pair("0;1;2"), InputError);
}

}  // namespace
}  // namespace sbrokit
