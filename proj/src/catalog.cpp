#include "sbrokit/catalog.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <mutex>

#include "sbrokit/covering.hpp"
#include "sbrokit/derive.hpp"
#include "sbrokit/errors.hpp"
#include "sbrokit/minors.hpp"
#include "sbrokit/representations.hpp"

namespace sbrokit {

namespace {

// GF(3) matrices, entered as printed (-1 is reduced mod 3 on input).
const std::vector<std::vector<int>> kMatrixS = {
    {1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1},
    {0, 1, 0, 0, 0, 0, 1, 0, 1, -1, -1, 1},
    {0, 0, 1, 0, 0, 0, 1, 1, 0, 1, -1, -1},
    {0, 0, 0, 1, 0, 0, 1, -1, 1, 0, 1, -1},
    {0, 0, 0, 0, 1, 0, 1, -1, -1, 1, 0, 1},
    {0, 0, 0, 0, 0, 1, 1, 1, -1, -1, 1, 0},
};

const std::vector<std::vector<int>> kMatrixT = {
    {1, 0, 0, 0, 0, 0, 1, 1, 1, 1},
    {0, 1, 0, 0, 0, 1, 0, 1, -1, -1},
    {0, 0, 1, 0, 0, 1, 1, 0, 1, -1},
    {0, 0, 0, 1, 0, 1, -1, 1, 0, 1},
    {0, 0, 0, 0, 1, 1, -1, -1, 1, 0},
};

const std::vector<std::vector<int>> kMatrixTPrime = {
    {1, 0, 0, 0, 0, 1, 1, 1, 1, 1},
    {0, 1, 0, 0, 0, 0, -1, -1, 1, 1},
    {0, 0, 1, 0, 0, -1, 0, 1, -1, 1},
    {0, 0, 0, 1, 0, 1, -1, 0, -1, 1},
    {0, 0, 0, 0, 1, -1, 1, -1, 0, 1},
};

const std::vector<std::vector<int>> kMatrixP = {
    {1, 0, 0, 0, 1, 1, 1, 1},
    {0, 1, 0, 0, 0, -1, -1, 1},
    {0, 0, 1, 0, -1, 0, 1, -1},
    {0, 0, 0, 1, 1, -1, 0, -1},
};

const std::vector<std::vector<int>> kMatrixPPrime = {
    {1, 0, 0, 0, -1, 0, -1, 1},
    {0, 1, 0, 0, 1, 1, 0, 1},
    {0, 0, 1, 0, 0, -1, -1, -1},
    {0, 0, 0, 1, -1, 1, 1, -1},
};

// Columns a..h; b, d, e, h form the identity block.
const std::vector<std::vector<int>> kMatrixJ = {
    {1, 1, 0, 0, 0, 1, 0, 0},
    {1, 0, 1, 1, 0, 0, 0, 0},
    {1, 0, 0, 0, 1, 0, 1, 0},
    {0, 0, 1, 0, 0, 1, 1, 1},
};

// Cube labels 1..8 (elements 0..7): top face 1,2,3,4 cyclic, i above i+4.
ElementSet cube(std::initializer_list<int> one_based) {
  ElementSet s;
  for (int v : one_based) s = s.with(v - 1);
  return s;
}

std::vector<ElementSet> cube_faces() {
  return {cube({1, 2, 3, 4}), cube({5, 6, 7, 8}), cube({1, 2, 5, 6}),
          cube({2, 3, 6, 7}), cube({3, 4, 7, 8}), cube({1, 4, 5, 8})};
}

std::vector<ElementSet> cube_other_planes() {
  return {cube({1, 2, 7, 8}), cube({2, 3, 5, 8}), cube({3, 4, 5, 6}),
          cube({1, 4, 6, 7}), cube({1, 3, 5, 7}), cube({2, 4, 6, 8}),
          cube({1, 3, 6, 8}), cube({2, 4, 5, 7})};
}

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Matroid build_k4() {
  return make_graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})
      .with_labels({"01", "02", "03", "12", "13", "23"});
}

Matroid build_x10() {
  std::vector<ElementSet> h;
  for (ElementSet f : cube_faces()) h.push_back(f.with(8));
  for (ElementSet f : cube_other_planes()) h.push_back(f.with(9));
  return make_paving(5, 10, h).with_labels(
      {"1", "2", "3", "4", "5", "6", "7", "8", "a", "b"});
}

Matroid build_ag32() {
  std::vector<ElementSet> h = cube_faces();
  for (ElementSet f : cube_other_planes()) h.push_back(f);
  return make_paving(4, 8, h).with_labels(
      {"1", "2", "3", "4", "5", "6", "7", "8"});
}

// a=0, b1=1, b2=2, c1=3, c2=4, d=5, e1=6, e2=7, f1=8, f2=9.
Matroid build_m_alpha() {
  const ElementSet a{0}, b{1, 2}, c{3, 4}, d{5}, e{6, 7}, f{8, 9};
  return make_cyclic_flats(5, 10,
                           {{c | b | e, 4},
                            {c | a | d, 3},
                            {f | e | a, 4},
                            {f | d | b, 3}})
      .with_labels({"a", "b1", "b2", "c1", "c2", "d", "e1", "e2", "f1", "f2"});
}

struct Fixed {
  CatalogEntry meta;
  std::function<Matroid()> build;
};

const std::vector<Fixed>& fixed_entries() {
  static const std::vector<Fixed> entries = {
      {{"m_k4", "graphic matroid of K4 (edges 01,02,03,12,13,23)",
        "complete graph on four vertices", 6, 3, 16},
       build_k4},
      {{"k4_matching_partition",
        "partition matroid of K4 into its three perfect matchings",
        "classes are the perfect matchings of K4", 6, 3, 8},
       [] {
         return make_partition({ElementSet{0, 5}, ElementSet{1, 4},
                                ElementSet{2, 3}})
             .with_labels({"01", "02", "03", "12", "13", "23"});
       }},
      {{"j", "the rank-4 ternary excluded minor J on a..h",
        "GF(3) matrix; planes from the standard description of J", 8,
        4, 50},
       [] {
         return make_linear(3, kMatrixJ)
             .with_labels({"a", "b", "c", "d", "e", "f", "g", "h"});
       }},
      {{"j_partition", "partition matroid {a,h},{b,g},{c,e},{d,f}",
        "classes {a,h},{b,g},{c,e},{d,f}", 8, 4, 16},
       [] {
         return make_partition({ElementSet{0, 7}, ElementSet{1, 6},
                                ElementSet{2, 4}, ElementSet{3, 5}})
             .with_labels({"a", "b", "c", "d", "e", "f", "g", "h"});
       }},
      {{"s_5_6_12", "S(5,6,12) from its GF(3) matrix S",
        "GF(3) matrix S", 12, 6, 792},
       [] { return make_linear(3, kMatrixS).with_labels(numbered("s", 12)); }},
      {{"t", "M[T] = M[S] / s6 \\ s12", "GF(3) matrix T", 10, 5, -1},
       [] { return make_linear(3, kMatrixT).with_labels(numbered("t", 10)); }},
      {{"t_prime", "M[T'], isomorphic to M[T]", "GF(3) matrix T'", 10,
        5, -1},
       [] {
         return make_linear(3, kMatrixTPrime).with_labels(numbered("t'", 10));
       }},
      {{"p8", "P8 = M[P] = M[T'] / t'5 \\ t'10", "GF(3) matrix P", 8, 4,
        -1},
       [] { return make_linear(3, kMatrixP).with_labels(numbered("p", 8)); }},
      {{"p_prime", "M[P'] = M[T'] / t'10 \\ t'5", "GF(3) matrix P'", 8,
        4, -1},
       [] {
         return make_linear(3, kMatrixPPrime).with_labels(numbered("p'", 8));
       }},
      {{"ag_3_2", "binary affine cube AG(3,2) as a paving matroid",
        "faces, diagonal planes and twisted planes as circuit-hyperplanes", 8, 4, 56},
       build_ag32},
      {{"x10", "rank-5 paving matroid X10 on 1..8, a, b",
        "circuit-hyperplanes from the family H", 10, 5, 238},
       build_x10},
      {{"m_alpha", "M_alpha from its cyclic flats",
        "lattice of cyclic flats", 10, 5, -1},
       build_m_alpha},
  };
  return entries;
}

// whirl_R or u_R_N.
bool parse_params(std::string_view name, std::string_view prefix,
                  std::vector<int>& out, size_t count) {
  if (name.substr(0, prefix.size()) != prefix) return false;
  std::string_view rest = name.substr(prefix.size());
  out.clear();
  while (!rest.empty()) {
    size_t cut = rest.find('_');
    std::string_view token = rest.substr(0, cut);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        token.empty() || token.size() > 3) {
      return false;
    }
    out.push_back(v);
    if (cut == std::string_view::npos) break;
    rest = rest.substr(cut + 1);
    if (rest.empty()) return false;
  }
  return out.size() == count;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

long long lucas(int n) {
  long long a = 2, b = 1;
  for (int i = 0; i < n; ++i) {
    long long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

std::optional<std::pair<CatalogEntry, std::function<Matroid()>>> lookup(
    std::string_view name) {
  for (const Fixed& f : fixed_entries()) {
    if (f.meta.name == name) return std::make_pair(f.meta, f.build);
  }
  std::vector<int> p;
  if (parse_params(name, "whirl_", p, 1) && p[0] >= 2 && p[0] <= 32) {
    const int r = p[0];
    CatalogEntry meta{std::string(name), "rank-" + std::to_string(r) + " whirl",
                      "wheel with its rim relaxed", 2 * r, r,
                      r <= 10 ? lucas(2 * r) - 1 : -1};
    return std::make_pair(meta, std::function<Matroid()>([r] {
                            return make_whirl(r);
                          }));
  }
  if (parse_params(name, "u_", p, 2) && p[0] >= 0 && p[0] <= p[1] &&
      p[1] <= kMaxElements) {
    const int r = p[0];
    const int n = p[1];
    CatalogEntry meta{std::string(name), "uniform matroid U_{r,n}",
                      "standard", n, r, n <= 62 ? binomial(n, r) : -1};
    return std::make_pair(meta, std::function<Matroid()>([r, n] {
                            return make_uniform(r, n);
                          }));
  }
  return std::nullopt;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const Fixed& f : fixed_entries()) out.push_back(f.meta);
    return out;
  }();
  return entries;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const Fixed& f : fixed_entries()) out.push_back(f.meta.name);
  out.push_back("whirl_r");
  out.push_back("u_r_n");
  return out;
}

bool catalog_has(std::string_view name) { return lookup(name).has_value(); }

CatalogEntry catalog_entry(std::string_view name) {
  auto found = lookup(name);
  if (!found) {
    throw InputError("unknown catalog entry '" + std::string(name) + "'");
  }
  return found->first;
}

Matroid catalog_get(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, Matroid, std::less<>> built;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = built.find(name);
    if (it != built.end()) return it->second;
  }
  auto found = lookup(name);
  if (!found) {
    throw InputError("unknown catalog entry '" + std::string(name) + "'");
  }
  const CatalogEntry& meta = found->first;
  Matroid m = found->second();
  auto fail = [&](const std::string& what) {
    throw ConstructionError("catalog entry " + meta.name + ": " + what);
  };
  if (m.size() != meta.size) fail("size " + std::to_string(m.size()));
  if (m.rank() != meta.rank) fail("rank " + std::to_string(m.rank()));
  if (meta.bases >= 0 && meta.size <= 20) {
    long long count = static_cast<long long>(enumerate_bases(m).size());
    if (count != meta.bases) fail("basis count " + std::to_string(count));
  }
  std::lock_guard<std::mutex> lock(mu);
  return built.emplace(std::string(name), m).first->second;
}

Matroid make_wheel(int r) {
  if (r < 2 || 2 * r > kMaxElements) {
    throw InputError("wheel: need 2 <= r <= 32");
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= r; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % r + 1);
  }
  return make_graphic(r + 1, edges);
}

ElementSet wheel_rim(int r) {
  ElementSet rim;
  for (int i = 0; i < r; ++i) rim = rim.with(2 * i + 1);
  return rim;
}

Matroid make_whirl(int r) { return relax(make_wheel(r), wheel_rim(r)); }

int element_of(const Matroid& m, std::string_view label) {
  const auto& labels = m.labels();
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return static_cast<int>(i);
  }
  int v = 0;
  auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), v);
  if (ec == std::errc() && ptr == label.data() + label.size() && v >= 0 &&
      v < m.size()) {
    return v;
  }
  throw InputError("no element labelled '" + std::string(label) + "'");
}

ElementSet elements_of(const Matroid& m, std::string_view labels) {
  ElementSet out;
  while (!labels.empty()) {
    size_t cut = labels.find(',');
    std::string_view token = labels.substr(0, cut);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) out = out.with(element_of(m, token));
    if (cut == std::string_view::npos) break;
    labels = labels.substr(cut + 1);
  }
  return out;
}

// ------------------------------------------------------------ self checks

namespace {

class Checker {
 public:
  explicit Checker(SelfCheckReport& r) : r_(r) {}

  void expect(bool ok, const std::string& fact) {
    if (ok) {
      r_.facts.push_back(fact);
    } else {
      r_.passed = false;
      r_.mismatches.push_back(fact);
    }
  }

  template <class T>
  void equal(const T& got, const T& want, const std::string& what) {
    std::string fact = what + " = " + std::to_string(want);
    if (got != want) fact += " (got " + std::to_string(got) + ")";
    expect(got == want, fact);
  }

 private:
  SelfCheckReport& r_;
};

bool same_rank_function(const Matroid& x, const Matroid& y) {
  if (x.size() != y.size() || x.size() > 20) return false;
  for (uint64_t s = 0; s < (uint64_t{1} << x.size()); ++s) {
    if (x.rank(ElementSet(s)) != y.rank(ElementSet(s))) return false;
  }
  return true;
}

int count_dependent(const Matroid& m, int k) {
  int count = 0;
  for_each_k_subset(m.ground_set(), k, [&](ElementSet x) {
    if (!m.is_independent(x)) ++count;
  });
  return count;
}

}  // namespace

SelfCheckReport self_check(std::string_view name) {
  SelfCheckReport report;
  report.name = std::string(name);
  Checker c(report);
  Matroid m = catalog_get(name);
  const CatalogEntry meta = catalog_entry(name);
  c.equal(m.size(), meta.size, "size");
  c.equal(m.rank(), meta.rank, "rank");
  if (m.size() <= 16) {
    c.expect(satisfies_rank_axioms(m.representation()), "rank axioms hold");
  }
  const long long bases = m.size() <= 20
                              ? static_cast<long long>(enumerate_bases(m).size())
                              : -1;
  if (meta.bases >= 0 && bases >= 0) c.equal(bases, meta.bases, "basis count");

  if (name == "m_k4") {
    c.equal(covering_number(m), 2, "beta");
    c.equal(static_cast<int>(circuits_within(m, m.ground_set()).size()), 7,
            "circuits");
  } else if (name == "j") {
    c.equal(covering_number(m), 2, "beta");
    c.expect(are_isomorphic(m, dual(m)).has_value(), "self-dual");
    c.expect(loops(m).empty() && loops(dual(m)).empty(), "no loops or coloops");
  } else if (name == "j_partition" || name == "k4_matching_partition") {
    c.equal(covering_number(m), 2, "beta");
  } else if (name == "s_5_6_12") {
    bool self_dual = true;
    for (ElementSet b : enumerate_bases(m)) {
      if (!m.is_basis(m.ground_set() - b)) self_dual = false;
    }
    c.expect(self_dual, "identically self-dual (complement of a basis is a basis)");
    std::vector<ElementSet> blocks;
    for_each_k_subset(m.ground_set(), 6, [&](ElementSet x) {
      if (!m.is_independent(x)) blocks.push_back(x);
    });
    c.equal(static_cast<int>(blocks.size()), 132, "blocks");
    bool steiner = true;
    for_each_k_subset(m.ground_set(), 5, [&](ElementSet x) {
      int hits = 0;
      for (ElementSet blk : blocks) hits += x.is_subset_of(blk) ? 1 : 0;
      if (hits != 1) steiner = false;
    });
    c.expect(steiner, "every 5-subset lies in exactly one block");
    c.equal(m.rank(ElementSet::range(6)), 6, "rank of s1..s6");
    c.equal(covering_number(m), 2, "beta");
  } else if (name == "t") {
    Minor mn = make_minor(catalog_get("s_5_6_12"), ElementSet{5},
                          ElementSet{11});
    c.expect(same_rank_function(mn.matroid, m), "equals M[S] / s6 \\ s12");
  } else if (name == "t_prime") {
    c.expect(are_isomorphic(m, catalog_get("t")).has_value(),
             "isomorphic to M[T]");
  } else if (name == "p8") {
    Minor mn = make_minor(catalog_get("t_prime"), ElementSet{4},
                          ElementSet{9});
    c.expect(same_rank_function(mn.matroid, m), "equals M[T'] / t'5 \\ t'10");
  } else if (name == "p_prime") {
    Minor mn = make_minor(catalog_get("t_prime"), ElementSet{9},
                          ElementSet{4});
    c.expect(same_rank_function(mn.matroid, m), "equals M[T'] / t'10 \\ t'5");
    // f : (p'1..p'8) -> (p5, p6, p3, p8, p1, p2, p7, p4).
    std::vector<int> f = {4, 5, 2, 7, 0, 1, 6, 3};
    c.expect(is_isomorphism(m, catalog_get("p8"), f),
             "f is an isomorphism onto M[P]");
  } else if (name == "ag_3_2") {
    c.equal(count_dependent(m, 4), 14, "dependent 4-sets");
    c.equal(count_dependent(m, 3), 0, "dependent 3-sets");
  } else if (name == "x10") {
    const auto* rep = m.as<PavingRep>();
    int with_a = 0;
    int with_b = 0;
    for (ElementSet h : rep->hyperplanes()) {
      with_a += h.contains(8) ? 1 : 0;
      with_b += h.contains(9) ? 1 : 0;
    }
    c.equal(static_cast<int>(rep->hyperplanes().size()), 14, "|H|");
    c.equal(with_a, 6, "members of H with a");
    c.equal(with_b, 8, "members of H with b");
    auto in_h = [&](const char* labels) {
      ElementSet s = elements_of(m, labels);
      for (ElementSet h : rep->hyperplanes()) {
        if (h == s) return true;
      }
      return false;
    };
    for (const char* s : {"3,4,7,8,a", "2,3,6,7,a", "3,4,5,6,b", "2,3,5,8,b"}) {
      c.expect(in_h(s), std::string("{") + s + "} in H");
    }
    ElementSet a = elements_of(m, "1,2,3,5,a");
    ElementSet b = elements_of(m, "4,6,7,8,b");
    c.expect(m.is_basis(a) && m.is_basis(b) && !a.intersects(b),
             "{1,2,3,5,a} and {4,6,7,8,b} are disjoint bases");
    std::vector<ElementSet> fives;
    for (ElementSet circ : circuits_within(m, m.ground_set())) {
      if (circ.size() == 5) fives.push_back(circ);
    }
    c.equal(static_cast<int>(fives.size()), 14, "circuits of size 5");
  } else if (name == "m_alpha") {
    auto r = [&](const char* labels) { return m.rank(elements_of(m, labels)); };
    c.equal(r("c1,c2,b1,b2,e1,e2"), 4, "r(C u B u E)");
    c.equal(r("c1,c2,a,d"), 3, "r(C u A u D)");
    c.equal(r("f1,f2,e1,e2,a"), 4, "r(F u E u A)");
    c.equal(r("f1,f2,d,b1,b2"), 3, "r(F u D u B)");
  } else if (name.substr(0, 6) == "whirl_") {
    c.expect(m.is_basis(wheel_rim(meta.rank)), "rim is a basis");
    if (meta.rank == 2) {
      c.expect(are_isomorphic(m, make_uniform(2, 4)).has_value(),
               "isomorphic to U_{2,4}");
    }
  }
  return report;
}

}  // namespace sbrokit
