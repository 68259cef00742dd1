#include "sbrokit/orderability.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "sbrokit/errors.hpp"

namespace sbrokit {

ExchangeProperty ExchangeProperty::parse(const std::string& text) {
  if (text == "sbo") return sbo();
  if (text == "bo") return bo();
  if (text == "sbro") return sbro();
  if (text.rfind("kbo:", 0) == 0) {
    const std::string digits = text.substr(4);
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](char c) { return c >= '0' && c <= '9'; }) &&
        digits.size() < 4) {
      int k = std::stoi(digits);
      if (k >= 1) return kbo(k);
    }
  }
  throw InputError("unknown exchange property '" + text +
                   "' (expected sbo, bo, kbo:K or sbro)");
}

std::string ExchangeProperty::to_string() const {
  switch (mode) {
    case ExchangeMode::sbo:
      return "sbo";
    case ExchangeMode::bo:
      return "bo";
    case ExchangeMode::kbo:
      return "kbo:" + std::to_string(k);
    case ExchangeMode::sbro:
      return "sbro";
  }
  return "sbo";
}

std::string_view to_string(ClassVerdict v) {
  switch (v) {
    case ClassVerdict::holds:
      return "holds";
    case ClassVerdict::fails:
      return "fails";
    case ClassVerdict::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

void require_basis(const Matroid& m, ElementSet x, const char* name) {
  m.check_subset(x);
  if (!m.is_basis(x)) {
    throw InputError(std::string(name) + " = " + x.to_string() +
                     " is not a basis");
  }
}

struct BudgetOut {};

// Backtracking for a bijection phi : src -> dst such that both exchange
// forms give bases for every X with |X| <= limit. Elements of src are
// assigned in increasing order; each new assignment checks only the
// subsets that contain the newest element.
class BijectionSearch {
 public:
  BijectionSearch(const Matroid& m, ElementSet a, ElementSet b, int limit,
                  Budget& budget, SearchStats& stats)
      : m_(m),
        a_(a),
        b_(b),
        src_((a - b).to_vector()),
        dst_((b - a).to_vector()),
        limit_(limit),
        budget_(budget),
        stats_(stats),
        rank_(m.rank()) {
    phi_.assign(src_.size(), -1);
  }

  // Throws BudgetOut on exhaustion.
  std::optional<std::vector<std::pair<int, int>>> run() {
    used_ = 0;
    if (!descend(0)) return std::nullopt;
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < src_.size(); ++i) {
      out.emplace_back(src_[i], dst_[phi_[i]]);
    }
    return out;
  }

 private:
  bool is_basis(ElementSet s) {
    ++stats_.oracle_queries;
    if (!budget_.charge()) throw BudgetOut{};
    return m_.rank(s) == rank_;
  }

  // Enumerate subsets T of positions [0, depth) with |T| <= room, and test
  // X = T + depth.
  bool consistent(int depth) {
    const ElementSet x0 = ElementSet::single(src_[depth]);
    const ElementSet y0 = ElementSet::single(dst_[phi_[depth]]);
    return extend(depth, 0, limit_ - 1, x0, y0);
  }

  bool extend(int depth, int from, int room, ElementSet x, ElementSet y) {
    if (!is_basis((a_ - x) | y)) return false;
    if (!is_basis((b_ - y) | x)) return false;
    if (room == 0) return true;
    for (int p = from; p < depth; ++p) {
      if (!extend(depth, p + 1, room - 1, x.with(src_[p]),
                  y.with(dst_[phi_[p]]))) {
        return false;
      }
    }
    return true;
  }

  bool descend(int depth) {
    if (depth == static_cast<int>(src_.size())) return true;
    for (size_t j = 0; j < dst_.size(); ++j) {
      if (used_ & (uint64_t{1} << j)) continue;
      ++stats_.nodes;
      phi_[depth] = static_cast<int>(j);
      used_ |= uint64_t{1} << j;
      if (consistent(depth) && descend(depth + 1)) return true;
      used_ &= ~(uint64_t{1} << j);
    }
    phi_[depth] = -1;
    return false;
  }

  const Matroid& m_;
  ElementSet a_;
  ElementSet b_;
  std::vector<int> src_;
  std::vector<int> dst_;
  int limit_;
  Budget& budget_;
  SearchStats& stats_;
  int rank_;
  std::vector<int> phi_;
  uint64_t used_ = 0;
};

int limit_for(ExchangeProperty p, int m) {
  switch (p.mode) {
    case ExchangeMode::bo:
      return std::min(1, m);
    case ExchangeMode::kbo:
      return std::min(p.k, m);
    case ExchangeMode::sbo:
    case ExchangeMode::sbro:
      return m;
  }
  return m;
}

}  // namespace

bool verify_witness(const Matroid& m, ElementSet a, ElementSet b,
                    const ExchangeWitness& w) {
  require_basis(m, a, "A");
  require_basis(m, b, "B");
  const ElementSet ap = w.a_prime;
  const ElementSet bp = w.b_prime;
  m.check_subset(ap);
  m.check_subset(bp);
  if ((ap & bp) != (a & b) || (ap | bp) != (a | b) ||
      ap.size() != a.size() || bp.size() != b.size()) {
    throw InputError("witness repartition does not preserve A n B and A u B");
  }
  const ElementSet src = ap - bp;
  const ElementSet dst = bp - ap;
  if (static_cast<int>(w.bijection.size()) != src.size()) {
    throw InputError("witness bijection has the wrong number of pairs");
  }
  ElementSet seen_src;
  ElementSet seen_dst;
  for (auto [x, y] : w.bijection) {
    if (x < 0 || y < 0 || x >= m.size() || y >= m.size() ||
        !src.contains(x) || !dst.contains(y) || seen_src.contains(x) ||
        seen_dst.contains(y)) {
      throw InputError("witness is not a bijection A'\\B' -> B'\\A'");
    }
    seen_src = seen_src.with(x);
    seen_dst = seen_dst.with(y);
  }
  if (w.exchange_bound && *w.exchange_bound < 1) {
    throw InputError("witness exchange bound must be positive");
  }
  if (!m.is_basis(ap) || !m.is_basis(bp)) return false;

  const int n = static_cast<int>(w.bijection.size());
  const int bound = w.exchange_bound ? std::min(*w.exchange_bound, n) : n;
  bool first_ok = true;
  bool second_ok = true;
  std::vector<std::pair<int, int>> pairs = w.bijection;
  // Walk all subsets of positions of size <= bound.
  auto walk = [&](auto&& self, int from, int room, ElementSet x,
                  ElementSet y) -> void {
    if (!m.is_basis((ap - x) | y)) first_ok = false;
    if (!m.is_basis((bp - y) | x)) second_ok = false;
    if (room == 0) return;
    for (int p = from; p < n; ++p) {
      self(self, p + 1, room - 1, x.with(pairs[p].first),
           y.with(pairs[p].second));
      if (!first_ok && !second_ok) return;
    }
  };
  walk(walk, 0, bound, ElementSet(), ElementSet());
  if (bound == n && first_ok != second_ok) {
    throw TheoremViolation(
        "full-strength exchange forms disagree; rank oracle is inconsistent");
  }
  return first_ok && second_ok;
}

SearchResult<ExchangeWitness> find_exchange_witness(const Matroid& m,
                                                    ElementSet a, ElementSet b,
                                                    ExchangeProperty property,
                                                    uint64_t budget_limit) {
  require_basis(m, a, "A");
  require_basis(m, b, "B");
  if (property.mode == ExchangeMode::kbo && property.k < 1) {
    throw InputError("kbo needs k >= 1");
  }
  SearchResult<ExchangeWitness> result;
  Budget budget(budget_limit);
  const int half = (a - b).size();
  std::optional<int> bound;
  if (property.mode == ExchangeMode::bo) bound = 1;
  if (property.mode == ExchangeMode::kbo) bound = property.k;

  auto attempt = [&](ElementSet ap, ElementSet bp) -> bool {
    BijectionSearch search(m, ap, bp, limit_for(property, half), budget,
                           result.stats);
    auto phi = search.run();
    if (!phi) return false;
    result.verdict = Verdict::found;
    result.witness = ExchangeWitness{ap, bp, std::move(*phi), bound};
    return true;
  };

  try {
    if (attempt(a, b)) return result;
    if (property.mode == ExchangeMode::sbro && half > 0) {
      const ElementSet common = a & b;
      const ElementSet diff = a ^ b;
      const int pivot = diff.min();
      const ElementSet first = (a - b).contains(pivot) ? a - b : b - a;
      bool done = false;
      for_each_k_subset(diff.without(pivot), half - 1, [&](ElementSet rest) {
        if (done) return;
        const ElementSet s = rest.with(pivot);
        if (s == first) return;
        const ElementSet ap = common | s;
        const ElementSet bp = common | (diff - s);
        result.stats.oracle_queries += 2;
        if (!budget.charge(2)) throw BudgetOut{};
        if (m.rank(ap) != m.rank() || m.rank(bp) != m.rank()) return;
        if (attempt(ap, bp)) done = true;
      });
      if (done) return result;
    }
    result.verdict = Verdict::none;
  } catch (const BudgetOut&) {
    result.verdict = Verdict::unknown;
    result.witness.reset();
  }
  return result;
}

namespace {

struct PairKey {
  uint64_t common;
  uint64_t all;
  bool operator<(const PairKey& o) const {
    return common != o.common ? common < o.common : all < o.all;
  }
};

}  // namespace

ClassCheck check_pairs(
    const Matroid& m, ExchangeProperty property,
    const std::vector<std::pair<ElementSet, ElementSet>>& pairs,
    uint64_t budget_per_pair) {
  ClassCheck out;
  out.pairs_total = pairs.size();
  std::map<PairKey, Verdict> settled;
  const bool by_key = property.mode == ExchangeMode::sbro;
  for (const auto& [a, b] : pairs) {
    ++out.pairs_checked;
    Verdict v;
    PairKey key{(a & b).bits(), (a | b).bits()};
    auto it = by_key ? settled.find(key) : settled.end();
    if (it != settled.end()) {
      v = it->second;
    } else {
      auto r = find_exchange_witness(m, a, b, property, budget_per_pair);
      ++out.pairs_searched;
      out.stats.oracle_queries += r.stats.oracle_queries;
      out.stats.nodes += r.stats.nodes;
      out.max_queries_per_pair =
          std::max(out.max_queries_per_pair, r.stats.oracle_queries);
      v = r.verdict;
      if (by_key) settled.emplace(key, v);
    }
    if (v == Verdict::none) {
      out.verdict = ClassVerdict::fails;
      out.counterexample = std::make_pair(a, b);
      return out;
    }
    if (v == Verdict::unknown && !out.unresolved_pair) {
      out.unresolved_pair = std::make_pair(a, b);
    }
  }
  out.verdict =
      out.unresolved_pair ? ClassVerdict::unknown : ClassVerdict::holds;
  return out;
}

ClassCheck check_class(const Matroid& m, ExchangeProperty property,
                       uint64_t budget_per_pair, PairOrder order) {
  const std::vector<ElementSet> bases = enumerate_bases(m);
  std::vector<std::pair<ElementSet, ElementSet>> pairs;
  pairs.reserve(bases.size() * (bases.size() - (bases.empty() ? 0 : 1)) / 2);
  for (size_t i = 0; i < bases.size(); ++i) {
    for (size_t j = i + 1; j < bases.size(); ++j) {
      pairs.emplace_back(bases[i], bases[j]);
    }
  }
  if (order == PairOrder::disjoint_first) {
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& p, const auto& q) {
                       return (p.first & p.second).size() <
                              (q.first & q.second).size();
                     });
  }
  ClassCheck out = check_pairs(m, property, pairs, budget_per_pair);
  out.bases = bases.size();
  return out;
}

}  // namespace sbrokit
