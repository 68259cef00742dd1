#include "sbrokit/minors.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "sbrokit/derive.hpp"
#include "sbrokit/errors.hpp"

namespace sbrokit {

namespace {

struct Profile {
  int n = 0;
  int rank = 0;
  std::vector<ElementSet> circuits;
  std::vector<int> size_counts;               // circuits per size
  std::vector<std::vector<int>> element_sig;  // per element: circuits per size
  std::vector<int> loops_parallel;            // rank of {e}, size of its class

  bool compatible(const Profile& o) const {
    return n == o.n && rank == o.rank && size_counts == o.size_counts;
  }
};

Profile profile(const Matroid& m) {
  Profile p;
  p.n = m.size();
  p.rank = m.rank();
  p.circuits = circuits_within(m, m.ground_set());
  p.size_counts.assign(p.n + 2, 0);
  p.element_sig.assign(p.n, std::vector<int>(p.n + 2, 0));
  for (ElementSet c : p.circuits) {
    ++p.size_counts[c.size()];
    for (int e : c) ++p.element_sig[e][c.size()];
  }
  return p;
}

class IsoSearch {
 public:
  IsoSearch(const Profile& a, const Profile& b) : a_(a), b_(b) {
    for (ElementSet c : b_.circuits) target_.insert(c.bits());
    by_max_.assign(a_.n, {});
    for (ElementSet c : a_.circuits) by_max_[c.max()].push_back(c);
    map_.assign(a_.n, -1);
  }

  std::optional<std::vector<int>> run() {
    if (assign(0)) return map_;
    return std::nullopt;
  }

 private:
  bool assign(int e) {
    if (e == a_.n) return true;
    for (int f = 0; f < b_.n; ++f) {
      if (used_.contains(f) || a_.element_sig[e] != b_.element_sig[f]) {
        continue;
      }
      map_[e] = f;
      used_ = used_.with(f);
      bool ok = true;
      for (ElementSet c : by_max_[e]) {
        ElementSet image;
        for (int x : c) image = image.with(map_[x]);
        if (!target_.count(image.bits())) {
          ok = false;
          break;
        }
      }
      if (ok && assign(e + 1)) return true;
      used_ = used_.without(f);
      map_[e] = -1;
    }
    return false;
  }

  const Profile& a_;
  const Profile& b_;
  std::unordered_set<uint64_t> target_;
  std::vector<std::vector<ElementSet>> by_max_;
  std::vector<int> map_;
  ElementSet used_;
};

std::optional<std::vector<int>> isomorphism(const Profile& a,
                                            const Profile& b) {
  if (!a.compatible(b)) return std::nullopt;
  auto sorted_sigs = [](const Profile& p) {
    auto s = p.element_sig;
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sorted_sigs(a) != sorted_sigs(b)) return std::nullopt;
  return IsoSearch(a, b).run();
}

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const Matroid& m1,
                                               const Matroid& m2) {
  if (m1.size() != m2.size() || m1.rank() != m2.rank()) return std::nullopt;
  return isomorphism(profile(m1), profile(m2));
}

bool is_isomorphism(const Matroid& m1, const Matroid& m2,
                    const std::vector<int>& map) {
  if (m1.size() != m2.size() || static_cast<int>(map.size()) != m1.size()) {
    return false;
  }
  ElementSet image;
  for (int f : map) {
    if (f < 0 || f >= m2.size() || image.contains(f)) return false;
    image = image.with(f);
  }
  if (m1.size() > 20) {
    throw InputError("is_isomorphism: exhaustive check limited to n <= 20");
  }
  const uint64_t count = uint64_t{1} << m1.size();
  for (uint64_t s = 0; s < count; ++s) {
    ElementSet x(s);
    ElementSet y;
    for (int e : x) y = y.with(map[e]);
    if (m1.rank(x) != m2.rank(y)) return false;
  }
  return true;
}

bool verify_minor_witness(const Matroid& host, const Matroid& pattern,
                          const MinorWitness& w) {
  if (w.contract.intersects(w.del)) return false;
  Minor minor = make_minor(host, w.contract, w.del);
  if (minor.matroid.size() != pattern.size()) return false;
  // Translate host labels to minor labels.
  std::vector<int> local(pattern.size(), -1);
  for (int i = 0; i < pattern.size(); ++i) {
    auto it = std::find(minor.to_original.begin(), minor.to_original.end(),
                        w.map.at(i));
    if (it == minor.to_original.end()) return false;
    local[i] = static_cast<int>(it - minor.to_original.begin());
  }
  return is_isomorphism(pattern, minor.matroid, local);
}

SearchResult<MinorWitness> has_minor(const Matroid& host,
                                     const Matroid& pattern,
                                     uint64_t budget_limit) {
  SearchResult<MinorWitness> result;
  const int removed = host.size() - pattern.size();
  const int csize = host.rank() - pattern.rank();
  if (removed < 0 || csize < 0 || csize > removed ||
      pattern.size() - pattern.rank() > host.size() - host.rank()) {
    result.verdict = Verdict::none;
    return result;
  }
  Budget budget(budget_limit);
  const Profile target = profile(pattern);
  const ElementSet ground = host.ground_set();
  const int full = host.rank();
  bool done = false;
  bool out_of_budget = false;

  for_each_k_subset(ground, csize, [&](ElementSet c) {
    if (done || out_of_budget) return;
    if (!host.is_independent(c)) return;
    for_each_k_subset(ground - c, removed - csize, [&](ElementSet d) {
      if (done || out_of_budget) return;
      if (host.rank(ground - d) != full) return;
      ++result.stats.nodes;
      if (!budget.charge()) {
        out_of_budget = true;
        return;
      }
      Minor minor = make_minor(host, c, d);
      Profile candidate = profile(minor.matroid);
      auto iso = isomorphism(target, candidate);
      if (!iso) return;
      MinorWitness w{c, d, {}};
      for (int f : *iso) w.map.push_back(minor.to_original[f]);
      result.witness = std::move(w);
      done = true;
    });
  });
  result.stats.oracle_queries = result.stats.nodes;
  if (done) {
    result.verdict = Verdict::found;
  } else {
    result.verdict = out_of_budget ? Verdict::unknown : Verdict::none;
  }
  return result;
}

}  // namespace sbrokit
