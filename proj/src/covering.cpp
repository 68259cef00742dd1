#include "sbrokit/covering.hpp"

#include <algorithm>
#include <deque>

#include "sbrokit/derive.hpp"
#include "sbrokit/errors.hpp"
#include "sbrokit/representations.hpp"

namespace sbrokit {

std::string_view to_string(PartTag tag) {
  switch (tag) {
    case PartTag::independent:
      return "independent";
    case PartTag::common_independent:
      return "common_independent";
    case PartTag::stable:
      return "stable";
  }
  return "independent";
}

ElementSet Partition::union_of_parts() const {
  ElementSet out;
  for (ElementSet p : parts) out |= p;
  return out;
}

bool Partition::pairwise_disjoint() const {
  ElementSet seen;
  for (ElementSet p : parts) {
    if (p.intersects(seen)) return false;
    seen |= p;
  }
  return true;
}

bool Partition::well_formed() const {
  for (ElementSet p : parts) {
    if (p.empty()) return false;
  }
  return pairwise_disjoint() && union_of_parts() == ground;
}

namespace {

void require_loopless(const Matroid& m, const char* what) {
  ElementSet l = loops(m);
  if (!l.empty()) {
    throw InputError(std::string(what) + ": matroid has a loop (element " +
                     std::to_string(l.min()) + ")");
  }
}

struct NodesOut {};

// Assigns elements in index order to existing parts or to one new part.
class PartitionSearch {
 public:
  PartitionSearch(std::vector<const Matroid*> ms, int k, Budget* budget)
      : ms_(std::move(ms)), k_(k), budget_(budget) {
    n_ = ms_.front()->size();
    cap_ = n_;
    for (const Matroid* m : ms_) cap_ = std::min(cap_, m->rank());
    parts_.assign(k_, ElementSet());
  }

  bool run() {
    if (static_cast<long long>(k_) * cap_ < n_) return false;
    return place(0, 0);
  }

  std::vector<ElementSet> parts() const {
    std::vector<ElementSet> out;
    for (ElementSet p : parts_) {
      if (!p.empty()) out.push_back(p);
    }
    return out;
  }

  uint64_t nodes() const { return nodes_; }

 private:
  bool independent(ElementSet x) const {
    for (const Matroid* m : ms_) {
      if (m->rank(x) != x.size()) return false;
    }
    return true;
  }

  bool place(int e, int used) {
    if (e == n_) return true;
    ++nodes_;
    if (budget_ && !budget_->charge()) throw NodesOut{};
    // Room left in the open parts and the parts not opened yet.
    long long room = static_cast<long long>(k_ - used) * cap_;
    for (int p = 0; p < used; ++p) room += cap_ - parts_[p].size();
    if (room < n_ - e) return false;
    const int limit = std::min(used + 1, k_);
    for (int p = 0; p < limit; ++p) {
      if (parts_[p].size() >= cap_) continue;
      ElementSet next = parts_[p].with(e);
      if (!independent(next)) continue;
      parts_[p] = next;
      if (place(e + 1, p == used ? used + 1 : used)) return true;
      parts_[p] = parts_[p].without(e);
    }
    return false;
  }

  std::vector<const Matroid*> ms_;
  int k_;
  Budget* budget_;
  int n_ = 0;
  int cap_ = 0;
  std::vector<ElementSet> parts_;
  uint64_t nodes_ = 0;
};

}  // namespace

int covering_number(const Matroid& m) {
  require_loopless(m, "covering_number");
  const int n = m.size();
  if (n == 0) return 0;
  if (n <= 20) {
    int best = 1;
    const uint64_t count = uint64_t{1} << n;
    for (uint64_t s = 1; s < count; ++s) {
      ElementSet x(s);
      int r = m.rank(x);
      best = std::max(best, (x.size() + r - 1) / r);
    }
    return best;
  }
  for (int k = (n + m.rank() - 1) / m.rank();; ++k) {
    if (find_partition(m, k)) return k;
  }
}

std::optional<Partition> find_partition(const Matroid& m, int k) {
  if (k < 1) throw InputError("find_partition: k must be at least 1");
  require_loopless(m, "find_partition");
  PartitionSearch search({&m}, k, nullptr);
  if (!search.run()) return std::nullopt;
  return Partition{search.parts(), m.ground_set(), PartTag::independent};
}

SearchResult<Partition> find_common_partition(const Matroid& m1,
                                              const Matroid& m2, int k,
                                              uint64_t budget_limit) {
  if (m1.size() != m2.size()) {
    throw InputError("intersection: ground sets differ in size");
  }
  if (k < 1) throw InputError("find_common_partition: k must be at least 1");
  require_loopless(m1, "intersection");
  require_loopless(m2, "intersection");
  SearchResult<Partition> result;
  Budget budget(budget_limit);
  PartitionSearch search({&m1, &m2}, k, &budget);
  try {
    if (search.run()) {
      result.verdict = Verdict::found;
      result.witness = Partition{search.parts(), m1.ground_set(),
                                 PartTag::common_independent};
    } else {
      result.verdict = Verdict::none;
    }
  } catch (const NodesOut&) {
    result.verdict = Verdict::unknown;
  }
  result.stats.nodes = search.nodes();
  return result;
}

IntersectionCover covering_number_intersection(const Matroid& m1,
                                               const Matroid& m2,
                                               uint64_t budget, int max_k) {
  if (m1.size() != m2.size()) {
    throw InputError("intersection: ground sets differ in size");
  }
  IntersectionCover out;
  const int n = m1.size();
  if (n == 0) {
    out.verdict = Verdict::found;
    out.partition = Partition{{}, ElementSet(), PartTag::common_independent};
    return out;
  }
  const int lo = std::max(covering_number(m1), covering_number(m2));
  out.refuted_below = lo - 1;
  uint64_t left = budget;
  for (int k = lo; k <= std::min(max_k, n); ++k) {
    auto r = find_common_partition(m1, m2, k, left);
    out.stats.nodes += r.stats.nodes;
    left = r.stats.nodes >= left ? 0 : left - r.stats.nodes;
    if (r.verdict == Verdict::found) {
      out.verdict = Verdict::found;
      out.value = k;
      out.partition = std::move(r.witness);
      return out;
    }
    if (r.verdict == Verdict::unknown) {
      out.verdict = Verdict::unknown;
      return out;
    }
    out.refuted_below = k;
  }
  out.verdict = Verdict::none;
  return out;
}

Matroid pad_to_k_bases(const Matroid& m, int k, int target_rank) {
  const int r = target_rank < 0 ? m.rank() : target_rank;
  if (k < 1) throw InputError("pad_to_k_bases: k must be at least 1");
  if (r < m.rank()) {
    throw InputError("pad_to_k_bases: target rank below r(M)");
  }
  const long long total = static_cast<long long>(k) * r;
  if (total < m.size()) {
    throw InputError("pad_to_k_bases: k * r is smaller than |E|");
  }
  if (total > kMaxElements) {
    throw InputError("pad_to_k_bases: padded ground set exceeds 64 elements");
  }
  const int extra = static_cast<int>(total) - m.size();
  if (extra == 0 && r == m.rank()) return m;
  Matroid sum = extra > 0 ? direct_sum(m, make_free(extra)) : m;
  if (sum.rank() < r) {
    throw InputError("pad_to_k_bases: padding cannot reach the target rank");
  }
  Matroid out = sum.rank() > r ? truncate(sum, r) : sum;
  std::vector<std::string> labels = m.labels();
  for (int i = 0; i < extra; ++i) labels.push_back("+" + std::to_string(i));
  return out.with_labels(std::move(labels));
}

SbroWitnessFn default_sbro_witness() {
  return [](const Matroid& m, ElementSet a,
            ElementSet b) -> std::optional<ExchangeWitness> {
    auto r = find_exchange_witness(m, a, b, ExchangeProperty::sbro());
    if (!r.found()) return std::nullopt;
    return r.witness;
  };
}

NotSbroError::NotSbroError(int matroid_index, ElementSet a, ElementSet b)
    : TheoremViolation("no SBRO witness in matroid " +
                       std::to_string(matroid_index) + " for bases " +
                       a.to_string() + " and " + b.to_string()),
      matroid_index_(matroid_index),
      a_(a),
      b_(b) {}

namespace {

std::vector<ElementSet> basis_partition(const Matroid& m, int k) {
  auto p = find_partition(m, k);
  if (!p || static_cast<int>(p->parts.size()) != k) {
    throw TheoremViolation("padded matroid does not split into k bases");
  }
  for (ElementSet part : p->parts) {
    if (!m.is_basis(part)) {
      throw TheoremViolation("padded matroid does not split into k bases");
    }
  }
  return p->parts;
}

int potential(const std::vector<ElementSet>& x,
              const std::vector<ElementSet>& y) {
  int total = 0;
  for (size_t i = 0; i < x.size(); ++i) total += (x[i] & y[i]).size();
  return total;
}

ExchangeWitness fetch(const SbroWitnessFn& fn, const Matroid& m, int index,
                      ElementSet a, ElementSet b) {
  auto w = fn(m, a, b);
  if (!w) throw NotSbroError(index, a, b);
  if (!verify_witness(m, a, b, *w)) {
    throw TheoremViolation("witness function returned an invalid witness for " +
                           a.to_string() + ", " + b.to_string());
  }
  return *w;
}

}  // namespace

CommonDecomposition decompose_common_sbro(const Matroid& m1,
                                          const Matroid& m2,
                                          const SbroWitnessFn& witness) {
  if (m1.size() != m2.size()) {
    throw InputError("intersection: ground sets differ in size");
  }
  require_loopless(m1, "decompose_common_sbro");
  require_loopless(m2, "decompose_common_sbro");
  CommonDecomposition out;
  const int n = m1.size();
  out.partition.ground = m1.ground_set();
  out.partition.tag = PartTag::common_independent;
  if (n == 0) return out;

  const int k = std::max(covering_number(m1), covering_number(m2));
  const int r = std::max(m1.rank(), m2.rank());
  Matroid p1 = pad_to_k_bases(m1, k, r);
  Matroid p2 = pad_to_k_bases(m2, k, r);
  out.k = k;
  out.padded_size = p1.size();

  std::vector<ElementSet> x = basis_partition(p1, k);
  std::vector<ElementSet> y = basis_partition(p2, k);
  int pot = potential(x, y);
  out.potentials.push_back(pot);

  while (pot < p1.size()) {
    int pi = -1;
    int pj = -1;
    for (int i = 0; i < k && pi < 0; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i != j && x[i].intersects(y[j])) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) throw TheoremViolation("partitions differ but no i != j found");

    ExchangeWitness w1 = fetch(witness, p1, 1, x[pi], x[pj]);
    ExchangeWitness w2 = fetch(witness, p2, 2, y[pi], y[pj]);

    const ElementSet xs = x[pi] | x[pj];
    const ElementSet ys = y[pi] | y[pj];
    const ElementSet verts = xs | ys;
    std::vector<std::vector<int>> adj(p1.size());
    for (const auto* w : {&w1, &w2}) {
      for (auto [u, v] : w->bijection) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
    // Two-colour the union of the matchings, smallest vertex first.
    std::vector<int> colour(p1.size(), -1);
    ElementSet side;
    for (int s : verts) {
      if (colour[s] >= 0) continue;
      colour[s] = 0;
      std::deque<int> queue{s};
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (colour[u] == 0) side = side.with(u);
        for (int v : adj[u]) {
          if (colour[v] < 0) {
            colour[v] = 1 - colour[u];
            queue.push_back(v);
          } else if (colour[v] == colour[u]) {
            throw TheoremViolation("union of two matchings is not bipartite");
          }
        }
      }
    }
    x[pi] = side & xs;
    x[pj] = xs - side;
    y[pi] = side & ys;
    y[pj] = ys - side;
    for (int idx : {pi, pj}) {
      if (!p1.is_basis(x[idx]) || !p2.is_basis(y[idx])) {
        throw TheoremViolation("recoloured parts are not bases");
      }
    }
    int next = potential(x, y);
    if (next <= pot) {
      throw TheoremViolation("potential did not increase (" +
                             std::to_string(pot) + " -> " +
                             std::to_string(next) + ")");
    }
    pot = next;
    out.potentials.push_back(pot);
    ++out.rounds;
  }

  const ElementSet ground = m1.ground_set();
  for (ElementSet part : x) {
    ElementSet kept = part & ground;
    if (kept.empty()) continue;
    if (!m1.is_independent(kept) || !m2.is_independent(kept)) {
      throw TheoremViolation("decomposition part " + kept.to_string() +
                             " is not common independent");
    }
    out.partition.parts.push_back(kept);
  }
  return out;
}

}  // namespace sbrokit
