#include "sbrokit/applications.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "sbrokit/errors.hpp"
#include "sbrokit/representations.hpp"

namespace sbrokit {

std::optional<std::pair<ElementSet, ElementSet>> complementary_bases(
    const Matroid& m) {
  const ElementSet e = m.ground_set();
  if (m.size() != 2 * m.rank()) return std::nullopt;
  for (ElementSet a : enumerate_bases(m)) {
    if (m.is_basis(e - a)) return std::pair{a, e - a};
  }
  return std::nullopt;
}

PathWitness ground_cover_path(const Matroid& m, Construction how) {
  auto pair = complementary_bases(m);
  if (!pair) throw InputError("ground set is not two disjoint bases");
  return construct_pp_path(m, pair->first, pair->second, how);
}

int min_parts_for(CoverShape shape) {
  switch (shape) {
    case CoverShape::path:
    case CoverShape::alternating_path: return 3;
    case CoverShape::alternating_two_regular: return 4;
    case CoverShape::two_regular: return 5;
    default: return 0;
  }
}

namespace {

using Adjacency = std::array<uint64_t, kMaxElements>;

void link(Adjacency& adj, int u, int v) {
  adj[u] |= uint64_t{1} << v;
  adj[v] |= uint64_t{1} << u;
}

Adjacency adjacency_of(const CoverGraph& g) {
  Adjacency adj{};
  for (auto [u, v] : g.edges) link(adj, u, v);
  return adj;
}

// Exact k-coloring by DSATUR-ordered backtracking; colors are 0-based.
class Colorer {
 public:
  Colorer(const Adjacency& adj, ElementSet vertices, int k)
      : adj_(adj), vertices_(vertices), k_(k) {
    color_.fill(-1);
  }

  std::optional<std::array<int, kMaxElements>> run() {
    if (assign(0)) return color_;
    return std::nullopt;
  }

 private:
  uint64_t used_colors(int v) const {
    uint64_t mask = 0;
    for (int u : ElementSet(adj_[v]) & vertices_) {
      if (color_[u] >= 0) mask |= uint64_t{1} << color_[u];
    }
    return mask;
  }

  bool assign(int highest) {
    int pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v : vertices_) {
      if (color_[v] >= 0) continue;
      int sat = std::popcount(used_colors(v));
      int deg = (ElementSet(adj_[v]) & vertices_).size();
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    if (pick < 0) return true;
    const uint64_t blocked = used_colors(pick);
    const int limit = std::min(k_, highest + 1);
    for (int c = 0; c < limit; ++c) {
      if ((blocked >> c) & 1U) continue;
      color_[pick] = c;
      if (assign(std::max(highest, c + 1))) return true;
    }
    color_[pick] = -1;
    return false;
  }

  const Adjacency& adj_;
  ElementSet vertices_;
  int k_;
  std::array<int, kMaxElements> color_{};
};

Partition classes_to_partition(const std::vector<ElementSet>& classes,
                               ElementSet ground, PartTag tag) {
  Partition p;
  p.ground = ground;
  p.tag = tag;
  for (ElementSet c : classes) {
    if (!c.empty()) p.parts.push_back(c);
  }
  return p;
}

// Path order from the smaller end; empty if g is not a path.
std::vector<int> path_order(const CoverGraph& g) {
  const Adjacency adj = adjacency_of(g);
  std::vector<int> order;
  if (g.vertices.empty()) return order;
  int start = -1;
  for (int v : g.vertices) {
    int d = std::popcount(adj[v]);
    if (d == 0 && g.vertices.size() == 1) start = v;
    if (d == 1) {
      start = v;
      break;
    }
  }
  if (start < 0) return order;
  int prev = -1;
  int cur = start;
  while (cur >= 0) {
    order.push_back(cur);
    int next = -1;
    for (int u : ElementSet(adj[cur])) {
      if (u != prev) next = u;
    }
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace

Partition color_cover_plus_partition(const CoverGraph& w, const Matroid& m2,
                                     int k) {
  const auto* rep = m2.as<PartitionRep>();
  if (rep == nullptr) throw InputError("M2 must be a partition matroid");
  const int need = min_parts_for(w.shape);
  if (need == 0) {
    throw InputError("W must be a path or a 2-regular graph");
  }
  if (k < need) {
    throw InputError("k = " + std::to_string(k) + " is below " +
                     std::to_string(need) + " for a " +
                     std::string(to_string(w.shape)));
  }
  if (w.vertices != m2.ground_set()) {
    throw InputError("W must be a graph on the ground set of M2");
  }
  Adjacency adj = adjacency_of(w);
  for (ElementSet c : rep->classes()) {
    if (c.size() > k) throw InputError("M2 is not k-coverable");
    for (int u : c) {
      for (int v : c) {
        if (u < v) link(adj, u, v);
      }
    }
  }
  auto colors = Colorer(adj, w.vertices, k).run();
  if (!colors) {
    throw TheoremViolation("W u Q has no proper " + std::to_string(k) +
                           "-coloring");
  }
  std::vector<ElementSet> classes(k);
  for (int v : w.vertices) classes[(*colors)[v]] = classes[(*colors)[v]].with(v);
  return classes_to_partition(classes, w.vertices, PartTag::common_independent);
}

GreedyColoring greedy_color(const CoverGraph& w, const Matroid& m2) {
  m2.check_subset(w.vertices);
  if (!(loops(m2) & w.vertices).empty()) {
    throw InputError("greedy_color: M2 has a loop in W");
  }
  std::vector<int> order;
  if (w.shape == CoverShape::path || w.shape == CoverShape::alternating_path) {
    order = path_order(w);
  }
  if (order.empty()) order = w.vertices.to_vector();
  const Adjacency adj = adjacency_of(w);
  GreedyColoring out;
  out.color_of.assign(m2.size(), 0);
  std::vector<ElementSet> classes;
  for (int e : order) {
    uint64_t blocked = 0;
    for (int u : ElementSet(adj[e])) {
      if (out.color_of[u] > 0) blocked |= uint64_t{1} << (out.color_of[u] - 1);
    }
    size_t c = 0;
    for (;; ++c) {
      if (c == classes.size()) classes.emplace_back();
      if ((blocked >> c) & 1U) continue;
      if (m2.rank(classes[c].with(e)) > m2.rank(classes[c])) break;
    }
    classes[c] = classes[c].with(e);
    out.color_of[e] = static_cast<int>(c) + 1;
  }
  out.colors = static_cast<int>(classes.size());
  out.partition = classes_to_partition(classes, w.vertices, PartTag::stable);
  return out;
}

SpannedPacking max_spanned(const Matroid& m, int e, uint64_t budget) {
  m.check_element(e);
  if (m.rank(ElementSet::single(e)) == 0) {
    throw InputError("max_spanned: element is a loop");
  }
  std::vector<ElementSet> sets;
  for (ElementSet c : circuits_within(m, m.ground_set())) {
    if (c.contains(e)) sets.push_back(c.without(e));
  }
  std::sort(sets.begin(), sets.end(), [](ElementSet x, ElementSet y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  Budget nodes(budget);
  std::vector<ElementSet> best;
  std::vector<ElementSet> current;
  bool out_of_budget = false;
  // Sets are sorted by size, so the smallest remaining one bounds the count.
  auto search = [&](auto&& self, size_t from, ElementSet used) -> void {
    if (out_of_budget) return;
    if (!nodes.charge()) {
      out_of_budget = true;
      return;
    }
    if (current.size() > best.size()) best = current;
    for (size_t i = from; i < sets.size(); ++i) {
      const int free = (m.ground_set().without(e) - used).size();
      if (current.size() + free / sets[i].size() <= best.size()) return;
      if (sets[i].intersects(used)) continue;
      current.push_back(sets[i]);
      self(self, i + 1, used | sets[i]);
      current.pop_back();
    }
  };
  search(search, 0, ElementSet{});
  SpannedPacking out;
  out.verdict = out_of_budget ? Verdict::unknown : Verdict::found;
  out.sets.push_back(ElementSet::single(e));
  out.sets.insert(out.sets.end(), best.begin(), best.end());
  out.value = static_cast<int>(out.sets.size());
  out.stats.nodes = nodes.used();
  return out;
}

Partition color_q_matroids(const std::vector<Matroid>& ms,
                           const std::vector<CoverGraph>& ws) {
  if (ms.empty() || ms.size() != ws.size()) {
    throw InputError("color_q_matroids: need one graph per matroid");
  }
  const ElementSet ground = ms.front().ground_set();
  Adjacency adj{};
  for (size_t i = 0; i < ms.size(); ++i) {
    if (ms[i].ground_set() != ground) {
      throw InputError("color_q_matroids: ground sets differ");
    }
    CoverGraph plain = ws[i];
    plain.shape = CoverShape::two_regular;
    if (ws[i].vertices != ground || !has_shape(plain, {}, {})) {
      throw InputError("color_q_matroids: W_" + std::to_string(i + 1) +
                       " is not 2-regular on E");
    }
    if (!covers(ws[i], circuits_within(ms[i], ground))) {
      throw InputError("color_q_matroids: W_" + std::to_string(i + 1) +
                       " misses a circuit of M_" + std::to_string(i + 1));
    }
    for (auto [u, v] : ws[i].edges) link(adj, u, v);
  }
  std::array<int, kMaxElements> color{};
  color.fill(-1);
  std::vector<ElementSet> classes;
  for (int v : ground) {
    uint64_t blocked = 0;
    for (int u : ElementSet(adj[v])) {
      if (color[u] >= 0) blocked |= uint64_t{1} << color[u];
    }
    int c = std::countr_one(blocked);
    color[v] = c;
    if (c >= static_cast<int>(classes.size())) classes.resize(c + 1);
    classes[c] = classes[c].with(v);
  }
  const int q = static_cast<int>(ms.size());
  if (static_cast<int>(classes.size()) > 2 * q + 1) {
    throw TheoremViolation("greedy coloring used more than 2q + 1 colors");
  }
  for (const Matroid& m : ms) {
    for (ElementSet c : classes) {
      if (!m.is_independent(c)) {
        throw TheoremViolation("a color class is dependent in some M_i");
      }
    }
  }
  return classes_to_partition(classes, ground, PartTag::common_independent);
}

ElementSet CyclicOrdering::a_interval(int i) const {
  ElementSet out;
  for (int j = i - 1; j < rank; ++j) out = out.with(sequence[j].element);
  for (int j = 0; j < i - 1; ++j) out = out.with(sequence[rank + j].element);
  return out;
}

ElementSet CyclicOrdering::b_interval(int i) const {
  ElementSet out;
  for (int j = i - 1; j < rank; ++j) out = out.with(sequence[rank + j].element);
  for (int j = 0; j < i - 1; ++j) out = out.with(sequence[j].element);
  return out;
}

CyclicCheck check_cyclic_ordering(const Matroid& m, const CyclicOrdering& o) {
  const int r = o.rank;
  if (static_cast<int>(o.sequence.size()) != 2 * r || r != m.rank()) {
    throw InputError("cyclic ordering has the wrong length");
  }
  CyclicCheck out;
  for (int i = 1; i <= r; ++i) {
    ElementSet ai = o.a_interval(i);
    if (ai.size() != r || !m.is_basis(ai)) out.a_intervals_bases = false;
    ElementSet bi = o.b_interval(i);
    int rank = m.rank(bi);
    out.b_interval_ranks.push_back(rank);
    if (rank < r - 1) out.b_intervals_near_bases = false;
    if (rank < bi.size() && i >= 2) {
      ElementSet drop_a = bi.without(o.sequence[i - 2].element);
      ElementSet drop_b = bi.without(o.sequence[r + i - 1].element);
      if (!m.is_independent(drop_a) || !m.is_independent(drop_b)) {
        out.repairable = false;
      }
    } else if (rank < bi.size()) {
      out.repairable = false;
    }
  }
  return out;
}

CyclicOrdering weak_cyclic_ordering(const Matroid& m, ElementSet a,
                                    ElementSet b, const PathWitness& p) {
  m.check_subset(a);
  m.check_subset(b);
  if (!m.is_basis(a) || !m.is_basis(b)) {
    throw InputError("weak_cyclic_ordering: A and B must be bases");
  }
  if (!has_shape(p.graph(true), a - b, b - a) ||
      ElementSet::from(p.sequence) != (a ^ b) ||
      static_cast<int>(p.sequence.size()) != (a ^ b).size()) {
    throw InputError("weak_cyclic_ordering: not an alternating path on A (+) B");
  }
  std::vector<int> seq = p.sequence;
  if (!seq.empty() && a.contains(seq.front())) std::reverse(seq.begin(), seq.end());
  CyclicOrdering o;
  o.rank = m.rank();
  std::vector<OrderedCopy> as, bs;
  for (size_t i = 0; i < seq.size(); i += 2) {
    bs.push_back({seq[i], 1});
    as.push_back({seq[i + 1], 0});
  }
  for (int e : a & b) {
    as.push_back({e, 0});
    bs.push_back({e, 1});
  }
  o.sequence = as;
  o.sequence.insert(o.sequence.end(), bs.begin(), bs.end());
  if (!check_cyclic_ordering(m, o).ok()) {
    throw TheoremViolation("cyclic ordering from the path fails its checks");
  }
  return o;
}

int stability_number(const CoverGraph& g, ElementSet ground) {
  const Adjacency adj = adjacency_of(g);
  auto best = [&](auto&& self, uint64_t pool) -> int {
    if (pool == 0) return 0;
    int pivot = -1;
    int deg = -1;
    for (int v : ElementSet(pool)) {
      int d = std::popcount(adj[v] & pool);
      if (d > deg) {
        deg = d;
        pivot = v;
      }
    }
    if (deg == 0) return std::popcount(pool);
    uint64_t without = pool & ~(uint64_t{1} << pivot);
    int skip = self(self, without);
    int take = 1 + self(self, without & ~adj[pivot]);
    return std::max(skip, take);
  };
  return best(best, ground.bits());
}

EdgeBoundReport edge_lower_bound_check(const Matroid& m, const CoverGraph& g) {
  EdgeBoundReport out;
  out.beta = covering_number(m);
  out.rank = m.rank();
  out.ground = m.size();
  if (out.ground != out.beta * out.rank) {
    throw InputError("ground set does not split into beta(M) bases");
  }
  auto parts = find_partition(m, out.beta);
  if (!parts) throw InputError("no partition into beta(M) bases");
  for (ElementSet part : parts->parts) {
    if (!m.is_basis(part)) {
      throw InputError("ground set does not split into beta(M) bases");
    }
  }
  m.check_subset(g.vertices);
  if (!covers(g, circuits_within(m, m.ground_set()))) {
    throw InputError("G does not cover every circuit of M");
  }
  std::set<std::pair<int, int>> distinct;
  for (auto [u, v] : g.edges) distinct.insert(std::minmax(u, v));
  out.edges = static_cast<int>(distinct.size());
  out.alpha = stability_number(g, m.ground_set());
  const double br = static_cast<double>(out.beta) * out.rank;
  out.bound = (out.beta * br - br) / 2.0;
  out.alpha_ok = out.alpha <= out.rank;
  out.edges_ok = out.edges >= out.bound;
  return out;
}

}  // namespace sbrokit
