#include "sbrokit/circuit_cover.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

#include "sbrokit/errors.hpp"
#include "sbrokit/orderability.hpp"
#include "sbrokit/representations.hpp"

namespace sbrokit {

std::string_view to_string(CoverShape shape) {
  switch (shape) {
    case CoverShape::two_regular: return "two_regular";
    case CoverShape::alternating_two_regular: return "alternating_two_regular";
    case CoverShape::path: return "path";
    case CoverShape::alternating_path: return "alternating_path";
    case CoverShape::tree: return "tree";
    case CoverShape::free: return "free";
  }
  return "?";
}

std::string_view to_string(CoverProperty p) {
  switch (p) {
    case CoverProperty::r: return "r";
    case CoverProperty::r_plus: return "rplus";
    case CoverProperty::p: return "p";
    case CoverProperty::p_plus: return "pplus";
  }
  return "?";
}

CoverProperty parse_cover_property(std::string_view text) {
  if (text == "r") return CoverProperty::r;
  if (text == "rplus" || text == "r+") return CoverProperty::r_plus;
  if (text == "p") return CoverProperty::p;
  if (text == "pplus" || text == "p+") return CoverProperty::p_plus;
  throw InputError("unknown cover property: " + std::string(text));
}

CoverShape shape_of(CoverProperty p) {
  switch (p) {
    case CoverProperty::r: return CoverShape::two_regular;
    case CoverProperty::r_plus: return CoverShape::alternating_two_regular;
    case CoverProperty::p: return CoverShape::path;
    case CoverProperty::p_plus: return CoverShape::alternating_path;
  }
  return CoverShape::free;
}

namespace {

std::pair<int, int> norm(int u, int v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void require_bases(const Matroid& m, ElementSet a, ElementSet b,
                   const char* who) {
  m.check_subset(a);
  m.check_subset(b);
  if (!m.is_basis(a) || !m.is_basis(b)) {
    throw InputError(std::string(who) + ": A and B must be bases");
  }
}

}  // namespace

int CoverGraph::degree(int v) const {
  int d = 0;
  for (auto [x, y] : edges) d += (x == v) + (y == v);
  for (auto [x, y] : doubled) d += (x == v) + (y == v);
  return d;
}

bool CoverGraph::has_edge(int u, int v) const {
  auto e = norm(u, v);
  for (auto f : edges) {
    if (norm(f.first, f.second) == e) return true;
  }
  return false;
}

CoverGraph PathWitness::graph(bool alternating) const {
  CoverGraph g;
  g.vertices = ElementSet::from(sequence);
  for (size_t i = 1; i < sequence.size(); ++i) {
    g.edges.push_back(norm(sequence[i - 1], sequence[i]));
  }
  g.shape = alternating ? CoverShape::alternating_path : CoverShape::path;
  return g;
}

bool covers(const CoverGraph& g, const std::vector<ElementSet>& circuits) {
  std::array<uint64_t, kMaxElements> adj{};
  for (auto [u, v] : g.edges) {
    adj[u] |= uint64_t{1} << v;
    adj[v] |= uint64_t{1} << u;
  }
  for (ElementSet c : circuits) {
    bool hit = false;
    for (int x : c) {
      if (adj[x] & c.bits()) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool has_shape(const CoverGraph& g, ElementSet a_side, ElementSet b_side) {
  for (auto [u, v] : g.edges) {
    if (u == v || !g.vertices.contains(u) || !g.vertices.contains(v)) {
      return false;
    }
  }
  for (auto e : g.doubled) {
    if (!g.has_edge(e.first, e.second)) return false;
  }
  auto crossing = [&] {
    for (auto [u, v] : g.edges) {
      bool ok = (a_side.contains(u) && b_side.contains(v)) ||
                (a_side.contains(v) && b_side.contains(u));
      if (!ok) return false;
    }
    return true;
  };
  auto connected_tree = [&] {
    const int n = g.vertices.size();
    if (!g.doubled.empty()) return false;
    if (n == 0) return g.edges.empty();
    if (static_cast<int>(g.edges.size()) != n - 1) return false;
    std::vector<int> parent(kMaxElements);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto [u, v] : g.edges) {
      int ru = find_root(parent, u);
      int rv = find_root(parent, v);
      if (ru == rv) return false;
      parent[ru] = rv;
    }
    return true;
  };
  switch (g.shape) {
    case CoverShape::free:
      return true;
    case CoverShape::two_regular:
    case CoverShape::alternating_two_regular:
      for (int v : g.vertices) {
        if (g.degree(v) != 2) return false;
      }
      return g.shape == CoverShape::two_regular || crossing();
    case CoverShape::path:
    case CoverShape::alternating_path:
      for (int v : g.vertices) {
        if (g.degree(v) > 2) return false;
      }
      if (!connected_tree()) return false;
      return g.shape == CoverShape::path || crossing();
    case CoverShape::tree:
      return connected_tree() && crossing();
  }
  return false;
}

bool covers_pair(const Matroid& m, ElementSet a, ElementSet b,
                 const CoverGraph& g) {
  if (g.vertices != (a ^ b)) return false;
  return covers(g, circuits_within(m, a | b));
}

CoverGraph close_path(const PathWitness& p) {
  CoverGraph g = p.graph(false);
  g.shape = CoverShape::two_regular;
  const auto& s = p.sequence;
  if (s.size() == 2) {
    g.doubled.push_back(norm(s[0], s[1]));
  } else if (s.size() > 2) {
    g.edges.push_back(norm(s.front(), s.back()));
  }
  return g;
}

std::vector<int> Reduction::lift(const std::vector<int>& seq) const {
  std::vector<int> out;
  out.reserve(seq.size());
  for (int e : seq) out.push_back(lift(e));
  return out;
}

CoverGraph Reduction::lift(const CoverGraph& g) const {
  CoverGraph out;
  out.vertices = lift(g.vertices);
  out.shape = g.shape;
  for (auto [u, v] : g.edges) out.edges.push_back(norm(lift(u), lift(v)));
  for (auto [u, v] : g.doubled) out.doubled.push_back(norm(lift(u), lift(v)));
  return out;
}

Reduction reduce_to_disjoint(const Matroid& m, ElementSet a, ElementSet b) {
  require_bases(m, a, b, "reduce_to_disjoint");
  Minor minor = make_minor(m, a & b, m.ground_set() - (a | b));
  ElementSet ra = minor.project(a - b);
  ElementSet rb = minor.project(b - a);
  return Reduction{std::move(minor), ra, rb};
}

namespace {

struct OutOfBudget {};

/// Shared state for the path and cycle searches on a reduced instance.
class CoverSearch {
 public:
  CoverSearch(const Matroid& m, ElementSet a, ElementSet b, uint64_t budget)
      : n_(m.size()), a_(a), b_(b), budget_(budget) {
    circuits_ = circuits_within(m, m.ground_set());
    by_element_.resize(n_);
    for (size_t i = 0; i < circuits_.size(); ++i) {
      for (int e : circuits_[i]) by_element_[e].push_back(static_cast<int>(i));
    }
  }

  uint64_t nodes() const { return budget_.used(); }

 protected:
  bool covered(ElementSet c) const {
    for (int x : c) {
      if (adj_[x] & c.bits()) return true;
    }
    return false;
  }

  void add_edge(int u, int v) {
    adj_[u] |= uint64_t{1} << v;
    adj_[v] |= uint64_t{1} << u;
  }
  void remove_edge(int u, int v) {
    adj_[u] &= ~(uint64_t{1} << v);
    adj_[v] &= ~(uint64_t{1} << u);
  }

  void charge() {
    if (!budget_.charge()) throw OutOfBudget{};
  }

  int n_;
  ElementSet a_;
  ElementSet b_;
  Budget budget_;
  std::vector<ElementSet> circuits_;
  std::vector<std::vector<int>> by_element_;
  std::array<uint64_t, kMaxElements> adj_{};
  ElementSet placed_;
};

class PathSearch : public CoverSearch {
 public:
  PathSearch(const Matroid& m, ElementSet a, ElementSet b, bool alternating,
             uint64_t budget)
      : CoverSearch(m, a, b, budget), alternating_(alternating) {}

  bool run() { return extend(); }
  const std::vector<int>& sequence() const { return seq_; }

 private:
  bool extend() {
    charge();
    if (static_cast<int>(seq_.size()) == n_) return true;
    ElementSet pool = ElementSet::range(n_) - placed_;
    if (alternating_) {
      if (seq_.empty()) {
        pool &= b_;
      } else {
        pool &= b_.contains(seq_.back()) ? a_ : b_;
      }
    }
    const bool closing = !alternating_ &&
                         static_cast<int>(seq_.size()) == n_ - 1 && n_ > 1;
    for (int v : pool) {
      if (closing && v < seq_.front()) continue;
      int u = seq_.empty() ? -1 : seq_.back();
      seq_.push_back(v);
      placed_ = placed_.with(v);
      if (u >= 0) add_edge(u, v);
      if (!kills(v) && extend()) return true;
      if (u >= 0) remove_edge(u, v);
      placed_ = placed_.without(v);
      seq_.pop_back();
    }
    return false;
  }

  // Circuits completed by placing v can gain no further edge.
  bool kills(int v) const {
    for (int i : by_element_[v]) {
      ElementSet c = circuits_[i];
      if (c.is_subset_of(placed_) && !covered(c)) return true;
    }
    return false;
  }

  bool alternating_;
  std::vector<int> seq_;
};

class CycleSearch : public CoverSearch {
 public:
  CycleSearch(const Matroid& m, ElementSet a, ElementSet b, bool alternating,
              uint64_t budget)
      : CoverSearch(m, a, b, budget), alternating_(alternating) {}

  bool run() { return step(); }

  CoverGraph graph() const {
    CoverGraph g;
    g.vertices = ElementSet::range(n_);
    g.edges = edges_;
    g.doubled = doubled_;
    g.shape = alternating_ ? CoverShape::alternating_two_regular
                           : CoverShape::two_regular;
    return g;
  }

 private:
  bool opposite(int u, int v) const {
    return a_.contains(u) != a_.contains(v);
  }

  bool step() {
    charge();
    if (cycle_.empty()) {
      ElementSet rest = ElementSet::range(n_) - placed_;
      if (rest.empty()) return true;
      int s = rest.min();
      cycle_.push_back(s);
      placed_ = placed_.with(s);
      bool ok = !dead_around(s) && step();
      if (ok) return true;
      placed_ = placed_.without(s);
      cycle_.pop_back();
      return false;
    }
    const int s = cycle_.front();
    const int e = cycle_.back();
    const size_t len = cycle_.size();
    if (len >= 2 && (!alternating_ || opposite(s, e)) &&
        (len == 2 || cycle_[1] < e)) {
      auto saved = cycle_;
      if (len == 2) {
        doubled_.push_back(norm(s, e));
      } else {
        edges_.push_back(norm(s, e));
        add_edge(s, e);
      }
      cycle_.clear();
      if (step()) return true;
      cycle_ = saved;
      if (len == 2) {
        doubled_.pop_back();
      } else {
        edges_.pop_back();
        remove_edge(s, e);
      }
    }
    ElementSet pool = ElementSet::range(n_) - placed_;
    for (int v : pool) {
      if (v < s) continue;
      if (alternating_ && !opposite(e, v)) continue;
      cycle_.push_back(v);
      placed_ = placed_.with(v);
      edges_.push_back(norm(e, v));
      add_edge(e, v);
      if (!dead_around(v) && !dead_around(e) && step()) return true;
      remove_edge(e, v);
      edges_.pop_back();
      placed_ = placed_.without(v);
      cycle_.pop_back();
    }
    return false;
  }

  // A placed circuit is still alive only if the closing edge can hit it.
  bool dead_around(int v) const {
    const bool can_close = cycle_.size() >= 2;
    for (int i : by_element_[v]) {
      ElementSet c = circuits_[i];
      if (!c.is_subset_of(placed_) || covered(c)) continue;
      if (can_close && c.contains(cycle_.front()) && c.contains(cycle_.back())) {
        continue;
      }
      return true;
    }
    return false;
  }

  bool alternating_;
  std::vector<int> cycle_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::pair<int, int>> doubled_;
};

}  // namespace

SearchResult<PathWitness> find_cover_path(const Matroid& m, ElementSet a,
                                          ElementSet b, bool alternating,
                                          uint64_t budget) {
  Reduction red = reduce_to_disjoint(m, a, b);
  SearchResult<PathWitness> out;
  PathSearch search(red.minor.matroid, red.a, red.b, alternating, budget);
  try {
    if (search.run()) {
      out.verdict = Verdict::found;
      out.witness = PathWitness{red.lift(search.sequence())};
    }
  } catch (const OutOfBudget&) {
    out.verdict = Verdict::unknown;
  }
  out.stats.nodes = search.nodes();
  return out;
}

SearchResult<CoverGraph> find_cover_graph(const Matroid& m, ElementSet a,
                                          ElementSet b, CoverProperty property,
                                          uint64_t budget) {
  SearchResult<CoverGraph> out;
  if (property == CoverProperty::p || property == CoverProperty::p_plus) {
    const bool alt = property == CoverProperty::p_plus;
    auto path = find_cover_path(m, a, b, alt, budget);
    out.verdict = path.verdict;
    out.stats = path.stats;
    if (path.found()) out.witness = path.witness->graph(alt);
    return out;
  }
  Reduction red = reduce_to_disjoint(m, a, b);
  CycleSearch search(red.minor.matroid, red.a, red.b,
                     property == CoverProperty::r_plus, budget);
  try {
    if (search.run()) {
      out.verdict = Verdict::found;
      out.witness = red.lift(search.graph());
    }
  } catch (const OutOfBudget&) {
    out.verdict = Verdict::unknown;
  }
  out.stats.nodes = search.nodes();
  return out;
}

std::vector<ElementSet> fundamental_circuits(const Matroid& m, ElementSet a,
                                             ElementSet b) {
  require_bases(m, a, b, "fundamental_circuits");
  std::vector<ElementSet> out;
  for (int e : b - a) out.push_back(fundamental_circuit(m, a, e));
  for (int e : a - b) out.push_back(fundamental_circuit(m, b, e));
  return out;
}

namespace {

// Kuhn's augmenting paths; left[i] is matched to right[match[i]].
std::vector<int> perfect_matching(const std::vector<std::vector<int>>& adj,
                                  int right_size) {
  const int left = static_cast<int>(adj.size());
  std::vector<int> owner(right_size, -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int u) {
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (owner[v] < 0 || augment(owner[v])) {
        owner[v] = u;
        return true;
      }
    }
    return false;
  };
  for (int u = 0; u < left; ++u) {
    seen.assign(right_size, 0);
    if (!augment(u)) {
      throw TheoremViolation("no perfect exchange matching between bases");
    }
  }
  std::vector<int> match(left, -1);
  for (int v = 0; v < right_size; ++v) match[owner[v]] = v;
  return match;
}

}  // namespace

CoverGraph fundamental_cover_2regular(const Matroid& m, ElementSet a,
                                      ElementSet b) {
  require_bases(m, a, b, "fundamental_cover_2regular");
  const std::vector<int> as = (a - b).to_vector();
  const std::vector<int> bs = (b - a).to_vector();
  const int k = static_cast<int>(as.size());
  std::vector<std::vector<int>> from_a(k), from_b(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (m.is_basis(a.without(as[i]).with(bs[j]))) from_a[i].push_back(j);
      if (m.is_basis(b.without(bs[j]).with(as[i]))) from_b[j].push_back(i);
    }
  }
  std::vector<int> phi_a = perfect_matching(from_a, k);
  std::vector<int> phi_b = perfect_matching(from_b, k);
  std::map<std::pair<int, int>, int> count;
  for (int i = 0; i < k; ++i) ++count[norm(as[i], bs[phi_a[i]])];
  for (int j = 0; j < k; ++j) ++count[norm(as[phi_b[j]], bs[j])];
  CoverGraph g;
  g.vertices = a ^ b;
  g.shape = CoverShape::alternating_two_regular;
  for (auto [e, c] : count) {
    g.edges.push_back(e);
    if (c == 2) g.doubled.push_back(e);
  }
  return g;
}

CoverGraph fundamental_cover_tree(const Matroid& m, ElementSet a,
                                  ElementSet b) {
  require_bases(m, a, b, "fundamental_cover_tree");
  auto symmetric = [&](int x, int y) {
    return m.is_basis(a.without(x).with(y)) && m.is_basis(b.without(y).with(x));
  };
  std::vector<std::pair<int, int>> candidates;
  for (int x : a - b) {
    int partner = -1;
    for (int y : b - a) {
      if (symmetric(x, y)) {
        partner = y;
        break;
      }
    }
    if (partner < 0) throw TheoremViolation("no symmetric exchange partner");
    candidates.push_back(norm(x, partner));
  }
  for (int y : b - a) {
    int partner = -1;
    for (int x : a - b) {
      if (symmetric(x, y)) {
        partner = x;
        break;
      }
    }
    if (partner < 0) throw TheoremViolation("no symmetric exchange partner");
    candidates.push_back(norm(partner, y));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  CoverGraph g;
  g.vertices = a ^ b;
  g.shape = CoverShape::tree;
  std::vector<int> parent(kMaxElements);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [u, v] : candidates) {
    int ru = find_root(parent, u);
    int rv = find_root(parent, v);
    if (ru == rv) continue;
    parent[ru] = rv;
    g.edges.push_back({u, v});
  }
  // Join the remaining components to the one holding min(B \ A).
  if (!(b - a).empty()) {
    const int hub = (b - a).min();
    for (int x : a - b) {
      int rx = find_root(parent, x);
      int rh = find_root(parent, hub);
      if (rx == rh) continue;
      parent[rx] = rh;
      g.edges.push_back(norm(x, hub));
    }
  }
  return g;
}

namespace {

struct GEdge {
  int element;
  int u;
  int v;
  bool in_a;
};

// Alternating path on the union of two spanning trees (A-edges, B-edges)
// of a connected multigraph, by induction on a vertex of degree <= 3.
std::vector<int> graphic_induction(std::vector<GEdge> edges) {
  if (edges.empty()) return {};
  std::map<int, std::vector<int>> incident;  // vertex -> edge indices
  for (size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back(static_cast<int>(i));
    incident[edges[i].v].push_back(static_cast<int>(i));
  }
  int v = -1;
  for (const auto& [x, list] : incident) {
    if (list.size() <= 3) {
      v = x;
      break;
    }
  }
  if (v < 0) throw TheoremViolation("graphic induction: no vertex of degree <= 3");
  std::vector<GEdge> at;
  for (int i : incident[v]) at.push_back(edges[i]);
  std::sort(at.begin(), at.end(),
            [](const GEdge& x, const GEdge& y) { return x.element < y.element; });
  int a_count = 0;
  for (const auto& e : at) a_count += e.in_a;

  if (at.size() == 2) {
    if (a_count != 1) throw TheoremViolation("graphic induction: tree degree");
    const GEdge& ea = at[0].in_a ? at[0] : at[1];
    const GEdge& eb = at[0].in_a ? at[1] : at[0];
    std::vector<GEdge> rest;
    for (const auto& e : edges) {
      if (e.u != v && e.v != v) rest.push_back(e);
    }
    std::vector<int> p = graphic_induction(std::move(rest));
    if (!p.empty()) {
      // Orient so the path ends in B; then a, b extends the alternation.
      bool back_in_a = false;
      for (const auto& e : edges) {
        if (e.element == p.back()) back_in_a = e.in_a;
      }
      if (back_in_a) std::reverse(p.begin(), p.end());
    }
    p.push_back(ea.element);
    p.push_back(eb.element);
    return p;
  }
  if (at.size() != 3 || a_count == 0 || a_count == 3) {
    throw TheoremViolation("graphic induction: unexpected degree");
  }
  // Two edges x1 < x2 on one side and y on the other.
  const bool pair_in_a = a_count == 2;
  std::vector<GEdge> same;
  GEdge y{};
  for (const auto& e : at) {
    if (e.in_a == pair_in_a) {
      same.push_back(e);
    } else {
      y = e;
    }
  }
  const GEdge x1 = same[0];
  const GEdge x2 = same[1];
  const int w = x2.u == v ? x2.v : x2.u;
  std::vector<GEdge> rest;
  for (auto e : edges) {
    if (e.element == x2.element || e.element == y.element) continue;
    if (e.u == v) e.u = w;
    if (e.v == v) e.v = w;
    rest.push_back(e);
  }
  std::vector<int> p = graphic_induction(std::move(rest));
  auto it = std::find(p.begin(), p.end(), x1.element);
  if (it == p.end()) throw TheoremViolation("graphic induction: lost element");
  const size_t i = static_cast<size_t>(it - p.begin());
  int before = i > 0 ? p[i - 1] : -1;
  int after = i + 1 < p.size() ? p[i + 1] : -1;
  if (after >= 0 && (before < 0 || after < before)) {
    p.insert(p.begin() + static_cast<long>(i) + 1, {y.element, x2.element});
  } else if (before >= 0) {
    p.insert(p.begin() + static_cast<long>(i), {x2.element, y.element});
  } else {
    throw TheoremViolation("graphic induction: isolated element");
  }
  return p;
}

}  // namespace

PathWitness graphic_pp_path(const Matroid& m, ElementSet a, ElementSet b) {
  const auto* rep = m.as<GraphicRep>();
  if (rep == nullptr) throw InputError("graphic_pp_path: matroid is not graphic");
  require_bases(m, a, b, "graphic_pp_path");
  const auto& ends = rep->edges();
  std::vector<int> parent(rep->vertices());
  std::iota(parent.begin(), parent.end(), 0);
  for (int e : a & b) {
    int ru = find_root(parent, ends[e].first);
    int rv = find_root(parent, ends[e].second);
    if (ru != rv) parent[ru] = rv;
  }
  // Identify one vertex from each component of the contracted graph.
  std::vector<int> comp = parent;
  for (int e : a ^ b) {
    int ru = find_root(comp, find_root(parent, ends[e].first));
    int rv = find_root(comp, find_root(parent, ends[e].second));
    if (ru != rv) comp[ru] = rv;
  }
  std::map<int, int> hub;  // component root -> representative vertex
  for (int x = 0; x < rep->vertices(); ++x) {
    int r = find_root(parent, x);
    int c = find_root(comp, r);
    hub.try_emplace(c, r);
  }
  const int merged = hub.empty() ? 0 : hub.begin()->second;
  auto collapse = [&](int x) {
    int r = find_root(parent, x);
    int c = find_root(comp, r);
    return r == hub[c] ? merged : r;
  };
  std::vector<GEdge> edges;
  for (int e : a ^ b) {
    GEdge g{e, collapse(ends[e].first), collapse(ends[e].second), a.contains(e)};
    if (g.u == g.v) throw InputError("graphic_pp_path: loop in a basis");
    edges.push_back(g);
  }
  return PathWitness{graphic_induction(std::move(edges))};
}

PathWitness paving_pp_path(const Matroid& m, ElementSet a, ElementSet b) {
  if (m.as<PavingRep>() == nullptr && m.as<UniformRep>() == nullptr) {
    throw InputError("paving_pp_path: matroid is not tagged paving");
  }
  require_bases(m, a, b, "paving_pp_path");
  const int r = m.rank();
  ElementSet rest_a = a - b;
  ElementSet rest_b = b - a;
  ElementSet contracted = a & b;
  std::vector<std::pair<int, int>> picks;
  while (!rest_a.empty()) {
    bool found = false;
    for (int x : rest_a) {
      for (int y : rest_b) {
        if (m.rank(rest_a.without(x).with(y) | contracted) == r) {
          picks.emplace_back(x, y);
          rest_a = rest_a.without(x);
          rest_b = rest_b.without(y);
          contracted = contracted.with(y);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw TheoremViolation("paving_pp_path: no exchange pair");
  }
  PathWitness p;
  for (auto it = picks.rbegin(); it != picks.rend(); ++it) {
    p.sequence.push_back(it->first);
    p.sequence.push_back(it->second);
  }
  return p;
}

namespace {

// A spike minor M / contracted \ deleted, with its tip and legs in the
// labels of the original spike.
struct SpikeView {
  ElementSet contracted;
  ElementSet deleted;
  int tip;
  std::vector<std::pair<int, int>> legs;
};

class SpikeBuilder {
 public:
  explicit SpikeBuilder(const Matroid& m) : m_(m) {}

  std::vector<int> run(const SpikeView& view, ElementSet a, ElementSet b) {
    if (a == b) return {};
    const int r = static_cast<int>(view.legs.size());
    if (r <= 2) return searched(view, a, b);
    const ElementSet both = a & b;
    if (!both.empty()) return shared(view, a, b);
    return disjoint(view, a, b);
  }

 private:
  int view_rank(const SpikeView& view, ElementSet x) const {
    return m_.rank(x | view.contracted) - m_.rank(view.contracted);
  }

  ElementSet elements(const SpikeView& view) const {
    ElementSet e = ElementSet::single(view.tip);
    for (auto [x, y] : view.legs) e = e.with(x).with(y);
    return e;
  }

  // The minor after contracting the shared elements, as a Reduction on m_.
  Minor reduced(ElementSet contract, ElementSet a_only, ElementSet b_only) {
    ElementSet keep = a_only | b_only;
    return make_minor(m_, contract, m_.ground_set() - contract - keep);
  }

  std::vector<int> searched(const SpikeView& view, ElementSet a, ElementSet b) {
    Minor mn = reduced(view.contracted | (a & b), a - b, b - a);
    auto res = find_cover_path(mn.matroid, mn.project(a - b),
                               mn.project(b - a), true);
    if (!res.found()) throw TheoremViolation("spike base case has no path");
    std::vector<int> out;
    for (int e : res.witness->sequence) out.push_back(mn.to_original[e]);
    return out;
  }

  // Alternating path a1, phi(a1), a2, phi(a2), ... from an SBO bijection.
  std::vector<int> sbo_path(ElementSet contract, ElementSet a_only,
                            ElementSet b_only) {
    Minor mn = reduced(contract, a_only, b_only);
    ElementSet pa = mn.project(a_only);
    ElementSet pb = mn.project(b_only);
    auto res = find_exchange_witness(mn.matroid, pa, pb, ExchangeProperty::sbo());
    if (!res.found()) throw TheoremViolation("laminar spike minor is not SBO");
    std::vector<int> out;
    for (auto [x, y] : res.witness->bijection) {
      out.push_back(mn.to_original[x]);
      out.push_back(mn.to_original[y]);
    }
    return out;
  }

  static SpikeView without_leg(const SpikeView& view, size_t leg) {
    SpikeView next = view;
    next.legs.erase(next.legs.begin() + static_cast<long>(leg));
    return next;
  }

  std::vector<int> shared(const SpikeView& view, ElementSet a, ElementSet b) {
    const ElementSet both = a & b;
    const int t = view.tip;
    if (both.contains(t)) return sbo_path(view.contracted | both, a - b, b - a);
    size_t leg = 0;
    while (!both.contains(view.legs[leg].first) &&
           !both.contains(view.legs[leg].second)) {
      ++leg;
    }
    auto [x, y] = view.legs[leg];
    const int p = both.contains(x) ? x : y;
    const int q = p == x ? y : x;
    const ElementSet used = a | b;
    if (!used.contains(t)) {
      SpikeView next = without_leg(view, leg);
      next.contracted = next.contracted.with(p);
      next.deleted = next.deleted.with(t);
      next.tip = q;
      return run(next, a.without(p), b.without(p));
    }
    if (!used.contains(q)) {
      SpikeView next = without_leg(view, leg);
      next.contracted = next.contracted.with(p);
      next.deleted = next.deleted.with(q);
      return run(next, a.without(p), b.without(p));
    }
    // t and q lie on opposite sides; work with t in S.
    ElementSet s = a.contains(t) ? a : b;
    ElementSet o = a.contains(t) ? b : a;
    std::vector<int> path = sbo_path(view.contracted | both | ElementSet{t},
                                     s - o - ElementSet{t},
                                     o - s - ElementSet{q});
    std::reverse(path.begin(), path.end());
    path.push_back(q);
    path.push_back(t);
    return path;
  }

  std::vector<int> disjoint(const SpikeView& view, ElementSet a, ElementSet b) {
    const int t = view.tip;
    const size_t r = view.legs.size();
    if ((a | b).contains(t)) {
      ElementSet s = a.contains(t) ? a : b;
      ElementSet o = a.contains(t) ? b : a;
      size_t empty_leg = r;
      for (size_t i = 0; i < r; ++i) {
        auto [x, y] = view.legs[i];
        if (!s.contains(x) && !s.contains(y)) empty_leg = i;
      }
      if (empty_leg == r) throw TheoremViolation("spike basis shape");
      auto [ex, ey] = view.legs[empty_leg];
      std::vector<int> path;
      if (o.contains(ex) && o.contains(ey)) {
        // o = pair on the empty leg of s, nothing on one other leg.
        size_t bare = r;
        for (size_t i = 0; i < r; ++i) {
          auto [x, y] = view.legs[i];
          if (!o.contains(x) && !o.contains(y)) bare = i;
        }
        if (bare == r) throw TheoremViolation("spike basis shape");
        for (size_t i = 0; i < r; ++i) {
          if (i == empty_leg || i == bare) continue;
          auto [x, y] = view.legs[i];
          path.push_back(s.contains(x) ? x : y);
          path.push_back(s.contains(x) ? y : x);
        }
        auto [bx, by] = view.legs[bare];
        path.push_back(t);
        path.push_back(ex);
        path.push_back(s.contains(bx) ? bx : by);
        path.push_back(ey);
        return path;
      }
      path.push_back(t);
      path.push_back(o.contains(ex) ? ex : ey);
      for (size_t i = 0; i < r; ++i) {
        if (i == empty_leg) continue;
        auto [x, y] = view.legs[i];
        path.push_back(s.contains(x) ? x : y);
        path.push_back(s.contains(x) ? y : x);
      }
      return path;
    }
    size_t pair_leg = r;
    ElementSet s = a;
    ElementSet o = b;
    for (size_t i = 0; i < r && pair_leg == r; ++i) {
      auto [x, y] = view.legs[i];
      if (a.contains(x) && a.contains(y)) pair_leg = i;
      if (b.contains(x) && b.contains(y)) {
        pair_leg = i;
        std::swap(s, o);
      }
    }
    std::vector<int> path;
    if (pair_leg == r) {
      // Both are transversals.
      auto side = [&](size_t i, ElementSet z) {
        auto [x, y] = view.legs[i];
        return z.contains(x) ? x : y;
      };
      path.push_back(side(r - 1, b));
      for (size_t i = 0; i + 1 < r; ++i) {
        path.push_back(side(i, a));
        path.push_back(side(i, b));
      }
      path.push_back(side(r - 1, a));
      return path;
    }
    size_t other_pair = r;
    for (size_t i = 0; i < r; ++i) {
      auto [x, y] = view.legs[i];
      if (o.contains(x) && o.contains(y)) other_pair = i;
    }
    if (other_pair == r) throw TheoremViolation("spike basis shape");
    auto [x1, y1] = view.legs[pair_leg];
    auto [x2, y2] = view.legs[other_pair];
    std::vector<int> tail;
    ElementSet z1 = ElementSet{x1, x2};
    for (size_t i = 0; i < r; ++i) {
      if (i == pair_leg || i == other_pair) continue;
      auto [x, y] = view.legs[i];
      int in_s = s.contains(x) ? x : y;
      int in_o = in_s == x ? y : x;
      tail.push_back(in_s);
      tail.push_back(in_o);
      z1 = z1.with(in_o);
    }
    if (view_rank(view, z1) == static_cast<int>(r)) {
      path = {x1, y2, y1, x2};
    } else {
      path = {x1, x2, y1, y2};
    }
    path.insert(path.end(), tail.begin(), tail.end());
    return path;
  }

  const Matroid& m_;
};

}  // namespace

PathWitness spike_pp_path(const Matroid& m, ElementSet a, ElementSet b) {
  const auto* rep = m.as<SpikeRep>();
  if (rep == nullptr) throw InputError("spike_pp_path: matroid is not a spike");
  require_bases(m, a, b, "spike_pp_path");
  SpikeView view{{}, {}, SpikeRep::tip(), {}};
  for (int i = 1; i <= rep->rank(); ++i) {
    view.legs.emplace_back(SpikeRep::x(i), SpikeRep::y(i));
  }
  return PathWitness{SpikeBuilder(m).run(view, a, b)};
}

Construction parse_construction(std::string_view text) {
  if (text == "auto") return Construction::automatic;
  if (text == "graphic") return Construction::graphic;
  if (text == "paving") return Construction::paving;
  if (text == "spike") return Construction::spike;
  if (text == "search") return Construction::search;
  throw InputError("unknown construction: " + std::string(text));
}

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::automatic: return "auto";
    case Construction::graphic: return "graphic";
    case Construction::paving: return "paving";
    case Construction::spike: return "spike";
    case Construction::search: return "search";
  }
  return "?";
}

PathWitness construct_pp_path(const Matroid& m, ElementSet a, ElementSet b,
                              Construction how, uint64_t budget) {
  if (how == Construction::automatic) {
    if (m.as<GraphicRep>() != nullptr) {
      how = Construction::graphic;
    } else if (m.as<PavingRep>() != nullptr || m.as<UniformRep>() != nullptr) {
      how = Construction::paving;
    } else if (m.as<SpikeRep>() != nullptr) {
      how = Construction::spike;
    } else {
      how = Construction::search;
    }
  }
  switch (how) {
    case Construction::graphic: return graphic_pp_path(m, a, b);
    case Construction::paving: return paving_pp_path(m, a, b);
    case Construction::spike: return spike_pp_path(m, a, b);
    default: break;
  }
  auto res = find_cover_path(m, a, b, true, budget);
  if (res.verdict == Verdict::unknown) {
    throw BudgetExceeded("alternating path search ran out of budget");
  }
  if (!res.found()) {
    throw TheoremViolation("no alternating path covers C[A u B]");
  }
  return *res.witness;
}

ClassCheck check_cover_class(const Matroid& m, CoverProperty property,
                             uint64_t budget_per_pair) {
  ClassCheck out;
  const std::vector<ElementSet> bases = enumerate_bases(m);
  out.bases = bases.size();
  out.pairs_total = bases.size() * (bases.size() - 1) / 2;
  for (size_t i = 0; i < bases.size(); ++i) {
    for (size_t j = i + 1; j < bases.size(); ++j) {
      auto res = find_cover_graph(m, bases[i], bases[j], property,
                                  budget_per_pair);
      ++out.pairs_checked;
      ++out.pairs_searched;
      out.stats.nodes += res.stats.nodes;
      out.max_queries_per_pair =
          std::max<uint64_t>(out.max_queries_per_pair, res.stats.nodes);
      if (res.verdict == Verdict::none) {
        out.verdict = ClassVerdict::fails;
        out.counterexample = {bases[i], bases[j]};
        return out;
      }
      if (res.verdict == Verdict::unknown && !out.unresolved_pair) {
        out.verdict = ClassVerdict::unknown;
        out.unresolved_pair = {bases[i], bases[j]};
      }
    }
  }
  return out;
}

}  // namespace sbrokit
