#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sbrokit/circuit_cover.hpp"
#include "sbrokit/covering.hpp"
#include "sbrokit/element_set.hpp"
#include "sbrokit/matroid.hpp"
#include "sbrokit/search.hpp"

namespace sbrokit {

/// Bases A, B with A u B = E and A n B empty (the first A in mask order),
/// or nullopt.
std::optional<std::pair<ElementSet, ElementSet>> complementary_bases(
    const Matroid& m);

/// Alternating path on E covering every circuit, for a matroid whose
/// ground set is two disjoint bases. Throws InputError otherwise.
PathWitness ground_cover_path(const Matroid& m,
                              Construction how = Construction::automatic);

/// Smallest k the coloring theorem allows for the shape: 3 for paths, 4 for
/// alternating 2-regular graphs, 5 for 2-regular graphs; 0 if none.
int min_parts_for(CoverShape shape);

/// Proper k-coloring of W u Q, Q the cliques on the classes of the
/// partition matroid M2, found by exact DSATUR backtracking. The parts are
/// stable in W and independent in M2.
Partition color_cover_plus_partition(const CoverGraph& w, const Matroid& m2,
                                     int k);

struct GreedyColoring {
  Partition partition;
  /// Color of each element of W (1-based), 0 outside W.
  std::vector<int> color_of;
  int colors = 0;
};

/// Greedy rule: the next element gets the smallest color unused by its
/// colored neighbors whose class does not span it in M2. Paths are colored
/// along the path, other graphs in element order.
GreedyColoring greedy_color(const CoverGraph& w, const Matroid& m2);

struct SpannedPacking {
  Verdict verdict = Verdict::found;
  /// Most pairwise disjoint sets spanning e (counting {e}); a lower bound
  /// when the verdict is unknown.
  int value = 0;
  std::vector<ElementSet> sets;
  SearchStats stats;
};

/// Packs {e} and sets C - e for circuits C through e. Budget counts nodes.
SpannedPacking max_spanned(const Matroid& m, int e,
                           uint64_t budget = kDefaultBudget);

/// Greedy coloring of the union of the W_i in element order; every W_i must
/// be 2-regular on E and cover the circuits of M_i. Uses at most 2q + 1
/// colors.
Partition color_q_matroids(const std::vector<Matroid>& ms,
                           const std::vector<CoverGraph>& ws);

struct OrderedCopy {
  int element;
  /// 0 for the copy on the A side, 1 on the B side.
  int copy;

  bool operator==(const OrderedCopy&) const = default;
};

/// (a_1, ..., a_r, b_1, ..., b_r) with A n B listed twice.
struct CyclicOrdering {
  std::vector<OrderedCopy> sequence;
  int rank = 0;

  /// {a_i, ..., a_r, b_1, ..., b_{i-1}} as underlying elements, 1 <= i <= r.
  ElementSet a_interval(int i) const;
  /// {b_i, ..., b_r, a_1, ..., a_{i-1}}.
  ElementSet b_interval(int i) const;
};

struct CyclicCheck {
  bool a_intervals_bases = true;
  bool b_intervals_near_bases = true;
  /// Deficient B-intervals become independent after dropping a_{i-1} or b_i.
  bool repairable = true;
  std::vector<int> b_interval_ranks;

  bool ok() const {
    return a_intervals_bases && b_intervals_near_bases && repairable;
  }
};

CyclicCheck check_cyclic_ordering(const Matroid& m, const CyclicOrdering& o);

/// Reads the path as b_1, a_1, ..., b_k, a_k and appends A n B to both
/// halves. Throws InputError if P is not an alternating path on A (+) B and
/// TheoremViolation if the result fails check_cyclic_ordering.
CyclicOrdering weak_cyclic_ordering(const Matroid& m, ElementSet a,
                                    ElementSet b, const PathWitness& p);

struct EdgeBoundReport {
  int beta = 0;
  int rank = 0;
  int ground = 0;
  int edges = 0;
  int alpha = 0;
  /// (beta^2 r - beta r) / 2.
  double bound = 0;
  bool alpha_ok = false;
  bool edges_ok = false;

  bool holds() const { return alpha_ok && edges_ok; }
};

/// Largest stable set of g on `ground` (vertices outside g are isolated).
int stability_number(const CoverGraph& g, ElementSet ground);

/// Checks alpha(G) <= r(M) and |F| >= (beta^2 r - beta r) / 2. Throws
/// InputError unless E splits into beta(M) bases and G covers every
/// circuit.
EdgeBoundReport edge_lower_bound_check(const Matroid& m, const CoverGraph& g);

}  // namespace sbrokit
