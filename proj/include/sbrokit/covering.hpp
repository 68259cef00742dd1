#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sbrokit/element_set.hpp"
#include "sbrokit/errors.hpp"
#include "sbrokit/matroid.hpp"
#include "sbrokit/orderability.hpp"
#include "sbrokit/search.hpp"

namespace sbrokit {

enum class PartTag { independent, common_independent, stable };
std::string_view to_string(PartTag tag);

/// Ordered, pairwise disjoint parts covering `ground`.
struct Partition {
  std::vector<ElementSet> parts;
  ElementSet ground;
  PartTag tag = PartTag::independent;

  ElementSet union_of_parts() const;
  bool pairwise_disjoint() const;
  /// Disjoint, covers `ground` exactly, no empty parts.
  bool well_formed() const;
};

/// beta(M) = max over nonempty X of ceil(|X| / r(X)). Exhaustive for
/// n <= 20; above that, the smallest k accepted by find_partition.
/// Throws InputError if M has a loop.
int covering_number(const Matroid& m);

/// Partition of E into at most k independent sets, or nullopt. Elements go
/// in index order to the lowest feasible part.
std::optional<Partition> find_partition(const Matroid& m, int k);

struct IntersectionCover {
  Verdict verdict = Verdict::none;
  /// beta(M1 n M2) when found.
  int value = 0;
  /// Largest k proven infeasible (0 if none).
  int refuted_below = 0;
  std::optional<Partition> partition;
  SearchStats stats;
};

/// Exact beta(M1 n M2): k = max(beta1, beta2), max(beta1, beta2) + 1, ...
/// each tested by backtracking. The budget counts search nodes in total.
IntersectionCover covering_number_intersection(const Matroid& m1,
                                               const Matroid& m2,
                                               uint64_t budget = kDefaultBudget,
                                               int max_k = 64);

/// Partition of E into at most k common independent sets (element 0 pinned
/// to part 0). Verdict unknown if the node budget runs out.
SearchResult<Partition> find_common_partition(const Matroid& m1,
                                              const Matroid& m2, int k,
                                              uint64_t budget = kDefaultBudget);

/// The truncation to rank r of M + free(k*r - |E|). The new elements are
/// |E|, |E|+1, ...; r defaults to r(M). Returns M itself when nothing needs
/// adding and r = r(M).
Matroid pad_to_k_bases(const Matroid& m, int k, int target_rank = -1);

/// Supplies an SBRO witness for a pair of disjoint bases, or nullopt.
using SbroWitnessFn = std::function<std::optional<ExchangeWitness>(
    const Matroid&, ElementSet, ElementSet)>;

/// find_exchange_witness in sbro mode with the default budget.
SbroWitnessFn default_sbro_witness();

/// Raised when the witness function gives up on a basis pair.
class NotSbroError : public TheoremViolation {
 public:
  NotSbroError(int matroid_index, ElementSet a, ElementSet b);
  int matroid_index() const { return matroid_index_; }
  std::pair<ElementSet, ElementSet> pair() const { return {a_, b_}; }

 private:
  int matroid_index_;
  ElementSet a_;
  ElementSet b_;
};

struct CommonDecomposition {
  /// k = max(beta1, beta2) common independent sets (empty parts dropped).
  Partition partition;
  int k = 0;
  int padded_size = 0;
  /// sum |X_i n Y_i| before the first round and after each round.
  std::vector<int> potentials;
  int rounds = 0;
};

/// Decomposition of E into max(beta1, beta2) common independent sets for
/// SBRO matroids: pad both, start from basis partitions X, Y, and while
/// X != Y merge X_i, X_j and Y_i, Y_j along the union of the two witness
/// matchings. Throws NotSbroError if the witness function fails and
/// TheoremViolation if the potential stops increasing.
CommonDecomposition decompose_common_sbro(
    const Matroid& m1, const Matroid& m2,
    const SbroWitnessFn& witness = default_sbro_witness());

}  // namespace sbrokit
