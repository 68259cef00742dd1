#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbrokit/element_set.hpp"
#include "sbrokit/matroid.hpp"
#include "sbrokit/search.hpp"

namespace sbrokit {

/// The base-exchange properties searched for on a basis pair.
///  - sbo:  phi : A\B -> B\A with (A\X) u phi(X) a basis for all X.
///  - bo:   A - x + phi(x) and B + x - phi(x) bases for all x.
///  - kbo:  both exchange forms for all |X| <= k.
///  - sbro: as sbo after repartitioning A u B (as a multiset) into bases
///          A', B' with the same intersection.
enum class ExchangeMode { sbo, bo, kbo, sbro };

struct ExchangeProperty {
  ExchangeMode mode = ExchangeMode::sbo;
  int k = 0;  // kbo only

  static ExchangeProperty sbo() { return {ExchangeMode::sbo, 0}; }
  static ExchangeProperty bo() { return {ExchangeMode::bo, 1}; }
  static ExchangeProperty kbo(int k) { return {ExchangeMode::kbo, k}; }
  static ExchangeProperty sbro() { return {ExchangeMode::sbro, 0}; }

  /// "sbo", "bo", "kbo:K", "sbro".
  static ExchangeProperty parse(const std::string& text);
  std::string to_string() const;
};

struct ExchangeWitness {
  ElementSet a_prime;
  ElementSet b_prime;
  /// (x, phi(x)) for x in A'\B', sorted by x.
  std::vector<std::pair<int, int>> bijection;
  /// Largest exchange size the witness is claimed for; nullopt means every
  /// subset of A'\B'.
  std::optional<int> exchange_bound;
};

/// Checks a witness against the basis pair (A, B). Throws InputError if A or
/// B is not a basis or the witness is malformed (repartition changes the
/// multiset, phi is not a bijection A'\B' -> B'\A').
bool verify_witness(const Matroid& m, ElementSet a, ElementSet b,
                    const ExchangeWitness& w);

/// Backtracking search for a witness. The budget counts basis queries.
SearchResult<ExchangeWitness> find_exchange_witness(
    const Matroid& m, ElementSet a, ElementSet b, ExchangeProperty property,
    uint64_t budget = kDefaultBudget);

enum class ClassVerdict { holds, fails, unknown };
std::string_view to_string(ClassVerdict v);

enum class PairOrder {
  lexicographic,
  /// Pairs sorted by |A n B| ascending (disjoint pairs first), ties
  /// lexicographic.
  disjoint_first,
};

struct ClassCheck {
  ClassVerdict verdict = ClassVerdict::holds;
  std::optional<std::pair<ElementSet, ElementSet>> counterexample;
  std::optional<std::pair<ElementSet, ElementSet>> unresolved_pair;
  uint64_t bases = 0;
  uint64_t pairs_total = 0;
  uint64_t pairs_checked = 0;
  /// Pairs settled by a search (the rest reused an earlier result; sbro
  /// depends only on A n B and A u B).
  uint64_t pairs_searched = 0;
  uint64_t max_queries_per_pair = 0;
  SearchStats stats;
};

/// Quantifies find_exchange_witness over all unordered pairs of distinct
/// bases; stops at the first failure. `budget_per_pair` bounds each search.
ClassCheck check_class(const Matroid& m, ExchangeProperty property,
                       uint64_t budget_per_pair = kDefaultBudget,
                       PairOrder order = PairOrder::lexicographic);

/// Same, restricted to an explicit list of pairs (in the given order).
ClassCheck check_pairs(
    const Matroid& m, ExchangeProperty property,
    const std::vector<std::pair<ElementSet, ElementSet>>& pairs,
    uint64_t budget_per_pair = kDefaultBudget);

}  // namespace sbrokit
