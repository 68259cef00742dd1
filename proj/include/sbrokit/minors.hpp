#pragma once

#include <optional>
#include <vector>

#include "sbrokit/element_set.hpp"
#include "sbrokit/matroid.hpp"
#include "sbrokit/search.hpp"

namespace sbrokit {

/// Element bijection E(M1) -> E(M2) preserving circuits, or nullopt.
/// Complete (exhaustive backtracking) with invariant pruning.
std::optional<std::vector<int>> are_isomorphic(const Matroid& m1,
                                               const Matroid& m2);

/// True iff `map` is a bijection with r2(map(X)) = r1(X) for all X.
/// Exhaustive over subsets; meant for n <= 20.
bool is_isomorphism(const Matroid& m1, const Matroid& m2,
                    const std::vector<int>& map);

/// N = M / contract \ del, with `map` sending element i of N to the host
/// element playing its role.
struct MinorWitness {
  ElementSet contract;
  ElementSet del;
  std::vector<int> map;
};

/// Checks the witness by comparing rank functions on every subset.
bool verify_minor_witness(const Matroid& host, const Matroid& pattern,
                          const MinorWitness& w);

/// Searches (C, D) with C independent, D coindependent, |C| = r(M) - r(N)
/// and |C| + |D| = |E(M)| - |E(N)| in lexicographic order. The budget
/// counts isomorphism tests.
SearchResult<MinorWitness> has_minor(const Matroid& host,
                                     const Matroid& pattern,
                                     uint64_t budget = kDefaultBudget);

}  // namespace sbrokit
