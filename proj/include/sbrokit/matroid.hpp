#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sbrokit/element_set.hpp"

namespace sbrokit {

enum class RepKind {
  linear,
  graphic,
  partition,
  uniform,
  paving,
  spike,
  cyclic_flats,
  derived,
};

std::string_view to_string(RepKind kind);

/// A concrete rank rule over the ground set {0, ..., size()-1}.
class Representation {
 public:
  virtual ~Representation() = default;

  virtual RepKind kind() const = 0;
  virtual int size() const = 0;
  /// Rank of x; callers guarantee x is inside the ground set.
  virtual int rank_of(ElementSet x) const = 0;
};

namespace detail {
class MatroidState;
}

/// An immutable matroid given by a rank oracle. Copies share the
/// representation and the rank memo; the memo is safe for concurrent use.
class Matroid {
 public:
  explicit Matroid(std::shared_ptr<const Representation> rep,
                   std::vector<std::string> labels = {});

  int size() const;
  ElementSet ground_set() const;
  /// r(E).
  int rank() const;
  /// r(x). Throws InputError if x leaves the ground set.
  int rank(ElementSet x) const;

  bool is_independent(ElementSet x) const { return rank(x) == x.size(); }
  bool is_basis(ElementSet x) const {
    return x.size() == rank() && rank(x) == x.size();
  }
  bool is_spanning(ElementSet x) const { return rank(x) == rank(); }

  RepKind kind() const;
  const Representation& representation() const;
  std::shared_ptr<const Representation> representation_ptr() const;

  template <class R>
  const R* as() const {
    return dynamic_cast<const R*>(&representation());
  }

  /// Display labels, one per element ("0", "1", ... unless set).
  const std::vector<std::string>& labels() const;
  const std::string& label(int e) const;
  /// Same matroid with new display labels (and a fresh memo).
  Matroid with_labels(std::vector<std::string> labels) const;

  /// Throws InputError unless every element of x is in the ground set.
  void check_subset(ElementSet x) const;
  void check_element(int e) const;

 private:
  std::shared_ptr<const detail::MatroidState> state_;
};

/// {e : r(x + e) = r(x)}.
ElementSet closure(const Matroid& m, ElementSet x);
bool is_flat(const Matroid& m, ElementSet x);

/// Elements e with r({e}) = 0.
ElementSet loops(const Matroid& m);
/// Elements in every basis.
ElementSet coloops(const Matroid& m);

/// All bases, sorted by mask value.
std::vector<ElementSet> enumerate_bases(const Matroid& m);
/// Some basis: the lexicographically-first one found by the greedy rule.
ElementSet greedy_basis(const Matroid& m, ElementSet within);

/// All circuits contained in x, sorted lexicographically by element list.
/// `node_budget` bounds the number of rank queries; on exhaustion throws
/// CircuitBudgetExceeded with the circuits found so far.
std::vector<ElementSet> circuits_within(const Matroid& m, ElementSet x,
                                        uint64_t node_budget = 50'000'000);

/// C_B(e), the unique circuit in B + e.
ElementSet fundamental_circuit(const Matroid& m, ElementSet basis, int e);

}  // namespace sbrokit
