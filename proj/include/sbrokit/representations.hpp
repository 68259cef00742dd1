#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sbrokit/element_set.hpp"
#include "sbrokit/matroid.hpp"

namespace sbrokit {

/// Columns of an r x n matrix over GF(p); element i is column i.
class LinearRep : public Representation {
 public:
  LinearRep(int prime, std::vector<std::vector<int>> rows);

  RepKind kind() const override { return RepKind::linear; }
  int size() const override { return cols_; }
  int rank_of(ElementSet x) const override;

  int prime() const { return prime_; }
  int rows() const { return rows_; }
  /// Canonical residue in [0, p).
  int entry(int row, int col) const { return matrix_[row * cols_ + col]; }
  std::vector<std::vector<int>> matrix() const;

 private:
  int prime_;
  int rows_;
  int cols_;
  std::vector<uint8_t> matrix_;  // row-major
  std::vector<uint8_t> inverse_;
};

/// Edge i of a multigraph is element i. Loops and parallel edges allowed.
class GraphicRep : public Representation {
 public:
  GraphicRep(int vertices, std::vector<std::pair<int, int>> edges);

  RepKind kind() const override { return RepKind::graphic; }
  int size() const override { return static_cast<int>(edges_.size()); }
  int rank_of(ElementSet x) const override;

  int vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

/// Independent iff at most one element per class.
class PartitionRep : public Representation {
 public:
  explicit PartitionRep(std::vector<ElementSet> classes);

  RepKind kind() const override { return RepKind::partition; }
  int size() const override { return size_; }
  int rank_of(ElementSet x) const override;

  const std::vector<ElementSet>& classes() const { return classes_; }

 private:
  std::vector<ElementSet> classes_;
  int size_;
};

class UniformRep : public Representation {
 public:
  UniformRep(int rank, int size);

  RepKind kind() const override { return RepKind::uniform; }
  int size() const override { return size_; }
  int rank_of(ElementSet x) const override;

  int rank() const { return rank_; }

 private:
  int rank_;
  int size_;
};

/// Paving matroid of rank r from its non-trivial hyperplanes: sets of size
/// >= r meeting pairwise in at most r - 2 elements. A set of size >= r has
/// rank r - 1 iff it lies inside a listed hyperplane.
class PavingRep : public Representation {
 public:
  PavingRep(int rank, int size, std::vector<ElementSet> hyperplanes);

  RepKind kind() const override { return RepKind::paving; }
  int size() const override { return size_; }
  int rank_of(ElementSet x) const override;

  int rank() const { return rank_; }
  const std::vector<ElementSet>& hyperplanes() const { return hyperplanes_; }

 private:
  int rank_;
  int size_;
  std::vector<ElementSet> hyperplanes_;
};

/// Rank-r spike on 2r + 1 elements with a fixed layout: the tip is element
/// 0 and leg i (1-based) is {0, 2i - 1, 2i}, i.e. x_i = 2i - 1, y_i = 2i.
/// `transversals` lists the dependent r-sets picking one of x_i, y_i per leg.
class SpikeRep : public Representation {
 public:
  SpikeRep(int rank, std::vector<ElementSet> transversals);

  RepKind kind() const override { return RepKind::spike; }
  int size() const override { return 2 * rank_ + 1; }
  int rank_of(ElementSet x) const override;

  int rank() const { return rank_; }
  const std::vector<ElementSet>& transversals() const { return transversals_; }

  static constexpr int tip() { return 0; }
  static constexpr int x(int leg) { return 2 * leg - 1; }
  static constexpr int y(int leg) { return 2 * leg; }

 private:
  int rank_;
  std::vector<ElementSet> transversals_;
};

/// Rank given by a list of cyclic flats:
/// r(X) = min(|X|, r, min_Z rank(Z) + |X \ Z|).
/// The rank axioms are verified at construction (exhaustively for n <= 16).
class CyclicFlatsRep : public Representation {
 public:
  CyclicFlatsRep(int rank, int size,
                 std::vector<std::pair<ElementSet, int>> flats);

  RepKind kind() const override { return RepKind::cyclic_flats; }
  int size() const override { return size_; }
  int rank_of(ElementSet x) const override;

  int rank() const { return rank_; }
  const std::vector<std::pair<ElementSet, int>>& flats() const {
    return flats_;
  }

 private:
  int rank_;
  int size_;
  std::vector<std::pair<ElementSet, int>> flats_;
};

Matroid make_uniform(int rank, int size);
/// U_{n,n}.
Matroid make_free(int size);
Matroid make_linear(int prime, std::vector<std::vector<int>> rows);
Matroid make_graphic(int vertices, std::vector<std::pair<int, int>> edges);
Matroid make_partition(std::vector<ElementSet> classes);
Matroid make_paving(int rank, int size, std::vector<ElementSet> hyperplanes);
Matroid make_spike(int rank, std::vector<ElementSet> transversals);
Matroid make_cyclic_flats(int rank, int size,
                          std::vector<std::pair<ElementSet, int>> flats);

/// Checks unit increase and local submodularity on every subset. Meant for
/// small ground sets (cost 2^n * n^2).
bool satisfies_rank_axioms(const Representation& rep);

}  // namespace sbrokit
