#include "sbrokit/representations.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sbrokit/errors.hpp"

namespace sbrokit {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int mod(int v, int p) {
  int r = v % p;
  return r < 0 ? r + p : r;
}

}  // namespace

// ---------------------------------------------------------------- linear

LinearRep::LinearRep(int prime, std::vector<std::vector<int>> rows)
    : prime_(prime), rows_(static_cast<int>(rows.size())), cols_(0) {
  if (!is_prime(prime) || prime > 251) {
    throw InputError("linear: field order must be a prime below 256, got " +
                     std::to_string(prime));
  }
  if (!rows.empty()) cols_ = static_cast<int>(rows.front().size());
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw InputError("linear: ragged matrix");
    }
  }
  if (cols_ > kMaxElements) throw InputError("linear: more than 64 columns");
  matrix_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    for (int v : row) matrix_.push_back(static_cast<uint8_t>(mod(v, prime)));
  }
  inverse_.assign(prime, 0);
  for (int a = 1; a < prime; ++a) {
    for (int b = 1; b < prime; ++b) {
      if (a * b % prime == 1) inverse_[a] = static_cast<uint8_t>(b);
    }
  }
}

std::vector<std::vector<int>> LinearRep::matrix() const {
  std::vector<std::vector<int>> out(rows_, std::vector<int>(cols_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out[i][j] = entry(i, j);
  }
  return out;
}

int LinearRep::rank_of(ElementSet x) const {
  const int k = x.size();
  if (k == 0 || rows_ == 0) return 0;
  // Work on the selected columns as rows of a k x rows_ matrix.
  std::vector<int> work(static_cast<size_t>(k) * rows_);
  int c = 0;
  for (int col : x) {
    for (int i = 0; i < rows_; ++i) work[c * rows_ + i] = entry(i, col);
    ++c;
  }
  const int p = prime_;
  int rank = 0;
  for (int pivot_col = 0; pivot_col < rows_ && rank < k; ++pivot_col) {
    int pivot = -1;
    for (int r = rank; r < k; ++r) {
      if (work[r * rows_ + pivot_col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      std::swap_ranges(work.begin() + pivot * rows_,
                       work.begin() + (pivot + 1) * rows_,
                       work.begin() + rank * rows_);
    }
    int inv = inverse_[work[rank * rows_ + pivot_col]];
    for (int j = pivot_col; j < rows_; ++j) {
      work[rank * rows_ + j] = work[rank * rows_ + j] * inv % p;
    }
    for (int r = rank + 1; r < k; ++r) {
      int f = work[r * rows_ + pivot_col];
      if (f == 0) continue;
      for (int j = pivot_col; j < rows_; ++j) {
        work[r * rows_ + j] =
            mod(work[r * rows_ + j] - f * work[rank * rows_ + j], p);
      }
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------- graphic

GraphicRep::GraphicRep(int vertices, std::vector<std::pair<int, int>> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  if (vertices_ < 0) throw InputError("graphic: negative vertex count");
  if (static_cast<int>(edges_.size()) > kMaxElements) {
    throw InputError("graphic: more than 64 edges");
  }
  for (auto [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= vertices_ || v >= vertices_) {
      throw InputError("graphic: edge endpoint out of range");
    }
  }
}

int GraphicRep::rank_of(ElementSet x) const {
  std::vector<int> parent(vertices_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int rank = 0;
  for (int e : x) {
    int a = find(edges_[e].first);
    int b = find(edges_[e].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

// -------------------------------------------------------------- partition

PartitionRep::PartitionRep(std::vector<ElementSet> classes)
    : classes_(std::move(classes)) {
  ElementSet seen;
  for (ElementSet c : classes_) {
    if (c.intersects(seen)) throw InputError("partition: classes overlap");
    seen |= c;
  }
  size_ = seen.size();
  if (seen != ElementSet::range(size_)) {
    throw InputError("partition: classes must cover 0..n-1 exactly");
  }
}

int PartitionRep::rank_of(ElementSet x) const {
  int rank = 0;
  for (ElementSet c : classes_) rank += c.intersects(x) ? 1 : 0;
  return rank;
}

// ---------------------------------------------------------------- uniform

UniformRep::UniformRep(int rank, int size) : rank_(rank), size_(size) {
  if (size < 0 || size > kMaxElements || rank < 0 || rank > size) {
    throw InputError("uniform: need 0 <= r <= n <= 64");
  }
}

int UniformRep::rank_of(ElementSet x) const {
  return std::min(x.size(), rank_);
}

// ----------------------------------------------------------------- paving

PavingRep::PavingRep(int rank, int size, std::vector<ElementSet> hyperplanes)
    : rank_(rank), size_(size), hyperplanes_(std::move(hyperplanes)) {
  if (size < 0 || size > kMaxElements || rank < 1 || rank > size) {
    throw InputError("paving: need 1 <= r <= n <= 64");
  }
  ElementSet ground = ElementSet::range(size);
  for (size_t i = 0; i < hyperplanes_.size(); ++i) {
    ElementSet h = hyperplanes_[i];
    if (!h.is_subset_of(ground)) {
      throw InputError("paving: hyperplane " + h.to_string() +
                       " leaves the ground set");
    }
    if (h.size() < rank - 1) {
      throw InputError("paving: hyperplane " + h.to_string() +
                       " has fewer than r - 1 elements");
    }
    if (h == ground) throw InputError("paving: hyperplane equals E");
    for (size_t j = 0; j < i; ++j) {
      if ((h & hyperplanes_[j]).size() > rank - 2) {
        throw InputError("paving: hyperplanes " + h.to_string() + " and " +
                         hyperplanes_[j].to_string() + " meet in more than " +
                         std::to_string(rank - 2) + " elements");
      }
    }
  }
}

int PavingRep::rank_of(ElementSet x) const {
  if (x.size() < rank_) return x.size();
  for (ElementSet h : hyperplanes_) {
    if (x.is_subset_of(h)) return rank_ - 1;
  }
  return rank_;
}

// ------------------------------------------------------------------ spike

SpikeRep::SpikeRep(int rank, std::vector<ElementSet> transversals)
    : rank_(rank), transversals_(std::move(transversals)) {
  if (rank < 2 || 2 * rank + 1 > kMaxElements) {
    throw InputError("spike: rank must be in [2, 31]");
  }
  for (size_t i = 0; i < transversals_.size(); ++i) {
    ElementSet z = transversals_[i];
    if (z.contains(tip()) || z.size() != rank_) {
      throw InputError("spike: " + z.to_string() +
                       " is not a leg transversal of size r");
    }
    for (int leg = 1; leg <= rank_; ++leg) {
      if ((z & ElementSet{x(leg), y(leg)}).size() != 1) {
        throw InputError("spike: " + z.to_string() +
                         " does not pick exactly one element per leg");
      }
    }
    for (size_t j = 0; j < i; ++j) {
      if ((z & transversals_[j]).size() > rank_ - 2) {
        throw InputError("spike: transversals " + z.to_string() + " and " +
                         transversals_[j].to_string() +
                         " meet in more than r - 2 elements");
      }
    }
  }
}

int SpikeRep::rank_of(ElementSet x) const {
  int singles = 0;
  int pairs = 0;
  for (int leg = 1; leg <= rank_; ++leg) {
    int hit = (x & ElementSet{SpikeRep::x(leg), y(leg)}).size();
    if (hit == 1) ++singles;
    if (hit == 2) ++pairs;
  }
  bool has_tip = x.contains(tip());
  if (!has_tip && pairs == 0 && singles == rank_) {
    for (ElementSet z : transversals_) {
      if (z == x) return rank_ - 1;
    }
  }
  int free_rank = singles + pairs + ((has_tip || pairs > 0) ? 1 : 0);
  return std::min(rank_, free_rank);
}

// ----------------------------------------------------------- cyclic flats

CyclicFlatsRep::CyclicFlatsRep(int rank, int size,
                               std::vector<std::pair<ElementSet, int>> flats)
    : rank_(rank), size_(size), flats_(std::move(flats)) {
  if (size < 0 || size > kMaxElements || rank < 0 || rank > size) {
    throw InputError("cyclic_flats: need 0 <= r <= n <= 64");
  }
  for (auto [z, r] : flats_) {
    if (!z.is_subset_of(ElementSet::range(size)) || r < 0 || r > z.size()) {
      throw InputError("cyclic_flats: bad flat " + z.to_string());
    }
  }
  if (size <= 16 && !satisfies_rank_axioms(*this)) {
    throw InputError("cyclic_flats: listed flats do not define a matroid");
  }
}

int CyclicFlatsRep::rank_of(ElementSet x) const {
  int best = std::min(x.size(), rank_);
  for (auto [z, r] : flats_) best = std::min(best, r + (x - z).size());
  return best;
}

// -------------------------------------------------------------- factories

Matroid make_uniform(int rank, int size) {
  return Matroid(std::make_shared<UniformRep>(rank, size));
}
Matroid make_free(int size) { return make_uniform(size, size); }
Matroid make_linear(int prime, std::vector<std::vector<int>> rows) {
  return Matroid(std::make_shared<LinearRep>(prime, std::move(rows)));
}
Matroid make_graphic(int vertices, std::vector<std::pair<int, int>> edges) {
  return Matroid(std::make_shared<GraphicRep>(vertices, std::move(edges)));
}
Matroid make_partition(std::vector<ElementSet> classes) {
  return Matroid(std::make_shared<PartitionRep>(std::move(classes)));
}
Matroid make_paving(int rank, int size, std::vector<ElementSet> hyperplanes) {
  return Matroid(
      std::make_shared<PavingRep>(rank, size, std::move(hyperplanes)));
}
Matroid make_spike(int rank, std::vector<ElementSet> transversals) {
  return Matroid(std::make_shared<SpikeRep>(rank, std::move(transversals)));
}
Matroid make_cyclic_flats(int rank, int size,
                          std::vector<std::pair<ElementSet, int>> flats) {
  return Matroid(
      std::make_shared<CyclicFlatsRep>(rank, size, std::move(flats)));
}

bool satisfies_rank_axioms(const Representation& rep) {
  const int n = rep.size();
  const uint64_t count = uint64_t{1} << n;
  std::vector<int8_t> r(count);
  for (uint64_t s = 0; s < count; ++s) {
    r[s] = static_cast<int8_t>(rep.rank_of(ElementSet(s)));
  }
  if (r[0] != 0) return false;
  for (uint64_t s = 0; s < count; ++s) {
    for (int e = 0; e < n; ++e) {
      uint64_t se = s | (uint64_t{1} << e);
      if (se == s) continue;
      int d = r[se] - r[s];
      if (d < 0 || d > 1) return false;
      for (int f = e + 1; f < n; ++f) {
        uint64_t sf = s | (uint64_t{1} << f);
        if (sf == s) continue;
        if (r[se] + r[sf] < r[se | sf] + r[s]) return false;
      }
    }
  }
  return true;
}

}  // namespace sbrokit
