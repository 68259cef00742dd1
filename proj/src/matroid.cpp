#include "sbrokit/matroid.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <unordered_map>

#include "sbrokit/errors.hpp"

namespace sbrokit {

std::string_view to_string(RepKind kind) {
  switch (kind) {
    case RepKind::linear:
      return "linear";
    case RepKind::graphic:
      return "graphic";
    case RepKind::partition:
      return "partition";
    case RepKind::uniform:
      return "uniform";
    case RepKind::paving:
      return "paving";
    case RepKind::spike:
      return "spike";
    case RepKind::cyclic_flats:
      return "cyclic_flats";
    case RepKind::derived:
      return "derived";
  }
  return "derived";
}

namespace detail {

// Dense table of atomics for small ground sets, a locked hash map above.
class RankMemo {
 public:
  static constexpr int kDenseLimit = 20;

  explicit RankMemo(int n) : n_(n) {
    if (n_ <= kDenseLimit) {
      size_t cells = size_t{1} << n_;
      dense_ = std::make_unique<std::atomic<int8_t>[]>(cells);
      for (size_t i = 0; i < cells; ++i) {
        dense_[i].store(-1, std::memory_order_relaxed);
      }
    }
  }

  int get(uint64_t key) const {
    if (dense_) return dense_[key].load(std::memory_order_relaxed);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sparse_.find(key);
    return it == sparse_.end() ? -1 : it->second;
  }

  void put(uint64_t key, int value) const {
    if (dense_) {
      dense_[key].store(static_cast<int8_t>(value), std::memory_order_relaxed);
      return;
    }
    std::lock_guard<std::mutex> lock(mu_);
    sparse_.emplace(key, static_cast<int8_t>(value));
  }

 private:
  int n_;
  std::unique_ptr<std::atomic<int8_t>[]> dense_;
  mutable std::mutex mu_;
  mutable std::unordered_map<uint64_t, int8_t> sparse_;
};

class MatroidState {
 public:
  MatroidState(std::shared_ptr<const Representation> rep,
               std::vector<std::string> labels)
      : rep_(std::move(rep)), memo_(rep_->size()) {
    n_ = rep_->size();
    if (n_ < 0 || n_ > kMaxElements) {
      throw InputError("ground set size must be in [0, 64]");
    }
    ground_ = ElementSet::range(n_);
    if (labels.empty()) {
      labels.reserve(n_);
      for (int i = 0; i < n_; ++i) labels.push_back(std::to_string(i));
    } else if (static_cast<int>(labels.size()) != n_) {
      throw InputError("label count does not match ground set size");
    }
    labels_ = std::move(labels);
    full_rank_ = rank(ground_);
  }

  int rank(ElementSet x) const {
    int cached = memo_.get(x.bits());
    if (cached >= 0) return cached;
    int value = rep_->rank_of(x);
    memo_.put(x.bits(), value);
    return value;
  }

  std::shared_ptr<const Representation> rep_;
  RankMemo memo_;
  int n_ = 0;
  ElementSet ground_;
  int full_rank_ = 0;
  std::vector<std::string> labels_;
};

}  // namespace detail

Matroid::Matroid(std::shared_ptr<const Representation> rep,
                 std::vector<std::string> labels) {
  if (!rep) throw InputError("null representation");
  state_ = std::make_shared<detail::MatroidState>(std::move(rep),
                                                  std::move(labels));
}

int Matroid::size() const { return state_->n_; }
ElementSet Matroid::ground_set() const { return state_->ground_; }
int Matroid::rank() const { return state_->full_rank_; }

int Matroid::rank(ElementSet x) const {
  if (!x.is_subset_of(state_->ground_)) check_subset(x);
  return state_->rank(x);
}

RepKind Matroid::kind() const { return state_->rep_->kind(); }
const Representation& Matroid::representation() const { return *state_->rep_; }
std::shared_ptr<const Representation> Matroid::representation_ptr() const {
  return state_->rep_;
}

const std::vector<std::string>& Matroid::labels() const {
  return state_->labels_;
}
const std::string& Matroid::label(int e) const {
  check_element(e);
  return state_->labels_[e];
}

Matroid Matroid::with_labels(std::vector<std::string> labels) const {
  return Matroid(state_->rep_, std::move(labels));
}

void Matroid::check_subset(ElementSet x) const {
  if (!x.is_subset_of(state_->ground_)) {
    throw InputError("element " + std::to_string((x - state_->ground_).min()) +
                     " outside ground set of size " +
                     std::to_string(state_->n_));
  }
}

void Matroid::check_element(int e) const {
  if (e < 0 || e >= state_->n_) {
    throw InputError("element " + std::to_string(e) +
                     " outside ground set of size " +
                     std::to_string(state_->n_));
  }
}

ElementSet closure(const Matroid& m, ElementSet x) {
  int r = m.rank(x);
  ElementSet out = x;
  for (int e : m.ground_set() - x) {
    if (m.rank(x.with(e)) == r) out = out.with(e);
  }
  return out;
}

bool is_flat(const Matroid& m, ElementSet x) { return closure(m, x) == x; }

ElementSet loops(const Matroid& m) {
  ElementSet out;
  for (int e : m.ground_set()) {
    if (m.rank(ElementSet::single(e)) == 0) out = out.with(e);
  }
  return out;
}

ElementSet coloops(const Matroid& m) {
  ElementSet out;
  ElementSet ground = m.ground_set();
  for (int e : ground) {
    if (m.rank(ground.without(e)) < m.rank()) out = out.with(e);
  }
  return out;
}

ElementSet greedy_basis(const Matroid& m, ElementSet within) {
  m.check_subset(within);
  ElementSet basis;
  int r = 0;
  for (int e : within) {
    if (m.rank(basis.with(e)) > r) {
      basis = basis.with(e);
      ++r;
    }
  }
  return basis;
}

namespace {

void collect_bases(const Matroid& m, ElementSet current, int next, int need,
                   std::vector<ElementSet>& out) {
  if (need == 0) {
    out.push_back(current);
    return;
  }
  int n = m.size();
  for (int e = next; e <= n - need; ++e) {
    ElementSet grown = current.with(e);
    if (m.rank(grown) == grown.size()) {
      collect_bases(m, grown, e + 1, need - 1, out);
    }
  }
}

}  // namespace

std::vector<ElementSet> enumerate_bases(const Matroid& m) {
  std::vector<ElementSet> out;
  collect_bases(m, ElementSet(), 0, m.rank(), out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct CircuitSearch {
  const Matroid& m;
  std::vector<int> elems;
  uint64_t budget;
  uint64_t used = 0;
  std::vector<ElementSet> found;

  int rank(ElementSet x) {
    if (++used > budget) throw CircuitBudgetExceeded(found);
    return m.rank(x);
  }

  // `indep` is independent and uses only elems[< start].
  void grow(ElementSet indep, size_t start) {
    for (size_t i = start; i < elems.size(); ++i) {
      ElementSet next = indep.with(elems[i]);
      if (rank(next) == next.size()) {
        grow(next, i + 1);
        continue;
      }
      // next is dependent and next - elems[i] is independent: it is a
      // circuit iff dropping any other element leaves it independent.
      bool minimal = true;
      for (int f : indep) {
        ElementSet smaller = next.without(f);
        if (rank(smaller) != smaller.size()) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.push_back(next);
    }
  }
};

}  // namespace

std::vector<ElementSet> circuits_within(const Matroid& m, ElementSet x,
                                        uint64_t node_budget) {
  m.check_subset(x);
  CircuitSearch search{m, x.to_vector(), node_budget, 0, {}};
  search.grow(ElementSet(), 0);
  std::sort(search.found.begin(), search.found.end(), lex_less);
  return std::move(search.found);
}

ElementSet fundamental_circuit(const Matroid& m, ElementSet basis, int e) {
  m.check_element(e);
  if (!m.is_basis(basis)) {
    throw InputError("fundamental_circuit: " + basis.to_string() +
                     " is not a basis");
  }
  if (basis.contains(e)) {
    throw InputError("fundamental_circuit: element already in the basis");
  }
  ElementSet circuit = ElementSet::single(e);
  for (int b : basis) {
    if (m.is_basis(basis.without(b).with(e))) circuit = circuit.with(b);
  }
  return circuit;
}

}  // namespace sbrokit
