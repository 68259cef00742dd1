#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>

namespace sbrokit {

/// Outcome of an exhaustive search: a witness, a proof of absence, or
/// neither because the budget ran out.
enum class Verdict { found, none, unknown };

std::string_view to_string(Verdict v);

inline constexpr uint64_t kDefaultBudget = 100'000'000;

/// Counts oracle queries (or search nodes) against a fixed limit.
class Budget {
 public:
  explicit Budget(uint64_t limit = kDefaultBudget) : limit_(limit) {}

  /// Returns false once the limit is exceeded.
  bool charge(uint64_t amount = 1) {
    used_ += amount;
    return used_ <= limit_;
  }
  bool exhausted() const { return used_ > limit_; }
  uint64_t used() const { return used_; }
  uint64_t limit() const { return limit_; }
  uint64_t remaining() const { return used_ >= limit_ ? 0 : limit_ - used_; }

 private:
  uint64_t limit_;
  uint64_t used_ = 0;
};

struct SearchStats {
  uint64_t oracle_queries = 0;
  uint64_t nodes = 0;
};

template <class T>
struct SearchResult {
  Verdict verdict = Verdict::none;
  std::optional<T> witness;
  SearchStats stats;

  bool found() const { return verdict == Verdict::found; }
};

}  // namespace sbrokit
