#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace sbrokit {

/// Largest supported ground set.
inline constexpr int kMaxElements = 64;

/// A subset of a ground set {0, ..., n-1} with n <= 64, stored as one word.
class ElementSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(uint64_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= bit(e);
  }

  static ElementSet from(std::span<const int> elements);
  /// {0, ..., n-1}.
  static constexpr ElementSet range(int n) {
    return ElementSet(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  static constexpr ElementSet single(int e) { return ElementSet(bit(e)); }

  constexpr uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }
  /// Smallest element; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  /// Largest element; undefined on the empty set.
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr ElementSet with(int e) const { return ElementSet(bits_ | bit(e)); }
  constexpr ElementSet without(int e) const {
    return ElementSet(bits_ & ~bit(e));
  }

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }
  /// Symmetric difference.
  constexpr ElementSet operator^(ElementSet o) const {
    return ElementSet(bits_ ^ o.bits_);
  }
  ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const ElementSet&) const = default;
  /// Orders by the numeric value of the mask.
  constexpr auto operator<=>(const ElementSet&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const;
  /// "{0,3,5}".
  std::string to_string() const;

 private:
  static constexpr uint64_t bit(int e) { return uint64_t{1} << e; }

  uint64_t bits_ = 0;
};

/// Lexicographic comparison of the sorted element lists.
bool lex_less(ElementSet a, ElementSet b);

/// Visits every subset of `set` (including empty and `set` itself).
template <class Fn>
void for_each_subset(ElementSet set, Fn&& fn) {
  uint64_t full = set.bits();
  uint64_t sub = 0;
  while (true) {
    fn(ElementSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

/// Visits every k-subset of `set` in increasing mask order.
template <class Fn>
void for_each_k_subset(ElementSet set, int k, Fn&& fn) {
  std::vector<int> elems = set.to_vector();
  int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(ElementSet());
    return;
  }
  if (k == n) {
    fn(set);
    return;
  }
  // Gosper's hack over positions, then scatter onto the elements.
  uint64_t pos = (uint64_t{1} << k) - 1;
  uint64_t limit = n >= 64 ? 0 : (uint64_t{1} << n);
  while (true) {
    uint64_t mask = 0;
    for (uint64_t p = pos; p != 0; p &= p - 1) {
      mask |= uint64_t{1} << elems[std::countr_zero(p)];
    }
    fn(ElementSet(mask));
    uint64_t c = pos & -pos;
    uint64_t r = pos + c;
    if (r == 0 || (limit != 0 && r >= limit)) break;
    pos = (((r ^ pos) >> 2) / c) | r;
    if (limit != 0 && pos >= limit) break;
  }
}

}  // namespace sbrokit
