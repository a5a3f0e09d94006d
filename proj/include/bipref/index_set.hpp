#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bipref/error.hpp"

namespace bipref {

/// Set of small indices (rule positions, norm positions) stored as a 64-bit
/// mask. Iteration is in increasing index order.
class IndexSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr IndexSet() = default;
  static constexpr IndexSet from_mask(std::uint64_t mask) {
    IndexSet s;
    s.mask_ = mask;
    return s;
  }
  /// {0, ..., n-1}
  static IndexSet first(std::size_t n) {
    if (n > kCapacity) throw ResourceLimitError("index set capacity is 64");
    return from_mask(n == kCapacity ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(mask_));
  }
  constexpr bool contains(std::size_t i) const {
    return i < kCapacity && ((mask_ >> i) & 1U) != 0;
  }
  void insert(std::size_t i) {
    if (i >= kCapacity) throw ResourceLimitError("index set capacity is 64");
    mask_ |= std::uint64_t{1} << i;
  }
  void erase(std::size_t i) {
    if (i < kCapacity) mask_ &= ~(std::uint64_t{1} << i);
  }

  constexpr bool is_subset_of(IndexSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool is_proper_subset_of(IndexSet other) const {
    return is_subset_of(other) && mask_ != other.mask_;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) {
    return from_mask(a.mask_ | b.mask_);
  }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) {
    return from_mask(a.mask_ & b.mask_);
  }
  /// Set difference.
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) {
    return from_mask(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet a, IndexSet b) {
    return a.mask_ <=> b.mask_;
  }

  class iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> to_vector() const {
    return std::vector<std::size_t>(begin(), end());
  }

  /// "{0, 2}" style rendering; `prefix` is prepended to each index.
  std::string to_string(const std::string& prefix = "") const {
    std::string out = "{";
    bool first_item = true;
    for (std::size_t i : *this) {
      if (!first_item) out += ", ";
      out += prefix + std::to_string(i);
      first_item = false;
    }
    return out + "}";
  }

 private:
  std::uint64_t mask_ = 0;
};

}  // namespace bipref
