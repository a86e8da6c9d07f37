#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace lieslice {

/// A subset of the simple roots, stored as a bitmask over 0-based indices.
class SimpleSet {
 public:
  static constexpr int kCapacity = 32;

  constexpr SimpleSet() = default;
  constexpr explicit SimpleSet(std::uint32_t bits) : bits_(bits) {}

  static SimpleSet from_indices(const std::vector<int>& indices) {
    SimpleSet s;
    for (int i : indices) s.insert(i);
    return s;
  }

  /// {0, ..., n-1}
  static constexpr SimpleSet full(int n) { return SimpleSet(n >= kCapacity ? ~0u : ((1u << n) - 1u)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(int i) { bits_ |= (1u << i); }
  constexpr void erase(int i) { bits_ &= ~(1u << i); }
  constexpr bool is_subset_of(SimpleSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// 1-based, comma separated; "" for the empty set.
  std::string to_string() const {
    std::string out;
    for (int i : indices()) {
      if (!out.empty()) out += ',';
      out += std::to_string(i + 1);
    }
    return out;
  }

  friend constexpr SimpleSet operator&(SimpleSet a, SimpleSet b) { return SimpleSet(a.bits_ & b.bits_); }
  friend constexpr SimpleSet operator|(SimpleSet a, SimpleSet b) { return SimpleSet(a.bits_ | b.bits_); }
  friend constexpr SimpleSet operator-(SimpleSet a, SimpleSet b) { return SimpleSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(SimpleSet, SimpleSet) = default;
  friend constexpr auto operator<=>(SimpleSet, SimpleSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace lieslice
