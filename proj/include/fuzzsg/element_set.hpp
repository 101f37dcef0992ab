#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "fuzzsg/core.hpp"

namespace fuzzsg {

// Fixed-width membership mask over the element indices of one group.
//
// Ordering (operator<) compares the sorted member lists lexicographically,
// so {0,1} < {0,2} < {0,2,3}. Subgroup lattices sort by (size, this order).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Elem>(i));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(Elem x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void insert(Elem x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(Elem x) { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        out.push_back(static_cast<Elem>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        f(static_cast<Elem>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // Lexicographic on sorted member lists: the first index where the sets
  // differ decides; the set holding the smaller element there comes first,
  // and a proper prefix comes first.
  friend bool operator<(const ElementSet& a, const ElementSet& b) {
    const std::size_t n = std::min(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto diff = a.words_[i] ^ b.words_[i];
      if (!diff) continue;
      const auto low = diff & (~diff + 1);
      // `low` marks the smallest differing element. Whoever owns it is
      // smaller unless the other set has no elements at or above it.
      const bool a_has = (a.words_[i] & low) != 0;
      const ElementSet& other = a_has ? b : a;
      const bool other_has_larger = other.has_member_at_or_above(i, low);
      return a_has == other_has_larger;
    }
    return a.words_.size() < b.words_.size();
  }

 private:
  bool has_member_at_or_above(std::size_t word, std::uint64_t low) const {
    if (words_[word] & ~(low - 1)) return true;
    for (std::size_t i = word + 1; i < words_.size(); ++i)
      if (words_[i]) return true;
    return false;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace fuzzsg
