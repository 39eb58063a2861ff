#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cdlat {

// Fixed-universe bitset with a cached population count. The tag parameter
// keeps sets of group elements and sets of lattice positions apart.
template <class Tag>
class BasicBitSet {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BasicBitSet() = default;
  explicit BasicBitSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  static BasicBitSet full(std::size_t universe) {
    BasicBitSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.words_[i / kWordBits] |= word_type{1} << (i % kWordBits);
    s.count_ = universe;
    return s;
  }

  template <class Range>
  static BasicBitSet of(std::size_t universe, const Range& members) {
    BasicBitSet s(universe);
    for (auto m : members) s.insert(static_cast<std::size_t>(m));
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }
  std::span<const word_type> words() const { return words_; }

  bool contains(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }

  // Returns true when `i` was not already present.
  bool insert(std::size_t i) {
    word_type& w = words_[i / kWordBits];
    const word_type bit = word_type{1} << (i % kWordBits);
    if (w & bit) return false;
    w |= bit;
    ++count_;
    return true;
  }

  bool erase(std::size_t i) {
    word_type& w = words_[i / kWordBits];
    const word_type bit = word_type{1} << (i % kWordBits);
    if (!(w & bit)) return false;
    w &= ~bit;
    --count_;
    return true;
  }

  bool is_subset_of(const BasicBitSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  bool intersects(const BasicBitSet& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  // a & b & c is nonempty.
  static bool triple_intersects(const BasicBitSet& a, const BasicBitSet& b, const BasicBitSet& c) {
    for (std::size_t k = 0; k < a.words_.size(); ++k)
      if (a.words_[k] & b.words_[k] & c.words_[k]) return true;
    return false;
  }

  BasicBitSet& operator&=(const BasicBitSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    recount();
    return *this;
  }

  BasicBitSet& operator|=(const BasicBitSet& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    recount();
    return *this;
  }

  friend BasicBitSet operator&(BasicBitSet a, const BasicBitSet& b) { return a &= b; }
  friend BasicBitSet operator|(BasicBitSet a, const BasicBitSet& b) { return a |= b; }

  // Visits members in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      word_type w = words_[k];
      while (w) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(k * kWordBits + bit);
        w &= w - 1;
      }
    }
  }

  std::optional<std::size_t> first() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return std::nullopt;
  }

  template <class Int = std::uint32_t>
  std::vector<Int> members() const {
    std::vector<Int> out;
    out.reserve(count_);
    for_each([&](std::size_t i) { out.push_back(static_cast<Int>(i)); });
    return out;
  }

  friend bool operator==(const BasicBitSet& a, const BasicBitSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // Canonical order: by size, then the set holding the lowest differing
  // element sorts first (i.e. lexicographic on sorted member lists).
  friend std::strong_ordering canonical_compare(const BasicBitSet& a, const BasicBitSet& b) {
    if (a.count_ != b.count_) return a.count_ <=> b.count_;
    for (std::size_t k = 0; k < a.words_.size(); ++k) {
      const word_type diff = a.words_[k] ^ b.words_[k];
      if (diff) {
        const word_type low = diff & (~diff + 1);
        return (a.words_[k] & low) ? std::strong_ordering::less : std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ universe_;
    for (word_type w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  struct Hash {
    std::size_t operator()(const BasicBitSet& s) const { return s.hash(); }
  };

 private:
  void recount() {
    count_ = 0;
    for (word_type w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
  }

  std::size_t universe_ = 0;
  std::size_t count_ = 0;
  std::vector<word_type> words_;
};

struct ElementTag;
struct SubgroupTag;

// A subset of a group's elements, indexed 0..n-1.
using ElementSet = BasicBitSet<ElementTag>;
// A subset of a lattice's positions.
using SubgroupSet = BasicBitSet<SubgroupTag>;

}  // namespace cdlat
