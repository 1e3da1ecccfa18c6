#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace talpha {

using Vertex = int;

/// Subset of {0, ..., universe-1} stored as a bitset.
///
/// Sets over the same universe combine with the usual operators; `a - b` is
/// set difference. Iteration visits members in ascending order.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  template <class Range>
  static VertexSet of(int universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
  }
  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }
  /// {0, ..., k-1} within a universe of size `universe`.
  static VertexSet prefix(int universe, int k) {
    VertexSet s(universe);
    for (int v = 0; v < k; ++v) s.insert(v);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(Vertex v) const {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int size() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }
  /// Smallest member, or -1 when empty.
  Vertex first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
    return -1;
  }
  /// Largest member, or -1 when empty.
  Vertex last() const {
    for (std::size_t i = words_.size(); i-- > 0;)
      if (words_[i])
        return static_cast<Vertex>(i * kWordBits + kWordBits - 1 - std::countl_zero(words_[i]));
    return -1;
  }
  /// Smallest member strictly greater than v, or -1.
  Vertex next(Vertex v) const {
    int start = v + 1;
    if (start >= universe_) return -1;
    std::size_t i = static_cast<std::size_t>(start / kWordBits);
    Word w = words_[i] & (~Word{0} << (start % kWordBits));
    while (true) {
      if (w) return static_cast<Vertex>(i * kWordBits + std::countr_zero(w));
      if (++i == words_.size()) return -1;
      w = words_[i];
    }
  }

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int intersection_size(const VertexSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  /// Complement within the universe.
  VertexSet operator~() const {
    VertexSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && std::equal(a.words_.begin(), a.words_.end(), b.words_.begin());
  }

  /// Canonical order: compares ascending member lists lexicographically
  /// (a proper prefix sorts first).
  friend bool lex_less(const VertexSet& a, const VertexSet& b) {
    Vertex x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y;
      x = a.next(x);
      y = b.next(y);
    }
    return x < 0 && y >= 0;
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* s, Vertex v) : set_(s), v_(v) {}
    Vertex operator*() const { return v_; }
    const_iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    const_iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) { return a.v_ == b.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };
  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, -1}; }

  const Word* words() const { return words_.data(); }
  std::size_t word_size() const { return words_.size(); }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
  }
  void trim() {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  int universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

/// Sort sets into canonical order (ascending smallest element, then lexicographic).
inline void sort_canonical(std::vector<VertexSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
}

}  // namespace talpha
