#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace lrw1 {

/// A subset of the vertex range [0, universe) stored as a packed bitset.
///
/// Set algebra is word-wide. Two sets compare equal only if they have the same
/// universe and the same members.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    Iterator(const VertexSet* set, int pos) : set_(set), pos_(pos) {}

    int operator*() const { return pos_; }
    Iterator& operator++() {
      pos_ = set_->next(pos_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator& other) const { return pos_ == other.pos_; }

   private:
    const VertexSet* set_ = nullptr;
    int pos_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }
  VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~Word{0};
    s.trim();
    return s;
  }

  int universe() const noexcept { return universe_; }

  bool contains(int v) const noexcept {
    return (words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(int v) noexcept { words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(int v) noexcept { words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  int size() const noexcept {
    int total = 0;
    for (Word w : words_) total += std::popcount(w);
    return total;
  }
  bool empty() const noexcept {
    for (Word w : words_)
      if (w) return false;
    return true;
  }

  // Smallest member, or -1.
  int first() const noexcept { return next(-1); }

  // Smallest member strictly greater than `after`, or -1.
  int next(int after) const noexcept {
    int start = after + 1;
    if (start >= universe_) return -1;
    std::size_t wi = static_cast<std::size_t>(start) / kWordBits;
    Word w = words_[wi] & (~Word{0} << (start % kWordBits));
    while (true) {
      if (w) return static_cast<int>(wi * kWordBits) + std::countr_zero(w);
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  Iterator begin() const { return Iterator(this, first()); }
  Iterator end() const { return Iterator(this, -1); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  bool intersects(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  int intersection_size(const VertexSet& o) const noexcept {
    int total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) total += std::popcount(words_[i] & o.words_[i]);
    return total;
  }

  std::span<const Word> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  // Orders by sorted member list (lexicographic), then by universe.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    int x = a.first();
    int y = b.first();
    while (x != -1 && y != -1) {
      if (x != y) return x <=> y;
      x = a.next(x);
      y = b.next(y);
    }
    if (x != y) return x == -1 ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.universe_ <=> b.universe_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = static_cast<std::size_t>(universe_) * 0x9e3779b97f4a7c15ULL;
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  static std::size_t word_count(int universe) {
    return static_cast<std::size_t>((universe + kWordBits - 1) / kWordBits);
  }
  void trim() noexcept {
    if (universe_ % kWordBits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
  }

  int universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace lrw1
