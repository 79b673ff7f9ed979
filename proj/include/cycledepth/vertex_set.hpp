#ifndef CYCLEDEPTH_VERTEX_SET_HPP
#define CYCLEDEPTH_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace cycledepth {

inline uint64_t low_bits(int count) {
  return count >= 64 ? ~uint64_t{0} : (uint64_t{1} << count) - 1;
}

// Set of vertices over a fixed universe 0..universe-1. Universes up to 64
// vertices live in a single machine word; larger universes spill into a word
// array with identical semantics. Iteration is always in ascending vertex
// order, which keeps every algorithm built on top deterministic.
class VertexSet {
 public:
  VertexSet() : universe_(0), word_(0) {}
  explicit VertexSet(int universe) : universe_(universe), word_(0) {
    if (universe_ > 64) words_.assign((universe_ + 63) / 64, 0);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    if (universe <= 64) {
      s.word_ = low_bits(universe);
    } else {
      for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) {
        int remaining = universe - 64 * w;
        s.words_[w] = low_bits(remaining >= 64 ? 64 : remaining);
      }
    }
    return s;
  }

  static VertexSet from_mask(int universe, uint64_t mask) {
    assert(universe <= 64);
    VertexSet s(universe);
    s.word_ = mask & low_bits(universe);
    return s;
  }

  int universe() const { return universe_; }
  bool small() const { return universe_ <= 64; }

  uint64_t mask() const {
    assert(small());
    return word_;
  }

  bool contains(int v) const {
    assert(v >= 0 && v < universe_);
    return small() ? (word_ >> v) & 1 : (words_[v >> 6] >> (v & 63)) & 1;
  }

  void insert(int v) {
    assert(v >= 0 && v < universe_);
    if (small())
      word_ |= uint64_t{1} << v;
    else
      words_[v >> 6] |= uint64_t{1} << (v & 63);
  }

  void erase(int v) {
    assert(v >= 0 && v < universe_);
    if (small())
      word_ &= ~(uint64_t{1} << v);
    else
      words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }

  VertexSet with(int v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }

  VertexSet without(int v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  int size() const {
    if (small()) return std::popcount(word_);
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    if (small()) return word_ == 0;
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  // Smallest member, or -1 when empty.
  int first() const {
    if (small()) return word_ ? std::countr_zero(word_) : -1;
    for (int w = 0; w < static_cast<int>(words_.size()); ++w)
      if (words_[w]) return 64 * w + std::countr_zero(words_[w]);
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    if (small()) {
      for (uint64_t m = word_; m; m &= m - 1) f(std::countr_zero(m));
      return;
    }
    for (int w = 0; w < static_cast<int>(words_.size()); ++w)
      for (uint64_t m = words_[w]; m; m &= m - 1) f(64 * w + std::countr_zero(m));
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    if (small())
      word_ |= o.word_;
    else
      for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    if (small())
      word_ &= o.word_;
    else
      for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  VertexSet& operator-=(const VertexSet& o) {
    assert(universe_ == o.universe_);
    if (small())
      word_ &= ~o.word_;
    else
      for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    if (small()) return (word_ & o.word_) != 0;
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    if (small()) return (word_ & ~o.word_) == 0;
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && (small() ? word_ == o.word_ : words_ == o.words_);
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Lexicographic on the word representation; a total order usable as a
  // canonical memoization key.
  bool operator<(const VertexSet& o) const {
    assert(universe_ == o.universe_);
    return small() ? word_ < o.word_ : words_ < o.words_;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<uint64_t>(universe_);
    auto mix = [&h](uint64_t w) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    if (small())
      mix(word_);
    else
      for (uint64_t w : words_) mix(w);
    return static_cast<size_t>(h);
  }

 private:
  int universe_;
  uint64_t word_;                 // storage when universe_ <= 64
  std::vector<uint64_t> words_;   // storage otherwise
};

struct VertexSetHash {
  size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace cycledepth

#endif
