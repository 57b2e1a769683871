#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace dtopo {

/// Fixed-capacity bit set over vertex indices [0, capacity).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (std::size_t i = 0; i < capacity; ++i) s.insert(i);
    return s;
  }

  std::size_t capacity() const { return capacity_; }

  bool contains(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Smallest member, or capacity() when empty.
  std::size_t first() const { return next(0); }

  /// Smallest member >= i, or capacity() when none.
  std::size_t next(std::size_t i) const {
    if (i >= capacity_) return capacity_;
    std::size_t w = i >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (bits) return (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
      if (++w == words_.size()) return capacity_;
      bits = words_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        f((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  std::size_t intersection_size(const VertexSet& o) const {
    std::size_t n = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
      n += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
    return n;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto w : words_) {
      h ^= static_cast<std::size_t>(w);
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace dtopo
