#ifndef INTDEL_BITSET_HPP
#define INTDEL_BITSET_HPP

#include <cstdint>
#include <cassert>
#include <vector>

namespace intdel {

// Fixed-capacity dynamic bitset over vertex ids. Word-parallel set algebra;
// all iteration runs in ascending id order.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  int capacity() const { return nbits_; }

  void set(int i) { w_[i >> 6] |= (1ULL << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += __builtin_popcountll(x);
    return c;
  }

  bool empty() const {
    for (uint64_t x : w_)
      if (x) return false;
    return true;
  }
  bool any() const { return !empty(); }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // this \ o
  Bitset& operator-=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const { return w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return w_ != o.w_; }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  int intersection_count(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i)
      c += __builtin_popcountll(w_[i] & o.w_[i]);
    return c;
  }

  // Smallest member, or -1 when empty.
  int first() const { return next(0); }

  // Smallest member >= from, or -1.
  int next(int from) const {
    if (from >= nbits_) return -1;
    size_t wi = from >> 6;
    uint64_t cur = w_[wi] & (~0ULL << (from & 63));
    while (true) {
      if (cur) return int(wi * 64 + __builtin_ctzll(cur));
      if (++wi >= w_.size()) return -1;
      cur = w_[wi];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
    return out;
  }

  static Bitset of(int nbits, std::initializer_list<int> ids) {
    Bitset b(nbits);
    for (int i : ids) b.set(i);
    return b;
  }

  static Bitset of(int nbits, const std::vector<int>& ids) {
    Bitset b(nbits);
    for (int i : ids) b.set(i);
    return b;
  }

  static Bitset full(int nbits) {
    Bitset b(nbits);
    for (int i = 0; i < nbits; ++i) b.set(i);
    return b;
  }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

#define INTDEL_FOR_SET(v, bs) \
  for (int v = (bs).first(); v >= 0; v = (bs).next(v + 1))

}  // namespace intdel

#endif
