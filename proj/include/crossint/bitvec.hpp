#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace crossint {

// Fixed-length bit vector with 64-bit words. Bits beyond size() are always 0.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitVec() = default;
  explicit BitVec(std::size_t n) : size_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}

  static BitVec full(std::size_t n) {
    BitVec v(n);
    for (auto& w : v.words_) w = ~Word{0};
    v.trim();
    return v;
  }

  std::size_t size() const { return size_; }
  std::size_t num_words() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }
  Word word(std::size_t i) const { return words_[i]; }

  bool test(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (Word w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }
  bool all() const { return count() == size_; }

  // First set bit at index >= from, or npos.
  std::size_t next(std::size_t from) const {
    if (from >= size_) return npos;
    std::size_t wi = from / kWordBits;
    Word w = words_[wi] & (~Word{0} << (from % kWordBits));
    while (true) {
      if (w) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }
  std::size_t first() const { return next(0); }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  BitVec& operator|=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  // Set difference: this \ o.
  BitVec& operator-=(const BitVec& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator-(BitVec a, const BitVec& b) { return a -= b; }

  BitVec complement() const {
    BitVec v(*this);
    for (auto& w : v.words_) w = ~w;
    v.trim();
    return v;
  }

  std::size_t intersection_count(const BitVec& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }
  bool intersects(const BitVec& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const BitVec& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) = default;

  // Canonical order: compare as sorted index lists, lexicographically
  // (so {0,1} < {0,2} < {1}). Shorter prefix sorts first.
  friend bool operator<(const BitVec& a, const BitVec& b) {
    std::size_t i = a.first(), j = b.first();
    while (i != npos && j != npos) {
      if (i != j) return i < j;
      i = a.next(i + 1);
      j = b.next(j + 1);
    }
    return i == npos && j != npos;
  }

  std::size_t hash() const {
    std::size_t h = size_ * 0x9E3779B97F4A7C15ull;
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() {
    if (size_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (size_ % kWordBits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace crossint
