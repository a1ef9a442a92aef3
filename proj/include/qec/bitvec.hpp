#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qec {

// Fixed-length packed bit vector. Bits beyond size() are kept zero, which
// lets popcount-style operations run over whole words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set(std::size_t i, bool v) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(std::size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  void xor_with(const BitVec& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      words_[w] ^= o.words_[w];
    }
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  // |a AND b|, used for symplectic inner products.
  static std::size_t and_popcount(const BitVec& a, const BitVec& b) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      c += std::popcount(a.words_[w] & b.words_[w]);
    }
    return c;
  }

  // |a OR b|, the joint support size.
  static std::size_t or_popcount(const BitVec& a, const BitVec& b) {
    std::size_t c = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) {
      c += std::popcount(a.words_[w] | b.words_[w]);
    }
    return c;
  }

  bool any() const {
    for (uint64_t w : words_) {
      if (w) return true;
    }
    return false;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace qec
