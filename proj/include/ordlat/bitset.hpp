#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ordlat/kernels.hpp"

namespace ordlat {

// Fixed-length set of element indices. Ordering compares the sets as binary
// numbers (bit i has weight 2^i), which is the canonical order used for
// down-sets, prime ideals and spectra.
class Bitset {
 public:
  using word = kernels::word;

  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_(word_count(bits), 0) {}

  static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }
  static Bitset from_mask(std::size_t bits, std::uint64_t mask);
  static Bitset from_indices(std::size_t bits, std::span<const std::size_t> indices);
  static Bitset full(std::size_t bits);

  std::size_t size() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= word{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(word{1} << (i % 64)); }

  std::size_t count() const { return kernels::active().popcount(words_.data(), words_.size()); }
  bool none() const;
  bool any() const { return !none(); }
  bool all() const { return count() == bits_; }

  bool subset_of(const Bitset& other) const {
    return kernels::active().is_subset(words_.data(), other.words_.data(), words_.size());
  }
  bool intersects(const Bitset& other) const {
    return kernels::active().intersects(words_.data(), other.words_.data(), words_.size());
  }

  Bitset& operator|=(const Bitset& other) {
    kernels::active().or_into(words_.data(), other.words_.data(), words_.size());
    return *this;
  }
  Bitset& operator&=(const Bitset& other) {
    kernels::active().and_into(words_.data(), other.words_.data(), words_.size());
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  Bitset complement() const;
  std::vector<std::size_t> indices() const;
  // Lowest set index, or size() if empty.
  std::size_t first() const;
  std::uint64_t to_mask() const;  // requires size() <= 64

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      word bits = words_[w];
      while (bits) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const word> words() const { return words_; }
  std::span<word> words() { return words_; }

  bool operator==(const Bitset& other) const = default;
  std::strong_ordering operator<=>(const Bitset& other) const;

 private:
  std::size_t bits_ = 0;
  std::vector<word> words_;
};

}  // namespace ordlat
