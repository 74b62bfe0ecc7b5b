#include "ordlat/bitset.hpp"

#include "ordlat/error.hpp"

namespace ordlat {

Bitset Bitset::from_mask(std::size_t bits, std::uint64_t mask) {
  if (bits > 64) raise(ErrorKind::invalid_argument, "mask bitset wider than 64 bits");
  Bitset b(bits);
  if (bits > 0) b.words_[0] = bits == 64 ? mask : mask & ((word{1} << bits) - 1);
  return b;
}

Bitset Bitset::from_indices(std::size_t bits, std::span<const std::size_t> indices) {
  Bitset b(bits);
  for (std::size_t i : indices) b.set(i);
  return b;
}

Bitset Bitset::full(std::size_t bits) {
  Bitset b(bits);
  for (std::size_t i = 0; i < b.words_.size(); ++i) b.words_[i] = ~word{0};
  if (bits % 64) b.words_.back() = (word{1} << (bits % 64)) - 1;
  return b;
}

bool Bitset::none() const {
  for (word w : words_)
    if (w) return false;
  return true;
}

Bitset Bitset::complement() const {
  Bitset out = full(bits_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  return out;
}

std::vector<std::size_t> Bitset::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t Bitset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return bits_;
}

std::uint64_t Bitset::to_mask() const {
  if (bits_ > 64) raise(ErrorKind::invalid_argument, "bitset wider than 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::strong_ordering Bitset::operator<=>(const Bitset& other) const {
  if (auto c = bits_ <=> other.bits_; c != 0) return c;
  for (std::size_t i = words_.size(); i-- > 0;)
    if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

}  // namespace ordlat
