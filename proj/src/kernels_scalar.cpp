#include "ordlat/kernels.hpp"

#include <bit>

#include "kernels_impl.hpp"

namespace ordlat::kernels {
namespace {

void or_into(word* dst, const word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void and_into(word* dst, const word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

bool is_subset(const word* a, const word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(const word* a, const word* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

std::size_t popcount(const word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

void transitive_closure(word* rows, std::size_t n, std::size_t stride) {
  for (std::size_t k = 0; k < n; ++k) {
    const word* row_k = rows + k * stride;
    const std::size_t kw = k / 64;
    const word kb = word{1} << (k % 64);
    for (std::size_t i = 0; i < n; ++i) {
      word* row_i = rows + i * stride;
      if (row_i[kw] & kb) or_into(row_i, row_k, stride);
    }
  }
}

}  // namespace

const RowOps& scalar_ops() {
  static const RowOps ops{Backend::scalar, "scalar", or_into,  and_into,
                          is_subset,       intersects, popcount, transitive_closure};
  return ops;
}

}  // namespace ordlat::kernels
