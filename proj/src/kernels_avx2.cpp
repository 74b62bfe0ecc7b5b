#include <immintrin.h>

#include <bit>

#include "kernels_impl.hpp"

// Compiled with -mavx2. Nothing here may run before avx2_ops() has confirmed
// CPU support.
namespace ordlat::kernels {
namespace {

void or_into(word* dst, const word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(a, b));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

void and_into(word* dst, const word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(a, b));
  }
  for (; i < words; ++i) dst[i] &= src[i];
}

bool is_subset(const word* a, const word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // testc: (~vb & va) == 0
    if (!_mm256_testc_si256(vb, va)) return false;
  }
  for (; i < words; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

bool intersects(const word* a, const word* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; i < words; ++i)
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

namespace detail {

const RowOps* avx2_table() {
  static const RowOps ops{Backend::avx2, "avx2", or_into,  and_into,
                          is_subset,     intersects, popcount, transitive_closure};
  return &ops;
}

}  // namespace detail
}  // namespace ordlat::kernels
