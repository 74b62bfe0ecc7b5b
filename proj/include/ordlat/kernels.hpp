#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Word-parallel kernels over bit rows. Every routine has a portable scalar
// reference and, where the build and CPU allow it, an AVX2 variant picked at
// startup. Both must produce identical results.
namespace ordlat::kernels {

using word = std::uint64_t;

enum class Backend { scalar, avx2 };

struct RowOps {
  Backend backend;
  std::string_view name;
  // dst |= src
  void (*or_into)(word* dst, const word* src, std::size_t words);
  // dst &= src
  void (*and_into)(word* dst, const word* src, std::size_t words);
  // (a & ~b) == 0
  bool (*is_subset)(const word* a, const word* b, std::size_t words);
  // (a & b) != 0
  bool (*intersects)(const word* a, const word* b, std::size_t words);
  std::size_t (*popcount)(const word* a, std::size_t words);
  // Warshall closure of an n x n relation stored row-major, `stride` words per row.
  void (*transitive_closure)(word* rows, std::size_t n, std::size_t stride);
};

const RowOps& scalar_ops();

// nullptr unless the AVX2 translation unit was built and the CPU reports AVX2.
const RowOps* avx2_ops();

// The backend in use. Defaults to the fastest available one; the environment
// variable ORDLAT_KERNELS=scalar pins the reference path.
const RowOps& active();

// Overrides the active backend. Returns false if the backend is unavailable.
bool select(Backend backend);

}  // namespace ordlat::kernels
