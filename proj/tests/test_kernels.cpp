#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "ordlat/kernels.hpp"
#include "ordlat/poset.hpp"

using namespace ordlat;
using kernels::word;

namespace {

std::vector<word> random_words(std::size_t n, std::mt19937_64& rng, double density = 0.5) {
  std::vector<word> v(n);
  std::bernoulli_distribution coin(density);
  for (auto& w : v)
    for (int b = 0; b < 64; ++b)
      if (coin(rng)) w |= word{1} << b;
  return v;
}

// Plain triple loop, independent of both backends.
void closure_oracle(std::vector<word>& rows, std::size_t n, std::size_t stride) {
  auto bit = [&](std::size_t i, std::size_t j) { return (rows[i * stride + j / 64] >> (j % 64)) & 1; };
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (bit(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (bit(k, j)) rows[i * stride + j / 64] |= word{1} << (j % 64);
}

}  // namespace

TEST_CASE("scalar closure matches the triple loop") {
  std::mt19937_64 rng(7);
  for (std::size_t n : {1, 5, 63, 64, 65, 130, 257}) {
    const std::size_t stride = (n + 63) / 64;
    auto rows = random_words(n * stride, rng, 2.0 / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = n; j < stride * 64; ++j) rows[i * stride + j / 64] &= ~(word{1} << (j % 64));
    auto expected = rows;
    closure_oracle(expected, n, stride);
    kernels::scalar_ops().transitive_closure(rows.data(), n, stride);
    CHECK(rows == expected);
  }
}

TEST_CASE("every available backend agrees with the scalar reference") {
  const kernels::RowOps* simd = kernels::avx2_ops();
  if (simd == nullptr) {
    MESSAGE("AVX2 backend unavailable; only the reference path is exercised");
    return;
  }
  const auto& ref = kernels::scalar_ops();
  std::mt19937_64 rng(11);
  for (std::size_t words : {0, 1, 3, 4, 5, 8, 9, 17, 64}) {
    for (int round = 0; round < 20; ++round) {
      const auto a = random_words(words, rng, round % 2 ? 0.1 : 0.5);
      auto b = random_words(words, rng, round % 3 ? 0.5 : 0.9);
      if (round % 4 == 0)
        for (std::size_t i = 0; i < words; ++i) b[i] |= a[i];

      auto x = a, y = a;
      ref.or_into(x.data(), b.data(), words);
      simd->or_into(y.data(), b.data(), words);
      CHECK(x == y);
      x = a, y = a;
      ref.and_into(x.data(), b.data(), words);
      simd->and_into(y.data(), b.data(), words);
      CHECK(x == y);
      CHECK(ref.is_subset(a.data(), b.data(), words) == simd->is_subset(a.data(), b.data(), words));
      CHECK(ref.intersects(a.data(), b.data(), words) == simd->intersects(a.data(), b.data(), words));
      CHECK(ref.popcount(a.data(), words) == simd->popcount(a.data(), words));
    }
  }
  for (std::size_t n : {3, 64, 100, 256, 300}) {
    const std::size_t stride = (n + 63) / 64;
    auto rows = random_words(n * stride, rng, 1.5 / static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = n; j < stride * 64; ++j) rows[i * stride + j / 64] &= ~(word{1} << (j % 64));
    auto other = rows;
    ref.transitive_closure(rows.data(), n, stride);
    simd->transitive_closure(other.data(), n, stride);
    CHECK(rows == other);
  }
}

TEST_CASE("library results do not depend on the backend") {
  const auto run = [] {
    std::vector<std::size_t> out;
    for (std::size_t n = 1; n <= 6; ++n)
      for (const auto& p : enumerate_posets(n)) {
        out.push_back(width(p));
        out.push_back(down_sets(p).size());
      }
    out.push_back(down_sets(cube(4)).size());
    return out;
  };
  REQUIRE(kernels::select(kernels::Backend::scalar));
  const auto scalar = run();
  if (kernels::select(kernels::Backend::avx2)) CHECK(run() == scalar);
  CHECK(kernels::select(kernels::Backend::scalar));
}
