#pragma once

// Brute-force reference implementations. They share nothing with the library
// beyond Poset::leq and the lattice tables, and are only usable at small sizes.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ordlat/error.hpp"
#include "ordlat/lattice.hpp"
#include "ordlat/poset.hpp"

namespace oracle {

using ordlat::Poset;

inline std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

// Largest subset with no two distinct elements comparable.
inline std::size_t width(const Poset& p) {
  const std::size_t n = p.size();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((s >> i & 1) && (s >> j & 1) && p.comparable(i, j)) ok = false;
    if (ok) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

// Tries every permutation.
inline bool isomorphic(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return false;
  auto perm = iota(n);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = p.leq(i, j) == q.leq(perm[i], perm[j]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Smallest k such that some k linear extensions (found by filtering all
// permutations) intersect to P.
inline std::size_t dimension(const Poset& p) {
  const std::size_t n = p.size();
  if (n == 0) return 0;
  std::vector<std::vector<std::size_t>> position;
  auto perm = iota(n);
  do {
    std::vector<std::size_t> pos(n);
    for (std::size_t k = 0; k < n; ++k) pos[perm[k]] = k;
    bool ext = true;
    for (std::size_t i = 0; i < n && ext; ++i)
      for (std::size_t j = 0; j < n && ext; ++j)
        if (p.less(i, j) && pos[i] > pos[j]) ext = false;
    if (ext) position.push_back(pos);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto realizes = [&](const std::vector<std::size_t>& chosen) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || p.leq(i, j)) continue;
        bool reversed = false;
        for (std::size_t c : chosen) reversed = reversed || position[c][i] > position[c][j];
        if (!reversed) return false;
      }
    return true;
  };
  for (std::size_t k = 1;; ++k) {
    std::vector<std::size_t> chosen(k, 0);
    // Multisets of size k over the extensions.
    while (true) {
      if (realizes(chosen)) return k;
      std::size_t i = k;
      while (i > 0 && chosen[i - 1] == position.size() - 1) --i;
      if (i == 0) break;
      ++chosen[i - 1];
      for (std::size_t j = i; j < k; ++j) chosen[j] = chosen[i - 1];
    }
  }
}

inline std::size_t downset_count(const Poset& p) {
  const std::size_t n = p.size();
  std::size_t count = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      if (s >> j & 1)
        for (std::size_t i = 0; i < n && ok; ++i)
          if (p.leq(i, j) && !(s >> i & 1)) ok = false;
    count += ok;
  }
  return count;
}

// Subsets of L that are proper, nonempty, down-closed, join-closed and whose
// complement is meet-closed.
inline std::vector<std::uint64_t> prime_ideals(const ordlat::DistLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 1; s + 1 < (std::uint64_t{1} << n); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b) {
        const bool ia = s >> a & 1, ib = s >> b & 1;
        if (ib && l.leq(a, b) && !ia) ok = false;
        if (ia && ib && !(s >> l.join(a, b) & 1)) ok = false;
        if (!ia && !ib && (s >> l.meet(a, b) & 1)) ok = false;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

// Relation code of the matrix under a relabeling, row-major, (0,0) most significant.
inline std::uint64_t code_under(const Poset& p, const std::vector<std::size_t>& perm) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) c = c << 1 | (p.leq(perm[i], perm[j]) ? 1 : 0);
  return c;
}

inline std::uint64_t canonical_code(const Poset& p) {
  auto perm = iota(p.size());
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, code_under(p, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Isomorphism classes of n-element posets, found by filtering every
// reflexive relation for antisymmetry and transitivity.
inline std::set<std::uint64_t> poset_classes(std::size_t n) {
  std::vector<ordlat::Pair> offdiag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::set<std::uint64_t> classes;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << offdiag.size()); ++s) {
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (s >> k & 1) r[offdiag[k].first][offdiag[k].second] = 1;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (i != j && r[i][j] && r[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r[i][j] && r[j][k] && !r[i][k]) ok = false;
      }
    if (!ok) continue;
    const Poset p = Poset::from_predicate(n, [&](std::size_t i, std::size_t j) { return r[i][j] != 0; });
    classes.insert(oracle::canonical_code(p));
  }
  return classes;
}

// Random poset: each pair i < j is related with probability `density`.
inline Poset random_poset(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<ordlat::Pair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  std::vector<std::size_t> perm = iota(n);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& [a, b] : pairs) a = perm[a], b = perm[b];
  return Poset::from_pairs(n, pairs);
}

// Every poset of size <= n_max that is a valid distributive lattice.
inline std::vector<ordlat::DistLattice> lattices_up_to(std::size_t n_max) {
  std::vector<ordlat::DistLattice> out;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (const auto& p : ordlat::enumerate_posets(n)) {
      try {
        out.push_back(ordlat::DistLattice::from_poset(p));
      } catch (const ordlat::Error&) {
      }
    }
  return out;
}

}  // namespace oracle
