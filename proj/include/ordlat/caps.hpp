#pragma once

#include <cstddef>

namespace ordlat {

// Size limits for every exhaustive operation. Exceeding one raises
// ErrorKind::cap_exceeded; nothing is truncated silently.
struct Caps {
  // Elements of any constructed poset (products, Phi carriers, down-set lattices).
  std::size_t max_size = 256;
  // Elements of cube n.
  std::size_t max_cube_elements = 20;
  // Elements of a poset whose down-sets are enumerated. Hard limit 64.
  std::size_t max_downset_poset = 24;
  // Number of down-sets produced by one enumeration.
  std::size_t max_downset_count = std::size_t{1} << 20;
  // Lattice size for brute-force prime ideal search.
  std::size_t max_prime_lattice = 20;
  // Poset size for order dimension.
  std::size_t max_dim_size = 10;
  // Source lattice size for homomorphism enumeration.
  std::size_t max_hom_source = 6;
  // Poset size for exhaustive enumeration up to isomorphism.
  std::size_t max_enumerate = 7;
  // Worker threads for exhaustive scans; results never depend on it.
  std::size_t threads = 1;
};

}  // namespace ordlat
