#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ordlat/bitset.hpp"
#include "ordlat/caps.hpp"
#include "ordlat/lattice.hpp"
#include "ordlat/poset.hpp"

// Finite Priestley duality. A finite Priestley space carries the discrete
// topology, so spaces are plain Posets and "clopen down-set" means down-set.
namespace ordlat {

// Members of a prime ideal of some lattice, indexed by that lattice's carrier.
struct PrimeIdeal {
  Bitset members;

  bool operator==(const PrimeIdeal&) const = default;
  auto operator<=>(const PrimeIdeal& other) const { return members <=> other.members; }
};

bool is_ideal(const DistLattice& lattice, const Bitset& set);
bool is_filter(const DistLattice& lattice, const Bitset& set);
bool is_prime_ideal(const DistLattice& lattice, const Bitset& set);

// Every prime ideal, found by filtering the down-sets of the lattice order;
// ascending by member bitmask.
std::vector<PrimeIdeal> prime_ideals(const DistLattice& lattice, const Caps& caps = {});

// Prime ideals ordered by inclusion, element i being prime_ideals(lattice)[i].
Poset spec(const DistLattice& lattice, const Caps& caps = {});

// Inclusion-preserving map between spectra induced by a homomorphism f: L -> K.
// Runs contravariantly: source is spec(K), target is spec(L).
struct SpectrumMap {
  Poset source;
  Poset target;
  std::vector<std::size_t> map;
};

SpectrumMap spec_hom(const LatticeHom& f, const Caps& caps = {});

// Down-set lattice of a poset together with the down-set behind each element:
// element i is sets[i], and sets is down_sets(space) in ascending order.
struct DownsetLattice {
  DistLattice lattice;
  std::vector<std::uint64_t> sets;

  // Element index of a down-set mask; throws internal_error if absent.
  std::size_t index_of(std::uint64_t set) const;
};

DownsetLattice downset_lattice(const Poset& space, const Caps& caps = {});
inline DistLattice clopen_downset_lattice(const Poset& space, const Caps& caps = {}) {
  return downset_lattice(space, caps).lattice;
}

// For order-preserving g: X -> Y, the homomorphism E(Y) -> E(X), d -> g^-1(d).
LatticeHom e_hom(const Poset& x, const Poset& y, std::span<const std::size_t> g, const Caps& caps = {});

// a -> X_a = {I : a not in I}, as a witness L -> clopen_downset_lattice(spec(L)).
IsoWitness unit_lattice(const DistLattice& lattice, const Caps& caps = {});

// x -> {d : x not in d}, as a witness X -> spec(clopen_downset_lattice(X)).
IsoWitness unit_space(const Poset& space, const Caps& caps = {});

}  // namespace ordlat
