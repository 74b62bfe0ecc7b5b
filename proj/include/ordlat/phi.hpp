#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordlat/caps.hpp"
#include "ordlat/duality.hpp"
#include "ordlat/lattice.hpp"
#include "ordlat/poset.hpp"

// Phi sends a poset to its own ordering relation {(a,b) : a <= b}, ordered
// coordinatewise as a subposet of P x P; on lattices it is a (0,1)-sublattice
// of L x L.
namespace ordlat {

// Element i of Phi(P) is the pair pairs[i]; pairs are in lexicographic order.
struct PhiCarrierMap {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t base_size = 0;
  std::vector<Pair> pairs;
  std::vector<std::size_t> index;  // base_size x base_size, npos where a !<= b

  std::size_t size() const { return pairs.size(); }
  std::size_t index_of(std::size_t a, std::size_t b) const { return index[a * base_size + b]; }
};

struct PhiPoset {
  Poset poset;
  PhiCarrierMap carrier;
};

struct PhiLattice {
  DistLattice lattice;
  PhiCarrierMap carrier;
};

PhiCarrierMap phi_carrier(const Poset& p);

// Labels are "(a,b)" built from the labels of P.
PhiPoset phi_poset(const Poset& p, const Caps& caps = {});
PhiLattice phi_lattice(const DistLattice& lattice, const Caps& caps = {});
// (a, b) -> (f(a), f(b)) between phi_lattice of source and target.
LatticeHom phi_hom(const LatticeHom& f, const Caps& caps = {});

// {(I x I) n Phi(L)} u {(I x L) n Phi(L)} over the prime ideals I of L,
// as subsets of the Phi(L) carrier; deduplicated and ascending.
std::vector<PrimeIdeal> primes_of_phi_closed_form(const DistLattice& lattice, const Caps& caps = {});

struct CorollaryReport {
  bool holds = false;
  std::size_t lattice_primes = 0;
  std::size_t closed_form_primes = 0;
  std::size_t brute_force_primes = 0;
  std::string counterexample;  // empty when holds
};

// Compares the closed form against brute force on Phi(L) and checks, for
// every brute-force prime ideal S with projections S1, S2: S = (S1 x S2) n
// Phi(L); S1 prime; S2 prime or L; S2 in {S1, L}.
CorollaryReport verify_corollary(const DistLattice& lattice, const Caps& caps = {});

struct Lemma51 {
  DownsetLattice base;           // E(X)
  PhiLattice phi_of_base;        // Phi(E(X))
  Poset doubled;                 // X x 2, (x, i) at index 2x + i
  DownsetLattice doubled_dual;   // E(X x 2)
  IsoWitness witness;            // Phi(E(X)) -> E(X x 2): (d, e) -> d x {1} u e x {0}
};

// Builds both maps of the isomorphism Phi(E(X)) = E(X x 2), checks that they
// are monotone and mutually inverse, and returns them as a witness.
Lemma51 lemma51(const Poset& space, const Caps& caps = {});
inline IsoWitness lemma51_iso(const Poset& space, const Caps& caps = {}) { return lemma51(space, caps).witness; }

// P = Y x 2 with bottom layer B = Y x {0} and top layer matching(B).
struct FactorWitness {
  std::vector<std::size_t> bottom_layer;  // ascending elements of P
  std::vector<std::size_t> matching;      // matching[k] is the top partner of bottom_layer[k]
  Poset factor;                           // induced(bottom_layer)
  IsoWitness assembled;                   // product(factor, chain(2)) -> P

  // Rechecks every invariant against P.
  bool verifies(const Poset& p) const;
};

// First factorization in search order: bottom layers are half-size
// down-sets in ascending mask order; matchings are built element by element
// taking the smallest admissible partner first.
std::optional<FactorWitness> factor_by_two(const Poset& p, const Caps& caps = {});

struct ImageWitness {
  DistLattice k;          // E(Y)
  FactorWitness factor;   // spec(L) = Y x 2
  IsoWitness iso;         // Phi(K) -> L
};

struct ImageResult {
  std::optional<ImageWitness> witness;
  std::size_t spectrum_size = 0;
  std::string reason;  // why L is not in the image; empty otherwise

  bool in_image() const { return witness.has_value(); }
};

// Decides whether L = Phi(K) for some K, and if so constructs K = E(Y) from a
// factorization spec(L) = Y x 2 together with an explicit Phi(K) -> L witness.
ImageResult in_image_of_phi(const DistLattice& lattice, const Caps& caps = {});

enum class FixedPointMode { lattices, posets, connected_posets };

struct FixedPointHit {
  std::size_t size = 0;
  std::size_t index = 0;     // position within enumerate_posets(size)
  std::uint64_t code = 0;    // canonical relation code
  bool antichain = false;
  IsoWitness witness;        // Phi(P) -> P
};

struct FixedPointReport {
  FixedPointMode mode = FixedPointMode::posets;
  std::size_t n_min = 1;
  std::size_t n_max = 0;
  std::vector<std::size_t> scanned;  // per size n_min..n_max, after mode filtering
  std::vector<FixedPointHit> hits;
  // posets: hits are exactly the antichains; lattices: no hits;
  // connected posets: no hit with more than one element.
  bool expectation_holds = false;
};

FixedPointReport find_fixed_points(std::size_t n_max, FixedPointMode mode, const Caps& caps = {},
                                   std::size_t n_min = 1);

struct ShiftReport {
  std::size_t n = 0;
  std::size_t free_lattice_size = 0;      // |E(cube n)|
  std::size_t comparable_pairs = 0;       // related pairs of E(cube n) = |Phi(E(cube n))|
  std::size_t next_free_lattice_size = 0; // |E(cube n+1)| by down-set enumeration
  std::vector<std::size_t> shift;         // cube(n+1) -> cube(n) x 2, y -> (ls(y), y(0))
  IsoWitness witness;                     // Phi(E(cube n)) -> E(cube n+1)
  bool holds = false;
};

ShiftReport free_lattice_shift_check(std::size_t n, const Caps& caps = {});

struct DimensionRow {
  std::string id;      // "<size>-<index>" within enumerate_posets(size)
  std::uint64_t code = 0;
  std::size_t size = 0;
  std::size_t phi_size = 0;
  std::optional<std::size_t> dim;        // nullopt: skipped by cap
  std::optional<std::size_t> phi_dim;
  std::size_t width = 0;
  std::size_t phi_width = 0;
};

std::vector<DimensionRow> dimension_report(std::size_t n_max, const Caps& caps = {});

}  // namespace ordlat
