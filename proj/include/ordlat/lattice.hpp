#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "ordlat/caps.hpp"
#include "ordlat/poset.hpp"

namespace ordlat {

// Bounded distributive lattice with 0 != 1, carried by a Poset. Only
// obtainable through validating constructors.
class DistLattice {
 public:
  // Meet and join by glb/lub search. Errors, checked in this order:
  // unbounded, degenerate_bounds, not_a_lattice, not_distributive.
  static DistLattice from_poset(const Poset& order);

  // Takes ready-made tables and checks every invariant against `order`.
  // Any failure is reported with the same error kinds as from_poset.
  static DistLattice from_tables(Poset order, std::vector<std::uint32_t> meet, std::vector<std::uint32_t> join);

  const Poset& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  bool leq(std::size_t a, std::size_t b) const { return order_.leq(a, b); }

  bool operator==(const DistLattice&) const = default;

 private:
  DistLattice() = default;
  void validate() const;

  Poset order_;
  std::vector<std::uint32_t> meet_;
  std::vector<std::uint32_t> join_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

using LatticeRef = std::shared_ptr<const DistLattice>;

inline LatticeRef share(DistLattice lattice) { return std::make_shared<const DistLattice>(std::move(lattice)); }

// (0,1)-preserving lattice homomorphism source -> target.
class LatticeHom {
 public:
  // Throws not_homomorphism with the first failing bound or pair.
  static LatticeHom make(LatticeRef source, LatticeRef target, std::vector<std::size_t> map);
  static LatticeHom identity(LatticeRef lattice);

  const DistLattice& source() const { return *source_; }
  const DistLattice& target() const { return *target_; }
  const LatticeRef& source_ref() const { return source_; }
  const LatticeRef& target_ref() const { return target_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t a) const { return map_[a]; }

  // `next` after this.
  LatticeHom then(const LatticeHom& next) const;

 private:
  LatticeHom(LatticeRef source, LatticeRef target, std::vector<std::size_t> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  LatticeRef source_;
  LatticeRef target_;
  std::vector<std::size_t> map_;
};

inline DistLattice lattice_from_poset(const Poset& order) { return DistLattice::from_poset(order); }

inline LatticeHom hom_new(LatticeRef source, LatticeRef target, std::vector<std::size_t> map) {
  return LatticeHom::make(std::move(source), std::move(target), std::move(map));
}

// Every homomorphism source -> target, lexicographic by map.
std::vector<LatticeHom> enumerate_homs(const LatticeRef& source, const LatticeRef& target, const Caps& caps = {});

// Induced subposet of the join-irreducible elements (j != 0, j = a v b
// forces j in {a, b}), in ascending element order.
Poset join_irreducibles(const DistLattice& lattice);

}  // namespace ordlat
