#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordlat/bitset.hpp"
#include "ordlat/caps.hpp"

namespace ordlat {

using Pair = std::pair<std::size_t, std::size_t>;

// Finite partial order on {0, ..., size-1}. The relation is always stored
// reflexively and transitively closed, once as up-rows and once as
// down-rows. Labels are for display and serialization only.
class Poset {
 public:
  Poset() = default;

  // Reflexive-transitive closure of `pairs`. Throws antisymmetry_violation
  // when the closure relates two distinct elements both ways.
  static Poset from_pairs(std::size_t size, std::span<const Pair> pairs,
                          std::vector<std::string> labels = {});

  // Closure of the relation given by `leq(i, j)`; same checks as from_pairs.
  static Poset from_predicate(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq,
                              std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  bool empty() const { return up_.empty(); }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  // {j : i <= j}
  const Bitset& up(std::size_t i) const { return up_[i]; }
  // {j : j <= i}
  const Bitset& down(std::size_t i) const { return down_[i]; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  Poset with_labels(std::vector<std::string> labels) const;

  // Number of pairs (i, j) with i <= j, diagonal included.
  std::size_t related_pairs() const;

  // Hasse diagram edges (i, j): i < j with nothing strictly between, sorted.
  std::vector<Pair> covers() const;

  // Induced subposet on `elements`, renumbered in the given order.
  Poset induced(std::span<const std::size_t> elements) const;

  bool is_chain() const;
  bool is_antichain() const;
  bool is_down_set(const Bitset& set) const;

  // Same size, same relation, same labels.
  bool operator==(const Poset& other) const = default;
  // Same size and relation; labels ignored.
  bool same_order(const Poset& other) const { return up_ == other.up_; }

 private:
  static Poset from_rows(std::size_t size, std::vector<kernels::word> rows, std::size_t stride,
                         std::vector<std::string> labels);

  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<std::string> labels_;
};

// Bijection certifying P is order-isomorphic to Q.
struct IsoWitness {
  std::vector<std::size_t> forward;   // P -> Q
  std::vector<std::size_t> backward;  // Q -> P

  static IsoWitness from_forward(std::vector<std::size_t> forward);
  static IsoWitness identity(std::size_t n);

  IsoWitness inverse() const { return {backward, forward}; }
  // `next` after this: P -> Q -> R.
  IsoWitness then(const IsoWitness& next) const;

  // Mutually inverse bijections, order-preserving and order-reflecting.
  bool verifies(const Poset& p, const Poset& q) const;

  bool operator==(const IsoWitness&) const = default;
};

enum class Shape { chain, antichain, cube };

Poset standard_poset(Shape shape, std::size_t n, const Caps& caps = {});
Poset chain(std::size_t n);
Poset antichain(std::size_t n);
// n-fold product of chain 2. Element index is the bit pattern, the first
// coordinate in the most significant bit, so cube(n) == product(cube(n-1), chain(2)).
Poset cube(std::size_t n, const Caps& caps = {});

// Row-major: (p, q) has index p * |Q| + q.
Poset product(const Poset& p, const Poset& q, const Caps& caps = {});
// P occupies indices [0, |P|), Q follows.
Poset disjoint_union(const Poset& p, const Poset& q);

// All down-sets as bitmasks (bit i = element i), ascending.
std::vector<std::uint64_t> down_sets(const Poset& p, const Caps& caps = {});

// First witness in lexicographic order of the forward map, or nullopt.
std::optional<IsoWitness> is_isomorphic(const Poset& p, const Poset& q);

bool is_connected(const Poset& p);

// Maximum antichain size, via Dilworth and bipartite matching.
std::size_t width(const Poset& p);

// One linear extension: elements sorted by down-set size, ties by index.
std::vector<std::size_t> linear_extension(const Poset& p);

// All linear extensions, each a sequence of elements bottom to top, in
// lexicographic order.
std::vector<std::vector<std::size_t>> linear_extensions(const Poset& p, std::size_t limit);

std::size_t order_dimension(const Poset& p, const Caps& caps = {});

// Row-major relation matrix, most significant bit first (entry (0,0) is bit
// n*n-1). Requires size <= 8.
std::uint64_t relation_code(const Poset& p);
// Minimum relation_code over all relabelings, with the relabeling achieving
// it (canonical position -> original element).
std::pair<std::uint64_t, std::vector<std::size_t>> canonical_code(const Poset& p);
Poset canonical_form(const Poset& p);

// One representative per isomorphism class of n-element posets, each in
// canonical form, ascending by canonical code.
std::vector<Poset> enumerate_posets(std::size_t n, const Caps& caps = {});

}  // namespace ordlat
