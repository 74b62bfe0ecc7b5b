#include "ordlat/lattice.hpp"

#include <functional>
#include <string>

#include "ordlat/error.hpp"

namespace ordlat {
namespace {

std::string name(const Poset& p, std::size_t i) { return p.label(i) + "#" + std::to_string(i); }

// Greatest element of `set` (one whose down-set contains all of it), or n.
std::size_t greatest(const Poset& p, const Bitset& set) {
  std::size_t found = p.size();
  set.for_each([&](std::size_t c) {
    if (found == p.size() && set.subset_of(p.down(c))) found = c;
  });
  return found;
}

std::size_t least(const Poset& p, const Bitset& set) {
  std::size_t found = p.size();
  set.for_each([&](std::size_t c) {
    if (found == p.size() && set.subset_of(p.up(c))) found = c;
  });
  return found;
}

void check_bounds(const Poset& p) {
  const Bitset all = Bitset::full(p.size());
  if (p.empty() || least(p, all) == p.size() || greatest(p, all) == p.size())
    raise(ErrorKind::unbounded, "poset has no least or no greatest element");
  if (p.size() == 1) raise(ErrorKind::degenerate_bounds, "0 = 1 in a one-element poset");
}

}  // namespace

DistLattice DistLattice::from_poset(const Poset& order) {
  check_bounds(order);
  const std::size_t n = order.size();
  DistLattice l;
  l.order_ = order;
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      const std::size_t m = greatest(order, order.down(a) & order.down(b));
      const std::size_t j = least(order, order.up(a) & order.up(b));
      if (m == n || j == n)
        raise(ErrorKind::not_a_lattice, std::string(m == n ? "no greatest lower bound" : "no least upper bound") +
                                            " for " + name(order, a) + ", " + name(order, b));
      l.meet_[a * n + b] = l.meet_[b * n + a] = static_cast<std::uint32_t>(m);
      l.join_[a * n + b] = l.join_[b * n + a] = static_cast<std::uint32_t>(j);
    }
  l.bottom_ = least(order, Bitset::full(n));
  l.top_ = greatest(order, Bitset::full(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          raise(ErrorKind::not_distributive, "a^(bvc) != (a^b)v(a^c) for (a,b,c) = (" + name(order, a) + ", " +
                                                 name(order, b) + ", " + name(order, c) + ")");
  return l;
}

DistLattice DistLattice::from_tables(Poset order, std::vector<std::uint32_t> meet, std::vector<std::uint32_t> join) {
  const std::size_t n = order.size();
  if (meet.size() != n * n || join.size() != n * n) raise(ErrorKind::invalid_argument, "table size mismatch");
  check_bounds(order);
  DistLattice l;
  l.order_ = std::move(order);
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  l.bottom_ = least(l.order_, Bitset::full(n));
  l.top_ = greatest(l.order_, Bitset::full(n));
  l.validate();
  return l;
}

void DistLattice::validate() const {
  const std::size_t n = size();
  const Poset& p = order_;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t m = meet(a, b), j = join(a, b);
      if (m >= n || j >= n) raise(ErrorKind::not_a_lattice, "table entry out of range");
      const Bitset lower = p.down(a) & p.down(b);
      const Bitset upper = p.up(a) & p.up(b);
      if (!lower.test(m) || !lower.subset_of(p.down(m)))
        raise(ErrorKind::not_a_lattice, "meet table is not the glb at " + name(p, a) + ", " + name(p, b));
      if (!upper.test(j) || !upper.subset_of(p.up(j)))
        raise(ErrorKind::not_a_lattice, "join table is not the lub at " + name(p, a) + ", " + name(p, b));
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c)))
          raise(ErrorKind::not_distributive, "a^(bvc) != (a^b)v(a^c) for (a,b,c) = (" + name(p, a) + ", " +
                                                 name(p, b) + ", " + name(p, c) + ")");
}

// ---------------------------------------------------------------------------

LatticeHom LatticeHom::make(LatticeRef source, LatticeRef target, std::vector<std::size_t> map) {
  const DistLattice& l = *source;
  const DistLattice& k = *target;
  if (map.size() != l.size()) raise(ErrorKind::invalid_argument, "map is not total on the source carrier");
  for (std::size_t x : map)
    if (x >= k.size()) raise(ErrorKind::invalid_argument, "map value out of range");
  if (map[l.bottom()] != k.bottom()) raise(ErrorKind::not_homomorphism, "bottom not preserved");
  if (map[l.top()] != k.top()) raise(ErrorKind::not_homomorphism, "top not preserved");
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (map[l.meet(a, b)] != k.meet(map[a], map[b]))
        raise(ErrorKind::not_homomorphism, "meet not preserved at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (map[l.join(a, b)] != k.join(map[a], map[b]))
        raise(ErrorKind::not_homomorphism, "join not preserved at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
  return LatticeHom(std::move(source), std::move(target), std::move(map));
}

LatticeHom LatticeHom::identity(LatticeRef lattice) {
  std::vector<std::size_t> map(lattice->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return LatticeHom(lattice, lattice, std::move(map));
}

LatticeHom LatticeHom::then(const LatticeHom& next) const {
  if (!(target() == next.source())) raise(ErrorKind::invalid_argument, "composition of non-matching homomorphisms");
  std::vector<std::size_t> map(map_.size());
  for (std::size_t a = 0; a < map.size(); ++a) map[a] = next(map_[a]);
  return make(source_, next.target_, std::move(map));
}

std::vector<LatticeHom> enumerate_homs(const LatticeRef& source, const LatticeRef& target, const Caps& caps) {
  const DistLattice& l = *source;
  const DistLattice& k = *target;
  const std::size_t n = l.size();
  check_cap("homomorphism source size", n, caps.max_hom_source);

  std::vector<std::size_t> map(n, k.size());
  map[l.bottom()] = k.bottom();
  map[l.top()] = k.top();
  std::vector<LatticeHom> out;

  // Assign free elements in index order; check every pair whose images and
  // whose meet/join images are all known.
  auto consistent = [&]() {
    for (std::size_t a = 0; a < n; ++a) {
      if (map[a] == k.size()) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (map[b] == k.size()) continue;
        const std::size_t m = map[l.meet(a, b)], j = map[l.join(a, b)];
        if (m != k.size() && m != k.meet(map[a], map[b])) return false;
        if (j != k.size() && j != k.join(map[a], map[b])) return false;
      }
    }
    return true;
  };
  std::function<void(std::size_t)> assign = [&](std::size_t a) {
    if (a == n) {
      out.push_back(LatticeHom::make(source, target, map));
      return;
    }
    if (a == l.bottom() || a == l.top()) {
      assign(a + 1);
      return;
    }
    for (std::size_t v = 0; v < k.size(); ++v) {
      map[a] = v;
      if (consistent()) assign(a + 1);
    }
    map[a] = k.size();
  };
  if (consistent()) assign(0);
  return out;
}

Poset join_irreducibles(const DistLattice& lattice) {
  std::vector<std::size_t> elements;
  for (std::size_t j = 0; j < lattice.size(); ++j) {
    if (j == lattice.bottom()) continue;
    bool irreducible = true;
    for (std::size_t a = 0; a < lattice.size() && irreducible; ++a)
      for (std::size_t b = 0; b < lattice.size() && irreducible; ++b)
        if (lattice.join(a, b) == j && a != j && b != j) irreducible = false;
    if (irreducible) elements.push_back(j);
  }
  return lattice.order().induced(elements);
}

}  // namespace ordlat
