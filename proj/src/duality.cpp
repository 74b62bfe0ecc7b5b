#include "ordlat/duality.hpp"

#include <algorithm>
#include <string>

#include "ordlat/error.hpp"

namespace ordlat {
namespace {

std::string set_label(const Poset& p, const Bitset& set) {
  std::string s = "{";
  bool first = true;
  set.for_each([&](std::size_t i) {
    if (!first) s += ",";
    s += p.label(i);
    first = false;
  });
  return s + "}";
}

std::string mask_label(const Poset& p, std::uint64_t mask) { return set_label(p, Bitset::from_mask(p.size(), mask)); }

IsoWitness checked_witness(std::vector<std::size_t> forward, const Poset& from, const Poset& to, const char* what) {
  IsoWitness w;
  try {
    w = IsoWitness::from_forward(std::move(forward));
  } catch (const Error&) {
    raise(ErrorKind::internal_error, std::string(what) + " is not a bijection");
  }
  if (!w.verifies(from, to)) raise(ErrorKind::internal_error, std::string(what) + " is not an order isomorphism");
  return w;
}

}  // namespace

bool is_ideal(const DistLattice& l, const Bitset& set) {
  if (set.none() || !l.order().is_down_set(set)) return false;
  bool closed = true;
  set.for_each([&](std::size_t a) {
    set.for_each([&](std::size_t b) { closed = closed && set.test(l.join(a, b)); });
  });
  return closed;
}

bool is_filter(const DistLattice& l, const Bitset& set) {
  if (set.none()) return false;
  bool ok = true;
  set.for_each([&](std::size_t a) { ok = ok && l.order().up(a).subset_of(set); });
  set.for_each([&](std::size_t a) {
    set.for_each([&](std::size_t b) { ok = ok && set.test(l.meet(a, b)); });
  });
  return ok;
}

bool is_prime_ideal(const DistLattice& l, const Bitset& set) {
  if (!is_ideal(l, set) || set.all()) return false;
  const Bitset rest = set.complement();
  bool prime = true;
  rest.for_each([&](std::size_t a) {
    rest.for_each([&](std::size_t b) { prime = prime && !set.test(l.meet(a, b)); });
  });
  return prime;
}

std::vector<PrimeIdeal> prime_ideals(const DistLattice& l, const Caps& caps) {
  check_cap("prime ideal search lattice size", l.size(), caps.max_prime_lattice);
  std::vector<PrimeIdeal> out;
  for (std::uint64_t mask : down_sets(l.order(), caps)) {
    Bitset set = Bitset::from_mask(l.size(), mask);
    if (is_prime_ideal(l, set)) out.push_back({std::move(set)});
  }
  return out;
}

Poset spec(const DistLattice& l, const Caps& caps) {
  const auto primes = prime_ideals(l, caps);
  std::vector<std::string> labels;
  for (const auto& p : primes) labels.push_back(set_label(l.order(), p.members));
  return Poset::from_predicate(
      primes.size(),
      [&](std::size_t i, std::size_t j) { return primes[i].members.subset_of(primes[j].members); },
      std::move(labels));
}

SpectrumMap spec_hom(const LatticeHom& f, const Caps& caps) {
  const DistLattice& l = f.source();
  const DistLattice& k = f.target();
  const auto primes_l = prime_ideals(l, caps);
  const auto primes_k = prime_ideals(k, caps);
  SpectrumMap out{spec(k, caps), spec(l, caps), {}};
  for (const auto& ideal : primes_k) {
    PrimeIdeal pre{Bitset(l.size())};
    for (std::size_t a = 0; a < l.size(); ++a)
      if (ideal.members.test(f(a))) pre.members.set(a);
    const auto it = std::lower_bound(primes_l.begin(), primes_l.end(), pre);
    if (it == primes_l.end() || *it != pre)
      raise(ErrorKind::internal_error, "preimage " + set_label(l.order(), pre.members) + " is not a prime ideal");
    out.map.push_back(static_cast<std::size_t>(it - primes_l.begin()));
  }
  for (std::size_t i = 0; i < out.map.size(); ++i)
    for (std::size_t j = 0; j < out.map.size(); ++j)
      if (out.source.leq(i, j) && !out.target.leq(out.map[i], out.map[j]))
        raise(ErrorKind::internal_error, "spectrum map is not inclusion-preserving");
  return out;
}

// ---------------------------------------------------------------------------

std::size_t DownsetLattice::index_of(std::uint64_t set) const {
  const auto it = std::lower_bound(sets.begin(), sets.end(), set);
  if (it == sets.end() || *it != set) raise(ErrorKind::internal_error, "not a down-set of the underlying space");
  return static_cast<std::size_t>(it - sets.begin());
}

DownsetLattice downset_lattice(const Poset& space, const Caps& caps) {
  if (space.empty()) raise(ErrorKind::degenerate_bounds, "the empty space has a one-element down-set lattice");
  auto sets = down_sets(space, caps);
  const std::size_t n = sets.size();
  check_cap("down-set lattice size", n, caps.max_size);

  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::uint64_t d : sets) labels.push_back(mask_label(space, d));
  Poset order = Poset::from_predicate(
      n, [&](std::size_t i, std::size_t j) { return (sets[i] & ~sets[j]) == 0; }, std::move(labels));

  auto lookup = [&](std::uint64_t d) {
    return static_cast<std::uint32_t>(std::lower_bound(sets.begin(), sets.end(), d) - sets.begin());
  };
  std::vector<std::uint32_t> meet(n * n), join(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      meet[i * n + j] = lookup(sets[i] & sets[j]);
      join[i * n + j] = lookup(sets[i] | sets[j]);
    }
  return {DistLattice::from_tables(std::move(order), std::move(meet), std::move(join)), std::move(sets)};
}

LatticeHom e_hom(const Poset& x, const Poset& y, std::span<const std::size_t> g, const Caps& caps) {
  if (g.size() != x.size()) raise(ErrorKind::invalid_argument, "map is not total on the source space");
  for (std::size_t v : g)
    if (v >= y.size()) raise(ErrorKind::invalid_argument, "map value out of range");
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (x.leq(i, j) && !y.leq(g[i], g[j]))
        raise(ErrorKind::not_order_preserving, x.label(i) + " <= " + x.label(j) + " but images are not ordered");

  auto ex = downset_lattice(x, caps);
  const auto& ds_x = ex.sets;
  const auto ey = downset_lattice(y, caps);
  std::vector<std::size_t> map;
  map.reserve(ey.sets.size());
  for (std::uint64_t d : ey.sets) {
    std::uint64_t pre = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      if ((d >> g[i]) & 1U) pre |= std::uint64_t{1} << i;
    const auto it = std::lower_bound(ds_x.begin(), ds_x.end(), pre);
    if (it == ds_x.end() || *it != pre) raise(ErrorKind::internal_error, "preimage of a down-set is not a down-set");
    map.push_back(static_cast<std::size_t>(it - ds_x.begin()));
  }
  return LatticeHom::make(share(ey.lattice), share(std::move(ex.lattice)), std::move(map));
}

IsoWitness unit_lattice(const DistLattice& l, const Caps& caps) {
  const auto primes = prime_ideals(l, caps);
  const Poset space = spec(l, caps);
  const auto dual = downset_lattice(space, caps);
  std::vector<std::size_t> forward(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    std::uint64_t x_a = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (!primes[i].members.test(a)) x_a |= std::uint64_t{1} << i;
    forward[a] = dual.index_of(x_a);
  }
  return checked_witness(std::move(forward), l.order(), dual.lattice.order(), "a -> X_a");
}

IsoWitness unit_space(const Poset& space, const Caps& caps) {
  const auto dual = downset_lattice(space, caps);
  const auto primes = prime_ideals(dual.lattice, caps);
  const Poset target = spec(dual.lattice, caps);
  std::vector<std::size_t> forward(space.size());
  for (std::size_t x = 0; x < space.size(); ++x) {
    PrimeIdeal ideal{Bitset(dual.sets.size())};
    for (std::size_t d = 0; d < dual.sets.size(); ++d)
      if (!((dual.sets[d] >> x) & 1U)) ideal.members.set(d);
    const auto it = std::lower_bound(primes.begin(), primes.end(), ideal);
    if (it == primes.end() || *it != ideal)
      raise(ErrorKind::internal_error, "{d : " + space.label(x) + " not in d} is not a prime ideal");
    forward[x] = static_cast<std::size_t>(it - primes.begin());
  }
  return checked_witness(std::move(forward), space, target, "x -> {d : x not in d}");
}

}  // namespace ordlat
