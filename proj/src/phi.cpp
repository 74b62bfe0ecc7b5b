#include "ordlat/phi.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <iterator>

#include "ordlat/error.hpp"
#include "parallel.hpp"

namespace ordlat {
namespace {

std::string pair_list(const PhiCarrierMap& carrier, const Poset& base, const Bitset& set) {
  std::string s = "{";
  bool first = true;
  set.for_each([&](std::size_t i) {
    if (!first) s += ",";
    s += "(" + base.label(carrier.pairs[i].first) + "," + base.label(carrier.pairs[i].second) + ")";
    first = false;
  });
  return s + "}";
}

std::string element_list(const Poset& base, const Bitset& set) {
  std::string s = "{";
  bool first = true;
  set.for_each([&](std::size_t i) {
    if (!first) s += ",";
    s += base.label(i);
    first = false;
  });
  return s + "}";
}

std::vector<PrimeIdeal> closed_form(const DistLattice& l, const PhiLattice& phi, const std::vector<PrimeIdeal>& primes) {
  std::vector<PrimeIdeal> out;
  for (const auto& ideal : primes) {
    PrimeIdeal both{Bitset(phi.carrier.size())};
    PrimeIdeal first{Bitset(phi.carrier.size())};
    for (std::size_t i = 0; i < phi.carrier.size(); ++i) {
      const auto [a, b] = phi.carrier.pairs[i];
      if (!ideal.members.test(a)) continue;
      first.members.set(i);
      if (ideal.members.test(b)) both.members.set(i);
    }
    out.push_back(std::move(both));
    out.push_back(std::move(first));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (const auto& s : out)
    if (!is_prime_ideal(phi.lattice, s.members))
      raise(ErrorKind::internal_error,
            "closed-form member " + pair_list(phi.carrier, l.order(), s.members) + " is not a prime ideal");
  return out;
}

}  // namespace

PhiCarrierMap phi_carrier(const Poset& p) {
  PhiCarrierMap carrier;
  carrier.base_size = p.size();
  carrier.index.assign(p.size() * p.size(), PhiCarrierMap::npos);
  for (std::size_t a = 0; a < p.size(); ++a)
    p.up(a).for_each([&](std::size_t b) {
      carrier.index[a * p.size() + b] = carrier.pairs.size();
      carrier.pairs.emplace_back(a, b);
    });
  return carrier;
}

PhiPoset phi_poset(const Poset& p, const Caps& caps) {
  PhiCarrierMap carrier = phi_carrier(p);
  check_cap("Phi carrier size", carrier.size(), caps.max_size);
  std::vector<std::string> labels;
  labels.reserve(carrier.size());
  for (const auto& [a, b] : carrier.pairs) labels.push_back("(" + p.label(a) + "," + p.label(b) + ")");
  const auto& pairs = carrier.pairs;
  Poset order = Poset::from_predicate(
      carrier.size(),
      [&](std::size_t i, std::size_t j) {
        return p.leq(pairs[i].first, pairs[j].first) && p.leq(pairs[i].second, pairs[j].second);
      },
      std::move(labels));
  return {std::move(order), std::move(carrier)};
}

PhiLattice phi_lattice(const DistLattice& l, const Caps& caps) {
  PhiPoset phi = phi_poset(l.order(), caps);
  const auto& carrier = phi.carrier;
  const std::size_t n = carrier.size();
  std::vector<std::uint32_t> meet(n * n), join(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto [a, b] = carrier.pairs[i];
      const auto [c, d] = carrier.pairs[j];
      const std::size_t m = carrier.index_of(l.meet(a, c), l.meet(b, d));
      const std::size_t s = carrier.index_of(l.join(a, c), l.join(b, d));
      if (m == PhiCarrierMap::npos || s == PhiCarrierMap::npos)
        raise(ErrorKind::internal_error, "Phi(L) is not closed under componentwise meet and join");
      meet[i * n + j] = static_cast<std::uint32_t>(m);
      join[i * n + j] = static_cast<std::uint32_t>(s);
    }
  DistLattice lattice = DistLattice::from_tables(std::move(phi.poset), std::move(meet), std::move(join));
  if (lattice.bottom() != carrier.index_of(l.bottom(), l.bottom()) || lattice.top() != carrier.index_of(l.top(), l.top()))
    raise(ErrorKind::internal_error, "Phi(L) bounds are not (0,0) and (1,1)");
  return {std::move(lattice), std::move(phi.carrier)};
}

LatticeHom phi_hom(const LatticeHom& f, const Caps& caps) {
  PhiLattice source = phi_lattice(f.source(), caps);
  PhiLattice target = phi_lattice(f.target(), caps);
  std::vector<std::size_t> map(source.carrier.size());
  for (std::size_t i = 0; i < map.size(); ++i) {
    const auto [a, b] = source.carrier.pairs[i];
    map[i] = target.carrier.index_of(f(a), f(b));
    if (map[i] == PhiCarrierMap::npos) raise(ErrorKind::internal_error, "Phi(f) leaves Phi(K)");
  }
  return LatticeHom::make(share(std::move(source.lattice)), share(std::move(target.lattice)), std::move(map));
}

std::vector<PrimeIdeal> primes_of_phi_closed_form(const DistLattice& l, const Caps& caps) {
  const auto primes = prime_ideals(l, caps);
  return closed_form(l, phi_lattice(l, caps), primes);
}

CorollaryReport verify_corollary(const DistLattice& l, const Caps& caps) {
  CorollaryReport report;
  const auto primes = prime_ideals(l, caps);
  const PhiLattice phi = phi_lattice(l, caps);
  const auto closed = closed_form(l, phi, primes);
  const auto brute = prime_ideals(phi.lattice, caps);
  report.lattice_primes = primes.size();
  report.closed_form_primes = closed.size();
  report.brute_force_primes = brute.size();

  auto fail = [&](std::string why) {
    report.holds = false;
    report.counterexample = std::move(why);
    return report;
  };

  if (closed != brute) {
    std::vector<PrimeIdeal> only_closed, only_brute;
    std::set_difference(closed.begin(), closed.end(), brute.begin(), brute.end(), std::back_inserter(only_closed));
    std::set_difference(brute.begin(), brute.end(), closed.begin(), closed.end(), std::back_inserter(only_brute));
    if (!only_brute.empty())
      return fail("prime ideal " + pair_list(phi.carrier, l.order(), only_brute.front().members) +
                  " of Phi(L) is missing from the closed form");
    return fail("closed-form set " + pair_list(phi.carrier, l.order(), only_closed.front().members) +
                " is not found by brute force");
  }

  const Bitset everything = Bitset::full(l.size());
  for (const auto& s : brute) {
    Bitset first(l.size()), second(l.size());
    s.members.for_each([&](std::size_t i) {
      first.set(phi.carrier.pairs[i].first);
      second.set(phi.carrier.pairs[i].second);
    });
    const std::string where = "S = " + pair_list(phi.carrier, l.order(), s.members) + ", S1 = " +
                              element_list(l.order(), first) + ", S2 = " + element_list(l.order(), second);
    Bitset rebuilt(phi.carrier.size());
    for (std::size_t i = 0; i < phi.carrier.size(); ++i)
      if (first.test(phi.carrier.pairs[i].first) && second.test(phi.carrier.pairs[i].second)) rebuilt.set(i);
    if (rebuilt != s.members) return fail("S != (S1 x S2) n Phi(L): " + where);
    if (!is_prime_ideal(l, first)) return fail("S1 is not a prime ideal: " + where);
    if (second != everything && !is_prime_ideal(l, second)) return fail("S2 is neither prime nor L: " + where);
    if (second != first && second != everything) return fail("S2 not in {S1, L}: " + where);
  }
  report.holds = true;
  return report;
}

// ---------------------------------------------------------------------------

Lemma51 lemma51(const Poset& space, const Caps& caps) {
  DownsetLattice base = downset_lattice(space, caps);
  PhiLattice phi = phi_lattice(base.lattice, caps);
  Poset doubled = product(space, chain(2), caps);
  DownsetLattice doubled_dual = downset_lattice(doubled, caps);
  const std::size_t n = phi.carrier.size();
  if (doubled_dual.sets.size() != n)
    raise(ErrorKind::internal_error, "|Phi(E(X))| = " + std::to_string(n) +
                                         " but |E(X x 2)| = " + std::to_string(doubled_dual.sets.size()));

  // (d, e) -> d x {1} u e x {0}
  std::vector<std::size_t> forward(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t d = base.sets[phi.carrier.pairs[i].first];
    const std::uint64_t e = base.sets[phi.carrier.pairs[i].second];
    std::uint64_t c = 0;
    for (std::size_t x = 0; x < space.size(); ++x) {
      if ((d >> x) & 1U) c |= std::uint64_t{1} << (2 * x + 1);
      if ((e >> x) & 1U) c |= std::uint64_t{1} << (2 * x);
    }
    forward[i] = doubled_dual.index_of(c);
  }

  // c -> (c_1, c_0), c_i = {x : (x, i) in c}
  std::vector<std::size_t> backward(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::uint64_t c = doubled_dual.sets[k];
    std::uint64_t c0 = 0, c1 = 0;
    for (std::size_t x = 0; x < space.size(); ++x) {
      if ((c >> (2 * x)) & 1U) c0 |= std::uint64_t{1} << x;
      if ((c >> (2 * x + 1)) & 1U) c1 |= std::uint64_t{1} << x;
    }
    backward[k] = phi.carrier.index_of(base.index_of(c1), base.index_of(c0));
    if (backward[k] == PhiCarrierMap::npos) raise(ErrorKind::internal_error, "c_1 is not contained in c_0");
  }

  const Poset& from = phi.lattice.order();
  const Poset& to = doubled_dual.lattice.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (backward[forward[i]] != i || forward[backward[i]] != i)
      raise(ErrorKind::internal_error, "the two maps are not mutually inverse");
    for (std::size_t j = 0; j < n; ++j) {
      if (from.leq(i, j) && !to.leq(forward[i], forward[j])) raise(ErrorKind::internal_error, "forward map not monotone");
      if (to.leq(i, j) && !from.leq(backward[i], backward[j])) raise(ErrorKind::internal_error, "backward map not monotone");
    }
  }
  IsoWitness witness{std::move(forward), std::move(backward)};
  return {std::move(base), std::move(phi), std::move(doubled), std::move(doubled_dual), std::move(witness)};
}

// ---------------------------------------------------------------------------

bool FactorWitness::verifies(const Poset& p) const {
  const std::size_t n = p.size();
  const std::size_t half = bottom_layer.size();
  if (n == 0 || 2 * half != n || matching.size() != half) return false;
  Bitset bottom(n), top(n);
  for (std::size_t k = 0; k < half; ++k) {
    if (bottom_layer[k] >= n || matching[k] >= n) return false;
    if (k > 0 && bottom_layer[k - 1] >= bottom_layer[k]) return false;
    bottom.set(bottom_layer[k]);
    top.set(matching[k]);
  }
  if (bottom.count() != half || top != bottom.complement() || !p.is_down_set(bottom)) return false;
  if (!factor.same_order(p.induced(bottom_layer))) return false;
  for (std::size_t a = 0; a < half; ++a)
    for (std::size_t b = 0; b < half; ++b) {
      if (p.leq(bottom_layer[a], bottom_layer[b]) != p.leq(matching[a], matching[b])) return false;
      if (p.leq(bottom_layer[a], matching[b]) != p.leq(bottom_layer[a], bottom_layer[b])) return false;
    }
  if (assembled.forward.size() != n) return false;
  for (std::size_t k = 0; k < half; ++k)
    if (assembled.forward[2 * k] != bottom_layer[k] || assembled.forward[2 * k + 1] != matching[k]) return false;
  Caps roomy;
  roomy.max_size = n;
  return assembled.verifies(product(factor, chain(2), roomy), p);
}

std::optional<FactorWitness> factor_by_two(const Poset& p, const Caps& caps) {
  const std::size_t n = p.size();
  if (n == 0 || n % 2 != 0) return std::nullopt;
  const std::size_t half = n / 2;

  for (std::uint64_t mask : down_sets(p, caps)) {
    if (static_cast<std::size_t>(std::popcount(mask)) != half) continue;
    std::vector<std::size_t> bottom, top;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1U ? bottom : top).push_back(i);

    std::vector<std::size_t> matching(half);
    std::vector<char> used(n, 0);
    // In Y x 2 the top copy of b sits above exactly twice as many elements as b.
    auto admissible = [&](std::size_t k, std::size_t u) {
      if (p.down(u).count() != 2 * p.down(bottom[k]).count()) return false;
      if (!p.leq(bottom[k], u)) return false;
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t b = bottom[j], m = matching[j];
        if (p.leq(b, bottom[k]) != p.leq(m, u) || p.leq(bottom[k], b) != p.leq(u, m)) return false;
        if (p.leq(b, u) != p.leq(b, bottom[k]) || p.leq(bottom[k], m) != p.leq(bottom[k], b)) return false;
      }
      return true;
    };
    std::function<bool(std::size_t)> extend = [&](std::size_t k) -> bool {
      if (k == half) return true;
      for (std::size_t u : top) {
        if (used[u] || !admissible(k, u)) continue;
        matching[k] = u;
        used[u] = 1;
        if (extend(k + 1)) return true;
        used[u] = 0;
      }
      return false;
    };
    if (!extend(0)) continue;

    FactorWitness w;
    w.bottom_layer = bottom;
    w.matching = matching;
    w.factor = p.induced(bottom);
    std::vector<std::size_t> forward(n);
    for (std::size_t k = 0; k < half; ++k) {
      forward[2 * k] = bottom[k];
      forward[2 * k + 1] = matching[k];
    }
    w.assembled = IsoWitness::from_forward(std::move(forward));
    if (!w.verifies(p)) raise(ErrorKind::internal_error, "factor witness failed its own check");
    return w;
  }
  return std::nullopt;
}

ImageResult in_image_of_phi(const DistLattice& l, const Caps& caps) {
  ImageResult result;
  const Poset space = spec(l, caps);
  result.spectrum_size = space.size();
  if (space.size() % 2 != 0) {
    result.reason = "spectrum has odd size " + std::to_string(space.size());
    return result;
  }
  auto factor = factor_by_two(space, caps);
  if (!factor) {
    result.reason = "no factorization Y x 2 of the " + std::to_string(space.size()) + "-element spectrum";
    return result;
  }

  // Phi(E(Y)) -> E(Y x 2) -> E(spec L) -> L
  Lemma51 lem = lemma51(factor->factor, caps);
  const LatticeHom transport = e_hom(space, lem.doubled, factor->assembled.backward, caps);
  IsoWitness via_space;
  try {
    via_space = IsoWitness::from_forward(transport.map());
  } catch (const Error&) {
    raise(ErrorKind::internal_error, "E of the factor isomorphism is not bijective");
  }
  const IsoWitness unit = unit_lattice(l, caps);
  IsoWitness iso = lem.witness.then(via_space).then(unit.inverse());
  if (!iso.verifies(lem.phi_of_base.lattice.order(), l.order()))
    raise(ErrorKind::internal_error, "composed Phi(K) -> L map is not an isomorphism");

  result.witness = ImageWitness{std::move(lem.base.lattice), std::move(*factor), std::move(iso)};
  return result;
}

// ---------------------------------------------------------------------------

FixedPointReport find_fixed_points(std::size_t n_max, FixedPointMode mode, const Caps& caps, std::size_t n_min) {
  check_cap("fixed point scan size", n_max, std::min<std::size_t>(caps.max_enumerate, 7));
  FixedPointReport report;
  report.mode = mode;
  report.n_min = std::max<std::size_t>(n_min, 1);
  report.n_max = n_max;
  report.expectation_holds = true;

  for (std::size_t n = report.n_min; n <= n_max; ++n) {
    const auto posets = enumerate_posets(n, caps);
    std::vector<char> keep(posets.size(), 0);
    std::vector<std::optional<IsoWitness>> found(posets.size());
    detail::parallel_for(posets.size(), caps.threads, [&](std::size_t i) {
      const Poset& p = posets[i];
      switch (mode) {
        case FixedPointMode::posets: keep[i] = 1; break;
        case FixedPointMode::connected_posets: keep[i] = is_connected(p); break;
        case FixedPointMode::lattices:
          try {
            DistLattice::from_poset(p);
            keep[i] = 1;
          } catch (const Error&) {
          }
          break;
      }
      // |Phi(P)| counts related pairs, so only antichains can match on size.
      if (keep[i] && p.related_pairs() == p.size()) found[i] = is_isomorphic(phi_poset(p, caps).poset, p);
    });

    std::size_t scanned = 0;
    for (std::size_t i = 0; i < posets.size(); ++i) {
      if (!keep[i]) continue;
      ++scanned;
      const bool antichain = posets[i].is_antichain();
      if (found[i]) report.hits.push_back({n, i, relation_code(posets[i]), antichain, std::move(*found[i])});
      switch (mode) {
        case FixedPointMode::posets:
          if (found[i].has_value() != antichain) report.expectation_holds = false;
          break;
        case FixedPointMode::lattices:
          if (found[i]) report.expectation_holds = false;
          break;
        case FixedPointMode::connected_posets:
          if (found[i] && n > 1) report.expectation_holds = false;
          break;
      }
    }
    report.scanned.push_back(scanned);
  }
  return report;
}

ShiftReport free_lattice_shift_check(std::size_t n, const Caps& caps) {
  check_cap("free lattice shift n", n, 3);
  ShiftReport report;
  report.n = n;
  const Poset base = cube(n, caps);
  const Poset next = cube(n + 1, caps);

  Lemma51 lem = lemma51(base, caps);
  report.free_lattice_size = lem.base.sets.size();
  report.comparable_pairs = lem.base.lattice.order().related_pairs();
  report.next_free_lattice_size = down_sets(next, caps).size();

  // y -> (ls(y), y(0)); y(0) is the most significant bit of y.
  const std::size_t low = (std::size_t{1} << n) - 1;
  report.shift.resize(next.size());
  for (std::size_t y = 0; y < next.size(); ++y) report.shift[y] = 2 * (y & low) + (y >> n);
  const IsoWitness shift = IsoWitness::from_forward(report.shift);
  if (!shift.verifies(next, lem.doubled)) {
    report.holds = false;
    return report;
  }

  // E(shift): E(cube n x 2) -> E(cube n+1), c -> shift^-1(c)
  const LatticeHom transport = e_hom(next, lem.doubled, report.shift, caps);
  report.witness = lem.witness.then(IsoWitness::from_forward(transport.map()));
  report.holds = report.witness.verifies(lem.phi_of_base.lattice.order(), transport.target().order()) &&
                 report.comparable_pairs == report.next_free_lattice_size &&
                 lem.phi_of_base.carrier.size() == report.next_free_lattice_size;
  return report;
}

std::vector<DimensionRow> dimension_report(std::size_t n_max, const Caps& caps) {
  check_cap("dimension report size", n_max, 6);
  std::vector<DimensionRow> rows;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto posets = enumerate_posets(n, caps);
    std::vector<DimensionRow> level(posets.size());
    detail::parallel_for(posets.size(), caps.threads, [&](std::size_t i) {
      const Poset& p = posets[i];
      const Poset phi = phi_poset(p, caps).poset;
      DimensionRow& row = level[i];
      row.id = std::to_string(n) + "-" + std::to_string(i);
      row.code = relation_code(p);
      row.size = n;
      row.phi_size = phi.size();
      if (p.size() <= caps.max_dim_size) row.dim = order_dimension(p, caps);
      if (phi.size() <= caps.max_dim_size) row.phi_dim = order_dimension(phi, caps);
      row.width = width(p);
      row.phi_width = width(phi);
    });
    rows.insert(rows.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
  }
  return rows;
}

}  // namespace ordlat
