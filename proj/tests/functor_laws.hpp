#pragma once

// Functor-law checks shared by the duality tests and the acceptance runner.

#include <string>
#include <vector>

#include "ordlat/duality.hpp"
#include "ordlat/error.hpp"

namespace laws {

using namespace ordlat;

// Monotone maps chain(a) -> chain(b), as value vectors.
inline std::vector<std::vector<std::size_t>> monotone_maps(std::size_t a, std::size_t b) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> m(a, 0);
  while (true) {
    if (std::is_sorted(m.begin(), m.end())) out.push_back(m);
    std::size_t i = 0;
    while (i < a && ++m[i] == b) m[i++] = 0;
    if (i == a) return out;
  }
}

inline std::vector<std::size_t> compose(const std::vector<std::size_t>& first, const std::vector<std::size_t>& second) {
  std::vector<std::size_t> out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

// Over chains with 2..max_len elements, checks spec_hom and e_hom on
// identities and on every composable pair. Returns the first failure, or
// an empty string; `checked` counts composable pairs.
inline std::string check_chains(std::size_t max_len, std::size_t& checked) {
  checked = 0;
  std::vector<LatticeRef> lattices;
  for (std::size_t n = 2; n <= max_len; ++n) lattices.push_back(share(DistLattice::from_poset(chain(n))));

  for (const auto& l : lattices) {
    const auto s = spec_hom(LatticeHom::identity(l));
    if (s.map != IsoWitness::identity(s.source.size()).forward) return "spec_hom(id) is not the identity";
  }
  for (const auto& a : lattices)
    for (const auto& b : lattices)
      for (const auto& c : lattices)
        for (const auto& f : enumerate_homs(a, b))
          for (const auto& g : enumerate_homs(b, c)) {
            const auto whole = spec_hom(f.then(g));
            const auto parts = compose(spec_hom(g).map, spec_hom(f).map);
            if (whole.map != parts) return "spec_hom(g o f) != spec_hom(f) o spec_hom(g)";
            ++checked;
          }

  // Spaces: chains with 1..max_len elements.
  for (std::size_t x = 1; x <= max_len; ++x) {
    const Poset px = chain(x);
    const auto id = e_hom(px, px, IsoWitness::identity(x).forward);
    if (id.map() != IsoWitness::identity(id.source().size()).forward) return "e_hom(id) is not the identity";
  }
  for (std::size_t x = 1; x <= max_len; ++x)
    for (std::size_t y = 1; y <= max_len; ++y)
      for (std::size_t z = 1; z <= max_len; ++z)
        for (const auto& g : monotone_maps(x, y))
          for (const auto& h : monotone_maps(y, z)) {
            const auto whole = e_hom(chain(x), chain(z), compose(g, h));
            const auto parts = e_hom(chain(y), chain(z), h).then(e_hom(chain(x), chain(y), g));
            if (whole.map() != parts.map()) return "e_hom(h o g) != e_hom(g) o e_hom(h)";
            ++checked;
          }
  return {};
}

}  // namespace laws
