// Runs each acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "functor_laws.hpp"
#include "oracles.hpp"
#include "ordlat/cli.hpp"
#include "ordlat/document.hpp"
#include "ordlat/error.hpp"
#include "ordlat/phi.hpp"

using namespace ordlat;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Verdict corollary_suite() {
  Verdict v;
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t i = 0; const auto& p : enumerate_posets(n)) {
      const std::string id = std::to_string(n) + "-" + std::to_string(i++);
      std::optional<DistLattice> l;
      try {
        l = DistLattice::from_poset(p);
      } catch (const Error&) {
        continue;
      }
      ++count;
      const CorollaryReport r = verify_corollary(*l);
      if (!r.holds) v.fail(id + ": " + r.counterexample);
      // Independent brute force over all subsets of Phi(L).
      std::vector<std::uint64_t> closed;
      for (const auto& ideal : primes_of_phi_closed_form(*l)) closed.push_back(ideal.members.to_mask());
      if (closed != oracle::prime_ideals(phi_lattice(*l).lattice)) v.fail(id + ": closed form differs from subset search");
    }
  if (v.pass) v.detail = std::to_string(count) + " lattices";
  return v;
}

Verdict lemma51_suite() {
  Verdict v;
  std::vector<Poset> spaces;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) spaces.push_back(p);
  spaces.push_back(cube(3));
  for (const auto& x : spaces) {
    const Lemma51 r = lemma51(x);
    const IsoWitness& w = r.witness;
    if (!w.verifies(r.phi_of_base.lattice.order(), r.doubled_dual.lattice.order()) ||
        w.then(w.inverse()) != IsoWitness::identity(w.forward.size()))
      v.fail("witness rejected on a " + std::to_string(x.size()) + "-element space");
  }
  if (v.pass) v.detail = std::to_string(spaces.size()) + " spaces";
  return v;
}

Verdict image_round_trip() {
  Verdict v;
  std::size_t yes = 0, no = 0;
  for (const auto& k : oracle::lattices_up_to(4)) {
    const PhiLattice phi = phi_lattice(k);
    const ImageResult r = in_image_of_phi(phi.lattice);
    if (!r.in_image()) {
      v.fail("Phi(K) for |K| = " + std::to_string(k.size()) + " not recognized");
      continue;
    }
    const PhiLattice back = phi_lattice(r.witness->k);
    if (!r.witness->iso.verifies(back.lattice.order(), phi.lattice.order()) ||
        !oracle::isomorphic(back.lattice.order(), phi.lattice.order()))
      v.fail("Phi(K') is not isomorphic to Phi(K)");
    ++yes;
  }
  if (in_image_of_phi(DistLattice::from_poset(chain(4))).in_image()) v.fail("4-chain accepted");
  for (const auto& l : oracle::lattices_up_to(7)) {
    if (spec(l).size() % 2 == 0) continue;
    ++no;
    if (in_image_of_phi(l).in_image()) v.fail("lattice with odd spectrum accepted");
  }
  if (v.pass) v.detail = std::to_string(yes) + " round trips, " + std::to_string(no) + " odd spectra rejected";
  return v;
}

Verdict duality_round_trips() {
  Verdict v;
  std::size_t lattices = 0, spaces = 0;
  for (const auto& l : oracle::lattices_up_to(5)) {
    if (!unit_lattice(l).verifies(l.order(), downset_lattice(spec(l)).lattice.order())) v.fail("unit_lattice");
    ++lattices;
  }
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& x : enumerate_posets(n)) {
      if (!unit_space(x).verifies(x, spec(downset_lattice(x).lattice))) v.fail("unit_space");
      ++spaces;
    }
  std::size_t pairs = 0;
  const std::string law = laws::check_chains(4, pairs);
  if (!law.empty()) v.fail(law);
  if (v.pass)
    v.detail = std::to_string(lattices) + " lattices, " + std::to_string(spaces) + " spaces, " + std::to_string(pairs) +
               " composable pairs";
  return v;
}

Verdict shift_check() {
  Verdict v;
  for (std::size_t n = 0; n <= 3; ++n)
    if (!free_lattice_shift_check(n).holds) v.fail("n = " + std::to_string(n));
  const ShiftReport r = free_lattice_shift_check(3);
  const std::size_t oracle_count = oracle::downset_count(cube(4));
  if (r.free_lattice_size != 20 || r.comparable_pairs != 168 || oracle_count != 168)
    v.fail("E(cube 3): " + std::to_string(r.comparable_pairs) + " comparable pairs, E(cube 4) by subset search: " +
           std::to_string(oracle_count));
  if (v.pass) v.detail = "n = 0..3; E(cube 3) has 168 comparable pairs = |E(cube 4)|";
  return v;
}

Verdict fixed_points() {
  Verdict v;
  const FixedPointReport all = find_fixed_points(6, FixedPointMode::posets);
  std::size_t antichains = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_posets(n)) antichains += p.is_antichain();
  if (all.hits.size() != antichains) v.fail("posets: " + std::to_string(all.hits.size()) + " hits");
  for (const auto& h : all.hits)
    if (!h.antichain) v.fail("posets: non-antichain fixed point of size " + std::to_string(h.size));
  if (!find_fixed_points(6, FixedPointMode::lattices, {}, 2).hits.empty()) v.fail("lattices: hit found");
  if (!find_fixed_points(6, FixedPointMode::connected_posets, {}, 2).hits.empty()) v.fail("connected posets: hit found");
  if (v.pass) v.detail = std::to_string(antichains) + " antichain hits; no lattice or connected hits";
  return v;
}

Verdict kernel_oracles() {
  Verdict v;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& p : enumerate_posets(n)) {
      if (width(p) != oracle::width(p)) v.fail("width at size " + std::to_string(n));
      ++checked;
    }
  std::mt19937_64 rng(20261018);
  std::uniform_real_distribution<double> density(0.1, 0.6);
  for (int i = 0; i < 100; ++i) {
    const Poset p = oracle::random_poset(7 + i % 2, density(rng), rng);
    if (width(p) != oracle::width(p)) v.fail("width on a random poset");
    ++checked;
  }
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n))
      if (order_dimension(p) != oracle::dimension(p)) v.fail("dimension at size " + std::to_string(n));
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto ps = enumerate_posets(n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      // Against itself under a fixed relabeling, and against its neighbour.
      std::vector<std::size_t> perm = oracle::iota(n);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Poset q = Poset::from_predicate(n, [&](std::size_t a, std::size_t b) { return ps[i].leq(perm[a], perm[b]); });
      const Poset& r = ps[(i + 1) % ps.size()];
      if (is_isomorphic(ps[i], q).has_value() != oracle::isomorphic(ps[i], q) ||
          is_isomorphic(ps[i], r).has_value() != oracle::isomorphic(ps[i], r))
        v.fail("is_isomorphic at size " + std::to_string(n));
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " width checks; dimension to 5; isomorphism to 6";
  return v;
}

std::string run_cli(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str();
}

Verdict cli_determinism() {
  Verdict v;
  for (const char* suite : {"corollary", "lemma51", "fixedpoints", "shift", "dimtable"}) {
    int c1 = 0, c2 = 0;
    const std::string a = run_cli({"experiments", suite}, c1);
    const std::string b = run_cli({"experiments", suite}, c2);
    if (a != b || c1 != 0 || c2 != 0) v.fail(std::string(suite) + " differs between runs");
  }
  std::size_t fixtures = 0;
  for (const auto& entry : std::filesystem::directory_iterator(ORDLAT_FIXTURES)) {
    std::ifstream in(entry.path());
    std::stringstream text;
    text << in.rdbuf();
    try {
      const PosetDocument doc = parse_document(text.str());
      const Poset p = to_poset(doc);
      if (to_poset(parse_document(serialize(to_document(p, doc.kind)))) != p) v.fail(entry.path().filename().string());
      ++fixtures;
    } catch (const Error& e) {
      // Deliberately invalid fixtures must fail with a typed error.
      if (e.kind() != ErrorKind::parse_error && e.kind() != ErrorKind::antisymmetry_violation)
        v.fail(entry.path().filename().string() + ": " + e.what());
    }
  }
  if (v.pass) v.detail = "5 suites byte-identical; " + std::to_string(fixtures) + " fixtures round-trip";
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"prime ideals of Phi(L)", corollary_suite},
      {"Phi(E(X)) = E(X x 2)", lemma51_suite},
      {"image round trip", image_round_trip},
      {"duality round trips", duality_round_trips},
      {"free lattice shift", shift_check},
      {"fixed-point scans", fixed_points},
      {"kernel oracles", kernel_oracles},
      {"cli determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < std::size(criteria); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail.c_str(), secs);
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}
