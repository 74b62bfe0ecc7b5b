#include "ordlat/poset.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "ordlat/error.hpp"

namespace ordlat {
namespace {

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

// Closes rows in place; returns the first pair i < j related both ways.
std::optional<Pair> close_rows(std::vector<kernels::word>& rows, std::size_t n, std::size_t stride) {
  for (std::size_t i = 0; i < n; ++i) rows[i * stride + i / 64] |= kernels::word{1} << (i % 64);
  kernels::active().transitive_closure(rows.data(), n, stride);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool ij = (rows[i * stride + j / 64] >> (j % 64)) & 1U;
      const bool ji = (rows[j * stride + i / 64] >> (i % 64)) & 1U;
      if (ij && ji) return Pair{i, j};
    }
  return std::nullopt;
}

}  // namespace

Poset Poset::from_rows(std::size_t size, std::vector<kernels::word> rows, std::size_t stride,
                       std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(size);
  if (labels.size() != size)
    raise(ErrorKind::invalid_argument,
          "expected " + std::to_string(size) + " labels, got " + std::to_string(labels.size()));
  if (auto cycle = close_rows(rows, size, stride)) {
    const auto [i, j] = *cycle;
    raise(ErrorKind::antisymmetry_violation, "closure relates " + labels[i] + " and " + labels[j] +
                                                 " both ways (elements " + std::to_string(i) + ", " +
                                                 std::to_string(j) + ")");
  }
  Poset p;
  p.up_.assign(size, Bitset(size));
  p.down_.assign(size, Bitset(size));
  for (std::size_t i = 0; i < size; ++i) {
    std::copy_n(rows.begin() + static_cast<std::ptrdiff_t>(i * stride), stride, p.up_[i].words().begin());
    p.up_[i].for_each([&](std::size_t j) { p.down_[j].set(i); });
  }
  p.labels_ = std::move(labels);
  return p;
}

Poset Poset::from_pairs(std::size_t size, std::span<const Pair> pairs, std::vector<std::string> labels) {
  const std::size_t stride = Bitset::word_count(size);
  std::vector<kernels::word> rows(size * stride, 0);
  for (const auto& [i, j] : pairs) {
    if (i >= size || j >= size)
      raise(ErrorKind::invalid_argument, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") out of range for size " + std::to_string(size));
    rows[i * stride + j / 64] |= kernels::word{1} << (j % 64);
  }
  return from_rows(size, std::move(rows), stride, std::move(labels));
}

Poset Poset::from_predicate(std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq,
                            std::vector<std::string> labels) {
  const std::size_t stride = Bitset::word_count(size);
  std::vector<kernels::word> rows(size * stride, 0);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (leq(i, j)) rows[i * stride + j / 64] |= kernels::word{1} << (j % 64);
  return from_rows(size, std::move(rows), stride, std::move(labels));
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != size()) raise(ErrorKind::invalid_argument, "label count mismatch");
  Poset p = *this;
  p.labels_ = std::move(labels);
  return p;
}

std::size_t Poset::related_pairs() const {
  std::size_t total = 0;
  for (const auto& row : up_) total += row.count();
  return total;
}

std::vector<Pair> Poset::covers() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < size(); ++i)
    up_[i].for_each([&](std::size_t j) {
      if (i == j) return;
      // j covers i iff the only element of [i, j] besides the endpoints is none.
      Bitset between = up_[i] & down_[j];
      if (between.count() == 2) out.emplace_back(i, j);
    });
  return out;
}

Poset Poset::induced(std::span<const std::size_t> elements) const {
  std::vector<std::string> labels;
  labels.reserve(elements.size());
  for (std::size_t e : elements) {
    if (e >= size()) raise(ErrorKind::invalid_argument, "induced: element out of range");
    labels.push_back(labels_[e]);
  }
  return from_predicate(
      elements.size(), [&](std::size_t i, std::size_t j) { return leq(elements[i], elements[j]); },
      std::move(labels));
}

bool Poset::is_chain() const {
  for (std::size_t i = 0; i < size(); ++i)
    if ((up_[i] | down_[i]).count() != size()) return false;
  return true;
}

bool Poset::is_antichain() const { return related_pairs() == size(); }

bool Poset::is_down_set(const Bitset& set) const {
  bool ok = true;
  set.for_each([&](std::size_t i) { ok = ok && down_[i].subset_of(set); });
  return ok;
}

// ---------------------------------------------------------------------------

IsoWitness IsoWitness::from_forward(std::vector<std::size_t> forward) {
  std::vector<std::size_t> backward(forward.size(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < forward.size(); ++i) {
    if (forward[i] >= forward.size() || backward[forward[i]] != std::numeric_limits<std::size_t>::max())
      raise(ErrorKind::invalid_argument, "map is not a bijection");
    backward[forward[i]] = i;
  }
  return {std::move(forward), std::move(backward)};
}

IsoWitness IsoWitness::identity(std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), std::size_t{0});
  return {id, id};
}

IsoWitness IsoWitness::then(const IsoWitness& next) const {
  if (forward.size() != next.forward.size()) raise(ErrorKind::invalid_argument, "witness size mismatch");
  std::vector<std::size_t> f(forward.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = next.forward[forward[i]];
  return from_forward(std::move(f));
}

bool IsoWitness::verifies(const Poset& p, const Poset& q) const {
  const std::size_t n = p.size();
  if (q.size() != n || forward.size() != n || backward.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (forward[i] >= n || backward[i] >= n) return false;
    if (backward[forward[i]] != i || forward[backward[i]] != i) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.leq(i, j) != q.leq(forward[i], forward[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------

Poset chain(std::size_t n) {
  return Poset::from_predicate(n, [](std::size_t i, std::size_t j) { return i <= j; });
}

Poset antichain(std::size_t n) {
  return Poset::from_predicate(n, [](std::size_t i, std::size_t j) { return i == j; });
}

Poset cube(std::size_t n, const Caps& caps) {
  if (n >= 63) raise(ErrorKind::cap_exceeded, "cube dimension " + std::to_string(n));
  const std::size_t size = std::size_t{1} << n;
  check_cap("cube elements", size, caps.max_cube_elements);
  std::vector<std::string> labels(size);
  for (std::size_t x = 0; x < size; ++x) {
    std::string s;
    for (std::size_t k = n; k-- > 0;) s.push_back(((x >> k) & 1U) ? '1' : '0');
    labels[x] = n == 0 ? std::string("()") : s;
  }
  return Poset::from_predicate(
      size, [](std::size_t i, std::size_t j) { return (i & ~j) == 0; }, std::move(labels));
}

Poset standard_poset(Shape shape, std::size_t n, const Caps& caps) {
  switch (shape) {
    case Shape::chain:
      if (n < 1) raise(ErrorKind::invalid_argument, "chain needs n >= 1");
      check_cap("chain size", n, caps.max_size);
      return chain(n);
    case Shape::antichain:
      if (n < 1) raise(ErrorKind::invalid_argument, "antichain needs n >= 1");
      check_cap("antichain size", n, caps.max_size);
      return antichain(n);
    case Shape::cube:
      return cube(n, caps);
  }
  raise(ErrorKind::invalid_argument, "unknown shape");
}

Poset product(const Poset& p, const Poset& q, const Caps& caps) {
  const std::size_t m = q.size();
  check_cap("product size", p.size() * m, caps.max_size);
  std::vector<std::string> labels;
  labels.reserve(p.size() * m);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < m; ++b) labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
  return Poset::from_predicate(
      p.size() * m,
      [&](std::size_t i, std::size_t j) { return p.leq(i / m, j / m) && q.leq(i % m, j % m); },
      std::move(labels));
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  std::vector<std::string> labels = p.labels();
  labels.insert(labels.end(), q.labels().begin(), q.labels().end());
  return Poset::from_predicate(
      n + q.size(),
      [&](std::size_t i, std::size_t j) {
        if (i < n && j < n) return p.leq(i, j);
        if (i >= n && j >= n) return q.leq(i - n, j - n);
        return false;
      },
      std::move(labels));
}

// ---------------------------------------------------------------------------

std::vector<std::uint64_t> down_sets(const Poset& p, const Caps& caps) {
  const std::size_t n = p.size();
  check_cap("down-set poset size", n, std::min<std::size_t>(caps.max_downset_poset, 64));

  // Visit elements along a linear extension; an element may join the set only
  // once its whole strict down-set has joined. Every partial choice extends,
  // so each down-set is produced exactly once.
  const auto order = linear_extension(p);
  std::vector<std::uint64_t> below(n);
  for (std::size_t i = 0; i < n; ++i) below[i] = p.down(i).to_mask() & ~(std::uint64_t{1} << i);

  std::vector<std::uint64_t> out;
  std::vector<std::pair<std::size_t, std::uint64_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [k, set] = stack.back();
    stack.pop_back();
    if (k == n) {
      out.push_back(set);
      if (out.size() > caps.max_downset_count)
        raise(ErrorKind::cap_exceeded, "more than " + std::to_string(caps.max_downset_count) + " down-sets");
      continue;
    }
    const std::size_t x = order[k];
    stack.emplace_back(k + 1, set);
    if ((below[x] & ~set) == 0) stack.emplace_back(k + 1, set | (std::uint64_t{1} << x));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

std::optional<IsoWitness> is_isomorphic(const Poset& p, const Poset& q) {
  const std::size_t n = p.size();
  if (q.size() != n || p.related_pairs() != q.related_pairs()) return std::nullopt;

  // Necessary per-element invariant: (|down|, |up|).
  auto signature = [](const Poset& s, std::size_t i) { return std::pair{s.down(i).count(), s.up(i).count()}; };
  std::vector<std::pair<std::size_t, std::size_t>> sp(n), sq(n);
  for (std::size_t i = 0; i < n; ++i) {
    sp[i] = signature(p, i);
    sq[i] = signature(q, i);
  }
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<std::size_t> forward(n);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || sq[j] != sp[i]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = p.leq(k, i) == q.leq(forward[k], j) && p.leq(i, k) == q.leq(j, forward[k]);
      if (!ok) continue;
      forward[i] = j;
      used[j] = 1;
      if (extend(i + 1)) return true;
      used[j] = 0;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return IsoWitness::from_forward(std::move(forward));
}

bool is_connected(const Poset& p) {
  if (p.empty()) raise(ErrorKind::empty_poset, "connectivity of the empty poset");
  Bitset seen(p.size());
  std::vector<std::size_t> frontier{0};
  seen.set(0);
  while (!frontier.empty()) {
    const std::size_t x = frontier.back();
    frontier.pop_back();
    (p.up(x) | p.down(x)).for_each([&](std::size_t y) {
      if (!seen.test(y)) {
        seen.set(y);
        frontier.push_back(y);
      }
    });
  }
  return seen.all();
}

std::size_t width(const Poset& p) {
  // Minimum chain cover = n - maximum matching in the bipartite graph
  // {left i -> right j : i < j}.
  const std::size_t n = p.size();
  std::vector<std::size_t> match_right(n, n);
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) -> bool {
    bool found = false;
    p.up(i).for_each([&](std::size_t j) {
      if (found || j == i || visited[j]) return;
      visited[j] = 1;
      if (match_right[j] == n || augment(match_right[j])) {
        match_right[j] = i;
        found = true;
      }
    });
    return found;
  };
  std::size_t matching = 0;
  for (std::size_t i = 0; i < n; ++i) {
    visited.assign(n, 0);
    if (augment(i)) ++matching;
  }
  return n - matching;
}

std::vector<std::size_t> linear_extension(const Poset& p) {
  std::vector<std::size_t> order(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return p.down(a).count() < p.down(b).count(); });
  return order;
}

std::vector<std::vector<std::size_t>> linear_extensions(const Poset& p, std::size_t limit) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::vector<std::size_t> missing_below(n);
  for (std::size_t i = 0; i < n; ++i) missing_below[i] = p.down(i).count() - 1;
  std::vector<char> placed(n, 0);

  std::function<void()> extend = [&]() {
    if (current.size() == n) {
      if (out.size() == limit) raise(ErrorKind::cap_exceeded, "more than " + std::to_string(limit) + " linear extensions");
      out.push_back(current);
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x] || missing_below[x] != 0) continue;
      placed[x] = 1;
      current.push_back(x);
      p.up(x).for_each([&](std::size_t y) { if (y != x) --missing_below[y]; });
      extend();
      p.up(x).for_each([&](std::size_t y) { if (y != x) ++missing_below[y]; });
      current.pop_back();
      placed[x] = 0;
      if (limit == 1 && !out.empty()) return;
    }
  };
  extend();
  return out;
}

namespace {

// True if adding "b below a" for every listed pair keeps the order acyclic,
// i.e. some single linear extension places every a above its b.
bool one_extension_realizes(const Poset& p, std::span<const Pair> above) {
  const std::size_t n = p.size();
  const std::size_t stride = Bitset::word_count(n);
  std::vector<kernels::word> rows(n * stride);
  for (std::size_t i = 0; i < n; ++i) std::copy_n(p.up(i).words().begin(), stride, rows.begin() + static_cast<std::ptrdiff_t>(i * stride));
  for (const auto& [a, b] : above) rows[b * stride + a / 64] |= kernels::word{1} << (a % 64);
  return !close_rows(rows, n, stride).has_value();
}

}  // namespace

std::size_t order_dimension(const Poset& p, const Caps& caps) {
  const std::size_t n = p.size();
  check_cap("dimension poset size", n, caps.max_dim_size);
  if (n == 0) return 0;

  // Ordered incomparable pairs (a, b); an extension covers (a, b) when it puts a above b.
  std::vector<Pair> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && !p.comparable(a, b)) pairs.emplace_back(a, b);
  if (pairs.empty()) return 1;

  const auto extensions = linear_extensions(p, std::numeric_limits<std::size_t>::max());
  std::vector<Bitset> covered;
  covered.reserve(extensions.size());
  std::vector<std::size_t> position(n);
  for (const auto& ext : extensions) {
    for (std::size_t k = 0; k < n; ++k) position[ext[k]] = k;
    Bitset c(pairs.size());
    for (std::size_t id = 0; id < pairs.size(); ++id)
      if (position[pairs[id].first] > position[pairs[id].second]) c.set(id);
    covered.push_back(std::move(c));
  }

  std::vector<Pair> rest;
  std::function<bool(std::size_t, std::size_t, const Bitset&)> search =
      [&](std::size_t used, std::size_t k, const Bitset& uncovered) -> bool {
    if (uncovered.none()) return true;
    if (used == k) return false;
    if (used + 1 == k) {
      // Last slot: any extension covering everything left will do.
      rest.clear();
      uncovered.for_each([&](std::size_t id) { rest.push_back(pairs[id]); });
      return one_extension_realizes(p, rest);
    }
    const std::size_t target = uncovered.first();
    for (const auto& c : covered) {
      if (!c.test(target)) continue;
      Bitset left = uncovered & c.complement();
      if (search(used + 1, k, left)) return true;
    }
    return false;
  };

  const Bitset all = Bitset::full(pairs.size());
  for (std::size_t k = 2;; ++k)
    if (search(0, k, all)) return k;
}

// ---------------------------------------------------------------------------

namespace {

using Rows = std::array<std::uint8_t, 8>;

std::uint64_t encode(const Rows& up, std::size_t n) {
  std::uint64_t code = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) code = (code << 1) | ((up[a] >> b) & 1U);
  return code;
}

// Lexicographically least row-major matrix over all relabelings, by
// depth-first assignment of canonical positions with a lower-bound cut: the
// known entries (both endpoints placed) plus zeros elsewhere never exceed
// any completion.
std::pair<std::uint64_t, std::vector<std::size_t>> canonicalize(const Rows& up, std::size_t n) {
  const std::size_t total = n * n;
  auto bit = [&](std::size_t a, std::size_t b) { return std::uint64_t{1} << (total - 1 - (a * n + b)); };

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::array<std::size_t, 8> perm{};
  std::array<std::size_t, 8> best_perm{};
  std::uint64_t diagonal = 0;
  for (std::size_t a = 0; a < n; ++a) diagonal |= bit(a, a);

  std::function<void(std::size_t, std::uint8_t, std::uint64_t)> place = [&](std::size_t k, std::uint8_t used,
                                                                             std::uint64_t known) {
    if (k == n) {
      if (known < best) {
        best = known;
        best_perm = perm;
      }
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (used & (1U << x)) continue;
      std::uint64_t next = known;
      for (std::size_t a = 0; a < k; ++a) {
        if ((up[perm[a]] >> x) & 1U) next |= bit(a, k);
        if ((up[x] >> perm[a]) & 1U) next |= bit(k, a);
      }
      if (next >= best) continue;
      perm[k] = x;
      place(k + 1, static_cast<std::uint8_t>(used | (1U << x)), next);
    }
  };
  if (n == 0) return {0, {}};
  place(0, 0, diagonal);
  return {best, std::vector<std::size_t>(best_perm.begin(), best_perm.begin() + static_cast<std::ptrdiff_t>(n))};
}

Rows rows_of(const Poset& p) {
  if (p.size() > 8) raise(ErrorKind::cap_exceeded, "relation code needs size <= 8");
  Rows up{};
  for (std::size_t i = 0; i < p.size(); ++i) up[i] = static_cast<std::uint8_t>(p.up(i).to_mask());
  return up;
}

Poset decode(std::uint64_t code, std::size_t n) {
  const std::size_t total = n * n;
  return Poset::from_predicate(n, [&](std::size_t a, std::size_t b) {
    return ((code >> (total - 1 - (a * n + b))) & 1U) != 0;
  });
}

}  // namespace

std::uint64_t relation_code(const Poset& p) { return encode(rows_of(p), p.size()); }

std::pair<std::uint64_t, std::vector<std::size_t>> canonical_code(const Poset& p) {
  return canonicalize(rows_of(p), p.size());
}

Poset canonical_form(const Poset& p) {
  const auto [code, perm] = canonical_code(p);
  std::vector<std::string> labels;
  for (std::size_t x : perm) labels.push_back(p.label(x));
  return decode(code, p.size()).with_labels(std::move(labels));
}

std::vector<Poset> enumerate_posets(std::size_t n, const Caps& caps) {
  check_cap("enumeration size", n, std::min<std::size_t>(caps.max_enumerate, 8));

  static std::mutex mutex;
  static std::map<std::size_t, std::vector<std::uint64_t>> cache{{0, {0}}};
  std::lock_guard lock(mutex);

  // Every poset on m elements is a poset on m-1 elements plus a new maximal
  // element sitting above one of its down-sets.
  for (std::size_t m = 1; m <= n; ++m) {
    if (cache.count(m)) continue;
    std::set<std::uint64_t> codes;
    for (std::uint64_t code : cache.at(m - 1)) {
      const std::size_t prev = m - 1;
      const Poset base = decode(code, prev);
      Rows up = rows_of(base);
      Caps unlimited;
      for (std::uint64_t d : down_sets(base, unlimited)) {
        Rows ext = up;
        for (std::size_t i = 0; i < prev; ++i)
          if ((d >> i) & 1U) ext[i] = static_cast<std::uint8_t>(ext[i] | (1U << prev));
        ext[prev] = static_cast<std::uint8_t>(1U << prev);
        codes.insert(canonicalize(ext, m).first);
      }
    }
    cache[m] = std::vector<std::uint64_t>(codes.begin(), codes.end());
  }

  std::vector<Poset> out;
  for (std::uint64_t code : cache.at(n)) out.push_back(decode(code, n));
  return out;
}

}  // namespace ordlat
