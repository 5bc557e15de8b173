#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "frattini/closure.hpp"
#include "frattini/errors.hpp"
#include "frattini/poset.hpp"

// Structure builders feeding the law checkers: standard small posets,
// divisor lattices, and seeded random posets, join-semilattices and Moore
// families.  Randomness goes through the raw engine output only, so a seed
// produces the same instance on every platform.

namespace frattini {

namespace detail {

inline bool chance(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

inline std::string padded(const std::string& prefix, std::size_t i, std::size_t count) {
  std::size_t width = 1;
  for (std::size_t v = count > 0 ? count - 1 : 0; v >= 10; v /= 10) ++width;
  std::string digits = std::to_string(i);
  return prefix + std::string(width - digits.size(), '0') + digits;
}

}  // namespace detail

/// Linear order on n elements; the top is the last one.
inline Poset chain_poset(std::size_t n) {
  if (n == 0) throw NoMaximum("chain must have at least one element");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(detail::padded("c", i, n));
  return Poset::from_relation(ids, [](const std::string& a, const std::string& b) { return a <= b; });
}

/// k pairwise incomparable atoms below a fresh top.  With k >= 2 this is the
/// smallest poset whose Frattini element fails to exist.
inline Poset antichain_plus_top(std::size_t k) {
  std::vector<std::string> ids{"top"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 1; i <= k; ++i) {
    ids.push_back(detail::padded("p", i, k + 1));
    covers.emplace_back(ids.back(), "top");
  }
  return Poset::from_covers(ids, covers);
}

/// Bottom, k incomparable middle elements, top.  diamond(2) is the square M2
/// used throughout the tests.
inline Poset diamond(std::size_t k) {
  if (k == 0) throw NoMaximum("diamond needs at least one middle element");
  std::vector<std::string> ids{"bot", "top"};
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 1; i <= k; ++i) {
    ids.push_back(detail::padded("m", i, k + 1));
    covers.emplace_back("bot", ids.back());
    covers.emplace_back(ids.back(), "top");
  }
  return Poset::from_covers(ids, covers);
}

/// Divisors of n ordered by divisibility; the top is n itself.
inline Poset divisor_lattice(std::uint64_t n) {
  if (n == 0) throw NoMaximum("divisor lattice needs n >= 1");
  std::vector<std::uint64_t> divisors;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) divisors.push_back(d);
  std::vector<std::string> ids;
  for (std::uint64_t d : divisors) ids.push_back(std::to_string(d));
  return Poset::from_relation(ids, [](const std::string& a, const std::string& b) {
    return std::stoull(b) % std::stoull(a) == 0;
  });
}

namespace detail {

/// Strict part of a random partial order on 0..n-1: random edges respecting
/// a random topological permutation, transitively closed.
inline std::vector<std::uint8_t> random_strict_order(std::size_t n, double density,
                                                     std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[pick(rng, i)]);
  std::vector<std::uint8_t> strict(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (chance(rng, density)) strict[perm[i] * n + perm[j]] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (strict[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (strict[k * n + j]) strict[i * n + j] = 1;
  return strict;
}

inline std::vector<std::string> numbered_ids(const std::string& prefix, std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(padded(prefix, i, n));
  return ids;
}

}  // namespace detail

/// Random poset on n base elements: transitive closure of a random acyclic
/// edge set, with a fresh top adjoined whenever no unique maximum emerged.
inline Poset random_poset(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw NoMaximum("random poset needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> strict = detail::random_strict_order(n, density, rng);
  std::vector<std::string> ids = detail::numbered_ids("v", n);

  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < n; ++i) {
    bool has_upper = false;
    for (std::size_t j = 0; j < n && !has_upper; ++j)
      if (strict[i * n + j]) has_upper = true;
    if (!has_upper) maximal.push_back(i);
  }

  std::vector<std::string> all_ids = ids;
  if (maximal.size() > 1) all_ids.push_back("top");
  auto index = [&](const std::string& id) {
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (ids[i] == id) return i;
    return n;  // the adjoined top
  };
  return Poset::from_relation(all_ids, [&](const std::string& a, const std::string& b) {
    std::size_t ia = index(a), ib = index(b);
    if (ia == ib) return true;
    if (ib == n) return true;   // everything below the adjoined top
    if (ia == n) return false;  // the adjoined top is above everything only
    return strict[ia * n + ib] != 0;
  });
}

/// Random poset as a declarative spec, with no maximum guaranteed; this is
/// the input shape the coatom gadget accepts.
inline PosetSpec random_poset_spec(std::size_t n, double density, std::uint64_t seed) {
  if (n == 0) throw NoMaximum("random poset needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> strict = detail::random_strict_order(n, density, rng);
  PosetSpec spec;
  spec.elements = detail::numbered_ids("q", n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!strict[i * n + j]) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k)
        if (strict[i * n + k] && strict[k * n + j]) direct = false;
      if (direct) spec.covers.emplace_back(spec.elements[i], spec.elements[j]);
    }
  return spec;
}

/// Random finite join-semilattice: a random poset closed under binary joins
/// by adjoining formal joins, retrying with fresh randomness when an attempt
/// does not settle within its budget.  The retry sequence is seed-determined,
/// so outputs stay reproducible.
inline Poset random_join_semilattice(std::size_t n, std::uint64_t seed,
                                     std::size_t max_attempts = 50) {
  if (n == 0) throw NoMaximum("random join-semilattice needs n >= 1");
  static constexpr double kDensities[] = {0.15, 0.25, 0.35, 0.5};
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    double density = kDensities[attempt % 4];
    Poset base = random_poset(n, density, seed * 131 + attempt);
    std::vector<std::string> ids = base.ids();
    std::size_t count = base.size();
    std::vector<std::uint8_t> leq(count * count, 0);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) leq[i * count + j] = base.leq(i, j) ? 1 : 0;

    const std::size_t budget = 3 * n + 4;
    std::size_t added = 0;
    bool settled = false;
    while (!settled && added <= budget) {
      settled = true;
      for (std::size_t a = 0; a < count && settled; ++a)
        for (std::size_t b = a + 1; b < count && settled; ++b) {
          std::vector<std::size_t> ubs;
          for (std::size_t u = 0; u < count; ++u)
            if (leq[a * count + u] && leq[b * count + u]) ubs.push_back(u);
          bool has_least = false;
          for (std::size_t u : ubs) {
            bool least = true;
            for (std::size_t v : ubs)
              if (!leq[u * count + v]) {
                least = false;
                break;
              }
            if (least) {
              has_least = true;
              break;
            }
          }
          if (has_least) continue;
          // Adjoin a formal join for (a, b): above exactly what lies below
          // a or b, below every common upper bound.
          settled = false;
          ++added;
          std::size_t j = count;
          std::size_t grown = count + 1;
          std::vector<std::uint8_t> next(grown * grown, 0);
          for (std::size_t x = 0; x < count; ++x)
            for (std::size_t y = 0; y < count; ++y) next[x * grown + y] = leq[x * count + y];
          next[j * grown + j] = 1;
          for (std::size_t x = 0; x < count; ++x)
            if (leq[x * count + a] || leq[x * count + b]) next[x * grown + j] = 1;
          for (std::size_t u : ubs) next[j * grown + u] = 1;
          leq = std::move(next);
          ids.push_back(detail::padded("w", added, budget + 1));
          count = grown;
        }
    }
    if (!settled) continue;
    auto index = [&](const std::string& id) {
      for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] == id) return i;
      throw UnknownElement(id);
    };
    Poset result = Poset::from_relation(ids, [&](const std::string& a, const std::string& b) {
      return leq[index(a) * count + index(b)] != 0;
    });
    if (is_join_semilattice(result)) return result;
  }
  throw GenerationFailed("no join-semilattice within " + std::to_string(max_attempts) +
                         " attempts for seed " + std::to_string(seed));
}

/// Random Moore family over a small ground set: each subset is drawn closed
/// with the given probability, then the family is completed under pairwise
/// intersections so the result always validates.
inline MooreFamily random_moore_family(std::size_t ground_size, double density,
                                       std::uint64_t seed) {
  if (ground_size > kMooreGroundCap)
    throw GroundTooLarge("ground of " + std::to_string(ground_size) + " exceeds cap " +
                         std::to_string(kMooreGroundCap));
  std::mt19937_64 rng(seed);
  std::vector<std::string> ground;
  for (std::size_t i = 1; i <= ground_size; ++i)
    ground.push_back(detail::padded("g", i, ground_size + 1));
  std::vector<std::vector<std::string>> sets;
  const std::uint32_t count = 1u << ground_size;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (!detail::chance(rng, density) && mask + 1 != count) continue;
    std::vector<std::string> set;
    for (std::size_t i = 0; i < ground_size; ++i)
      if (mask & (1u << i)) set.push_back(ground[i]);
    sets.push_back(std::move(set));
  }
  return MooreFamily::from_sets(ground, sets, /*complete=*/true);
}

}  // namespace frattini
