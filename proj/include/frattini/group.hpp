#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frattini/closure.hpp"
#include "frattini/errors.hpp"
#include "frattini/poset.hpp"

// Finite groups presented by Cayley tables, their subgroup lattices, and the
// Frattini subgroup.  This is the classical setting the order-theoretic
// machinery abstracts from, kept small and exhaustive: group orders are
// capped so subgroup enumeration stays a brute-force certainty, not a search
// heuristic.

namespace frattini {

/// Largest group order for exhaustive subgroup enumeration.
inline constexpr std::size_t kGroupOrderCap = 16;

/// A finite group as a Cayley table over element indices 0..order-1.
class FiniteGroup {
 public:
  /// Validates the full set of group axioms on the table: rows and columns
  /// are permutations, the identity is neutral, inverses exist, and the
  /// operation is associative (checked exhaustively).
  static FiniteGroup from_table(std::size_t order, std::size_t identity,
                                std::vector<std::size_t> table) {
    if (order == 0) throw InvalidGroup("group order must be positive");
    if (identity >= order) throw InvalidGroup("identity index out of range");
    if (table.size() != order * order) throw InvalidGroup("Cayley table has wrong shape");
    for (std::size_t v : table)
      if (v >= order) throw InvalidGroup("Cayley table entry out of range");
    FiniteGroup g;
    g.order_ = order;
    g.identity_ = identity;
    g.table_ = std::move(table);
    for (std::size_t i = 0; i < order; ++i) {
      std::vector<bool> row(order, false), col(order, false);
      for (std::size_t j = 0; j < order; ++j) {
        if (row[g.op(i, j)]) throw InvalidGroup("row " + std::to_string(i) + " is not a permutation");
        if (col[g.op(j, i)]) throw InvalidGroup("column " + std::to_string(i) + " is not a permutation");
        row[g.op(i, j)] = col[g.op(j, i)] = true;
      }
    }
    for (std::size_t i = 0; i < order; ++i)
      if (g.op(identity, i) != i || g.op(i, identity) != i)
        throw InvalidGroup("identity is not neutral at " + std::to_string(i));
    for (std::size_t i = 0; i < order; ++i) {
      bool has_inverse = false;
      for (std::size_t j = 0; j < order && !has_inverse; ++j)
        if (g.op(i, j) == identity && g.op(j, i) == identity) has_inverse = true;
      if (!has_inverse) throw InvalidGroup("no inverse for element " + std::to_string(i));
    }
    for (std::size_t a = 0; a < order; ++a)
      for (std::size_t b = 0; b < order; ++b)
        for (std::size_t c = 0; c < order; ++c)
          if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
            throw InvalidGroup("operation not associative");
    return g;
  }

  std::size_t order() const { return order_; }
  std::size_t identity() const { return identity_; }
  std::size_t op(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  const std::vector<std::size_t>& table() const { return table_; }

 private:
  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
};

/// Subsets of group elements as bitmasks.
using GroupSubset = std::uint32_t;

inline GroupSubset full_subset(const FiniteGroup& g) {
  return g.order() >= 32 ? ~0u : (1u << g.order()) - 1u;
}

/// The subgroup generated by a subset: closure of the subset plus identity
/// under the table operation.  Finite, so inverses come along for free.
inline GroupSubset generated_subgroup(const FiniteGroup& g, GroupSubset seed) {
  GroupSubset s = seed | (1u << g.identity());
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t a = 0; a < g.order(); ++a) {
      if (!(s & (1u << a))) continue;
      for (std::size_t b = 0; b < g.order(); ++b) {
        if (!(s & (1u << b))) continue;
        GroupSubset bit = 1u << g.op(a, b);
        if (!(s & bit)) {
          s |= bit;
          grew = true;
        }
      }
    }
  }
  return s;
}

/// Every subgroup, enumerated by closing generator extensions outward from
/// the trivial subgroup.  Sorted ascending by mask; complete by construction
/// since any subgroup is reached by adding its elements one at a time.
inline std::vector<GroupSubset> all_subgroups(const FiniteGroup& g,
                                              std::size_t order_cap = kGroupOrderCap) {
  if (g.order() > order_cap || g.order() > 31)
    throw OrderTooLarge("group order " + std::to_string(g.order()) + " exceeds cap " +
                        std::to_string(std::min<std::size_t>(order_cap, 31)));
  std::set<GroupSubset> found;
  std::vector<GroupSubset> queue{generated_subgroup(g, 0)};
  found.insert(queue[0]);
  while (!queue.empty()) {
    GroupSubset h = queue.back();
    queue.pop_back();
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (h & (1u << x)) continue;
      GroupSubset bigger = generated_subgroup(g, h | (1u << x));
      if (found.insert(bigger).second) queue.push_back(bigger);
    }
  }
  return {found.begin(), found.end()};
}

/// Canonical display name of a subset mask: "{0,2}" with ascending indices.
inline std::string subset_name(GroupSubset mask) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
  return s + "}";
}

/// The subgroup lattice: all subgroups under inclusion, top = whole group.
struct SubgroupLattice {
  std::vector<GroupSubset> subgroups;  // sorted by mask
  Poset poset;                         // elements named by subset_name

  GroupSubset mask_of(const std::string& id) const {
    for (GroupSubset m : subgroups)
      if (subset_name(m) == id) return m;
    throw UnknownElement("no subgroup named " + id);
  }
};

inline SubgroupLattice subgroup_lattice(const FiniteGroup& g,
                                        std::size_t order_cap = kGroupOrderCap) {
  std::vector<GroupSubset> subs = all_subgroups(g, order_cap);
  std::vector<std::string> ids;
  ids.reserve(subs.size());
  std::vector<std::pair<std::string, GroupSubset>> named;
  for (GroupSubset m : subs) {
    ids.push_back(subset_name(m));
    named.emplace_back(ids.back(), m);
  }
  std::sort(named.begin(), named.end());
  auto mask_for = [&](const std::string& id) {
    auto it = std::lower_bound(named.begin(), named.end(), id,
                               [](const auto& p, const std::string& s) { return p.first < s; });
    return it->second;
  };
  Poset poset = Poset::from_relation(ids, [&](const std::string& a, const std::string& b) {
    GroupSubset ma = mask_for(a), mb = mask_for(b);
    return (ma & mb) == ma;
  });
  return SubgroupLattice{std::move(subs), std::move(poset)};
}

/// The Frattini subgroup: intersection of all maximal proper subgroups, the
/// whole group when there is none (the trivial group).
inline GroupSubset group_frattini(const FiniteGroup& g,
                                  std::size_t order_cap = kGroupOrderCap) {
  SubgroupLattice lat = subgroup_lattice(g, order_cap);
  auto maximal = coatoms(lat.poset);
  if (maximal.empty()) return full_subset(g);
  GroupSubset phi = full_subset(g);
  for (std::size_t c : maximal) phi &= lat.mask_of(lat.poset.id(c));
  return phi;
}

/// Frattini's notion tested at the group level, quantified over subgroups:
/// g is a non-generator iff no proper subgroup reaches the whole group by
/// adjoining g.  Quantifying over subgroups instead of raw subsets loses
/// nothing, since a subset generates exactly what its closure does.
inline bool is_group_nongenerator(const FiniteGroup& g, std::size_t elem,
                                  std::size_t order_cap = kGroupOrderCap) {
  const GroupSubset full = full_subset(g);
  for (GroupSubset h : all_subgroups(g, order_cap)) {
    if (h == full) continue;
    if (generated_subgroup(g, h | (1u << elem)) == full) return false;
  }
  return true;
}

/// Group elements of the Frattini subgroup mask, ascending.
inline std::vector<std::size_t> subset_elements(GroupSubset mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

/// Embeds a group into a ClosureContext: the ambient poset holds every
/// subgroup and every singleton subset under inclusion, the closed elements
/// are the subgroups.  The smallest closed element above a singleton {g} is
/// then the cyclic subgroup generated by g, which is what the reduction law
/// needs for the bridge back to Frattini's setting.
inline ClosureContext group_closure_context(const FiniteGroup& g,
                                            std::size_t order_cap = kGroupOrderCap) {
  std::set<GroupSubset> universe;
  for (GroupSubset h : all_subgroups(g, order_cap)) universe.insert(h);
  for (std::size_t x = 0; x < g.order(); ++x) universe.insert(1u << x);

  std::vector<std::pair<std::string, GroupSubset>> named;
  std::vector<std::string> ids;
  for (GroupSubset m : universe) {
    ids.push_back(subset_name(m));
    named.emplace_back(ids.back(), m);
  }
  std::sort(named.begin(), named.end());
  auto mask_for = [&](const std::string& id) {
    auto it = std::lower_bound(named.begin(), named.end(), id,
                               [](const auto& p, const std::string& s) { return p.first < s; });
    return it->second;
  };
  Poset ambient = Poset::from_relation(ids, [&](const std::string& a, const std::string& b) {
    GroupSubset ma = mask_for(a), mb = mask_for(b);
    return (ma & mb) == ma;
  });

  std::vector<std::string> closed_ids;
  for (GroupSubset h : all_subgroups(g, order_cap)) closed_ids.push_back(subset_name(h));
  return ClosureContext(std::move(ambient), closed_ids);
}

// Bundled catalog.  Tables are generated programmatically and run through
// the same validator as file input.

inline FiniteGroup cyclic_group(std::size_t n) {
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  return FiniteGroup::from_table(n, 0, std::move(table));
}

/// Z2 x Z2; indices are two-bit vectors, the operation is xor.
inline FiniteGroup klein_four_group() {
  std::vector<std::size_t> table(16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) table[i * 4 + j] = i ^ j;
  return FiniteGroup::from_table(4, 0, std::move(table));
}

/// Symmetric group on three letters; elements are the six permutations of
/// {0,1,2} in lexicographic one-line order, composed as (p*q)(x) = p(q(x)).
inline FiniteGroup symmetric_group_3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto index_of = [&](const std::array<std::size_t, 3>& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::size_t> table(36);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> composed{};
      for (std::size_t x = 0; x < 3; ++x) composed[x] = perms[i][perms[j][x]];
      table[i * 6 + j] = index_of(composed);
    }
  return FiniteGroup::from_table(6, 0, std::move(table));
}

/// Dihedral group of the square, order 8; index = rotation + 4 * flip with
/// the relation flip * rot = rot^-1 * flip.
inline FiniteGroup dihedral_group_4() {
  auto idx = [](std::size_t rot, std::size_t flip) { return rot + 4 * flip; };
  std::vector<std::size_t> table(64);
  for (std::size_t r1 = 0; r1 < 4; ++r1)
    for (std::size_t f1 = 0; f1 < 2; ++f1)
      for (std::size_t r2 = 0; r2 < 4; ++r2)
        for (std::size_t f2 = 0; f2 < 2; ++f2) {
          std::size_t rot = f1 ? (r1 + 4 - r2) % 4 : (r1 + r2) % 4;
          table[idx(r1, f1) * 8 + idx(r2, f2)] = idx(rot, f1 ^ f2);
        }
  return FiniteGroup::from_table(8, 0, std::move(table));
}

/// Quaternion group; indices 0..7 are 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup quaternion_group() {
  // unit: 0=1, 1=i, 2=j, 3=k.  sign in {0,1} for +/-.
  auto idx = [](std::size_t unit, std::size_t sign) { return 2 * unit + sign; };
  // Multiplication of the units i, j, k: result unit and sign.
  auto mul_units = [](std::size_t a, std::size_t b, std::size_t& unit, std::size_t& neg) {
    static constexpr std::size_t unit_table[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr std::size_t sign_table[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    unit = unit_table[a][b];
    neg = sign_table[a][b];
  };
  std::vector<std::size_t> table(64);
  for (std::size_t ua = 0; ua < 4; ++ua)
    for (std::size_t sa = 0; sa < 2; ++sa)
      for (std::size_t ub = 0; ub < 4; ++ub)
        for (std::size_t sb = 0; sb < 2; ++sb) {
          std::size_t unit, neg;
          mul_units(ua, ub, unit, neg);
          table[idx(ua, sa) * 8 + idx(ub, sb)] = idx(unit, sa ^ sb ^ neg);
        }
  return FiniteGroup::from_table(8, 0, std::move(table));
}

struct BundledGroup {
  std::string name;
  FiniteGroup group;
};

/// The bundled catalog: cyclic groups Z2..Z12, the Klein four-group, S3,
/// D4 and Q8.
inline std::vector<BundledGroup> bundled_groups() {
  std::vector<BundledGroup> out;
  for (std::size_t n = 2; n <= 12; ++n)
    out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
  out.push_back({"Z2xZ2", klein_four_group()});
  out.push_back({"S3", symmetric_group_3()});
  out.push_back({"D4", dihedral_group_4()});
  out.push_back({"Q8", quaternion_group()});
  return out;
}

}  // namespace frattini
