#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "frattini/errors.hpp"
#include "frattini/laws.hpp"
#include "frattini/nongen.hpp"
#include "frattini/poset.hpp"

// Closed elements inside an ambient poset.  A ClosureContext distinguishes a
// subset of "closed" elements containing the top; generation and
// non-generation are then judged against closed bounds only.  The reduction
// law says this adds nothing: an element is a non-generator relative to the
// closed family exactly when its smallest closed superelement is a
// non-generator of the induced poset of closed elements.  Moore families
// (intersection-closed set systems) are the concrete model.

namespace frattini {

/// Largest Moore ground set that may be blown up into its full powerset.
inline constexpr std::size_t kMooreGroundCap = 5;

/// An ambient poset with a distinguished subset of closed elements.  The top
/// must be closed; nothing else is assumed about the induced poset.
class ClosureContext {
 public:
  ClosureContext(Poset ambient, const std::vector<std::string>& closed_ids)
      : ambient_(std::move(ambient)), closed_(ambient_.size(), 0) {
    for (const auto& id : closed_ids) closed_[ambient_.index_of(id)] = 1;
    if (!closed_[ambient_.top()])
      throw OrderViolation("the maximum must be a closed element");
  }

  const Poset& ambient() const { return ambient_; }
  bool is_closed(std::size_t i) const { return closed_[i] != 0; }

  std::vector<std::size_t> closed_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient_.size(); ++i)
      if (closed_[i]) out.push_back(i);
    return out;
  }

  /// The poset induced on the closed elements (ids preserved).
  Poset induced_closed_poset() const { return ambient_.induced(closed_indices()); }

 private:
  Poset ambient_;
  std::vector<std::uint8_t> closed_;
};

/// True iff no closed element strictly below the top bounds every member of
/// ys.  With every element closed this is generates_top on the ambient poset.
inline bool generates_top(const ClosureContext& ctx, const std::vector<std::size_t>& ys) {
  const Poset& p = ctx.ambient();
  for (std::size_t b = 0; b < p.size(); ++b) {
    if (b == p.top() || !ctx.is_closed(b)) continue;
    bool bounds_all = true;
    for (std::size_t y : ys)
      if (!p.leq(y, b)) {
        bounds_all = false;
        break;
      }
    if (bounds_all) return false;
  }
  return true;
}

/// Non-generator relative to the closed family: whenever {a, e} generates
/// the top against closed bounds, {e} already does.
inline bool is_nongenerator(const ClosureContext& ctx, std::size_t a) {
  for (std::size_t e = 0; e < ctx.ambient().size(); ++e)
    if (generates_top(ctx, {a, e}) && !generates_top(ctx, {e})) return false;
  return true;
}

/// First e with {a, e} generating but {e} not, if any.
inline std::optional<std::size_t> nongenerator_witness(const ClosureContext& ctx, std::size_t a) {
  for (std::size_t e = 0; e < ctx.ambient().size(); ++e)
    if (generates_top(ctx, {a, e}) && !generates_top(ctx, {e})) return e;
  return std::nullopt;
}

/// The least closed element above a, when one exists.  In a bare context the
/// minimal closed superelements may be incomparable, in which case there is
/// no smallest one.
inline std::optional<std::size_t> smallest_closed_above(const ClosureContext& ctx, std::size_t a) {
  const Poset& p = ctx.ambient();
  std::vector<std::size_t> supers;
  for (std::size_t c = 0; c < p.size(); ++c)
    if (ctx.is_closed(c) && p.leq(a, c)) supers.push_back(c);
  for (std::size_t c : supers) {
    bool least = true;
    for (std::size_t d : supers)
      if (!p.leq(c, d)) {
        least = false;
        break;
      }
    if (least) return c;
  }
  return std::nullopt;
}

/// Reduction law: for every element whose smallest closed superelement
/// exists, relative non-generation in the ambient poset coincides with plain
/// non-generation of that superelement in the induced closed poset.
/// Elements without a smallest closed superelement are counted as skipped;
/// the law says nothing about them.
inline LawCheck check_closure_reduction(const ClosureContext& ctx) {
  LawCheck law("closure-reduction");
  const Poset& p = ctx.ambient();
  const Poset closed = ctx.induced_closed_poset();
  for (std::size_t a = 0; a < p.size(); ++a) {
    auto c = smallest_closed_above(ctx, a);
    if (!c) {
      ++law.cases_skipped;
      continue;
    }
    ++law.cases_checked;
    const bool relative = is_nongenerator(ctx, a);
    const bool reduced = is_nongenerator(closed, closed.index_of(p.id(*c)));
    if (relative != reduced)
      law.fail("element " + p.id(a) + ": relative non-generator=" + (relative ? "true" : "false") +
               " but closed " + p.id(*c) + " non-generator=" + (reduced ? "true" : "false"));
  }
  if (law.cases_skipped > 0) law.skip_reason = "no smallest closed superelement";
  return law;
}

/// An intersection-closed family of subsets of a finite ground set, the
/// ground set itself included.  Sets are bitmasks over the sorted ground.
class MooreFamily {
 public:
  /// Validates (or, with complete set, repairs by closing under pairwise
  /// intersections before validating).  The empty set is not required.
  static MooreFamily from_sets(std::vector<std::string> ground,
                               const std::vector<std::vector<std::string>>& sets,
                               bool complete = false) {
    MooreFamily m;
    m.ground_ = detail::sorted_unique_ids(std::move(ground));
    if (m.ground_.size() > 31) throw GroundTooLarge("ground set too large for set masks");
    std::uint32_t full = m.ground_.empty() ? 0u : (1u << m.ground_.size()) - 1u;
    std::vector<std::uint32_t> masks;
    for (const auto& set : sets) {
      std::uint32_t mask = 0;
      for (const auto& name : set) mask |= 1u << detail::index_in(m.ground_, name);
      masks.push_back(mask);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    if (complete) {
      std::set<std::uint32_t> pool(masks.begin(), masks.end());
      pool.insert(full);
      for (bool grew = true; grew;) {
        grew = false;
        for (auto i = pool.begin(); i != pool.end(); ++i)
          for (auto j = std::next(i); j != pool.end(); ++j)
            if (pool.insert(*i & *j).second) grew = true;
      }
      masks.assign(pool.begin(), pool.end());
    }
    if (!std::binary_search(masks.begin(), masks.end(), full))
      throw OrderViolation("Moore family must contain the ground set");
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (std::size_t j = i + 1; j < masks.size(); ++j)
        if (!std::binary_search(masks.begin(), masks.end(), masks[i] & masks[j]))
          throw OrderViolation("Moore family not closed under intersection of sets " +
                               m.set_name(masks[i]) + " and " + m.set_name(masks[j]));
    m.closed_ = std::move(masks);
    return m;
  }

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<std::uint32_t>& closed_sets() const { return closed_; }

  /// Canonical display name of a subset mask: "{a,b}" with members sorted.
  std::string set_name(std::uint32_t mask) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < ground_.size(); ++i)
      if (mask & (1u << i)) {
        if (!first) s += ",";
        s += ground_[i];
        first = false;
      }
    return s + "}";
  }

 private:
  std::vector<std::string> ground_;
  std::vector<std::uint32_t> closed_;
};

/// Blows a Moore family up into a ClosureContext: the ambient poset is the
/// full powerset of the ground ordered by inclusion, the closed elements are
/// the family's sets.  Guarded by a small ground cap, since the ambient is
/// exponential; every brute-force oracle stays exhaustive below it.
inline ClosureContext moore_to_context(const MooreFamily& m,
                                       std::size_t ground_cap = kMooreGroundCap) {
  if (m.ground().size() > ground_cap)
    throw GroundTooLarge("ground of " + std::to_string(m.ground().size()) +
                         " elements exceeds cap " + std::to_string(ground_cap));
  const std::uint32_t count = 1u << m.ground().size();
  std::vector<std::string> ids;
  std::unordered_map<std::string, std::uint32_t> mask_of;
  ids.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    ids.push_back(m.set_name(mask));
    mask_of.emplace(ids.back(), mask);
  }

  Poset ambient = Poset::from_relation(ids, [&](const std::string& a, const std::string& b) {
    std::uint32_t ma = mask_of.at(a), mb = mask_of.at(b);
    return (ma & mb) == ma;
  });

  std::vector<std::string> closed_ids;
  for (std::uint32_t mask : m.closed_sets()) closed_ids.push_back(m.set_name(mask));
  return ClosureContext(std::move(ambient), closed_ids);
}

}  // namespace frattini
