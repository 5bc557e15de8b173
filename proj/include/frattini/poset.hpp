#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frattini/errors.hpp"

// Finite partially ordered sets with a distinguished maximum, plus the
// primitive order predicates everything else is built on.  Elements are
// opaque strings; internally they are indices into a lexicographically
// sorted id table, so every iteration order is deterministic.  The order
// itself is materialized as a dense boolean matrix: all the algorithms in
// this library are relation queries on small ground sets.

namespace frattini {

/// Declarative form of a poset: element names plus Hasse (cover) edges.
/// This is what the file format parses into; a maximum is not required
/// here, only at Poset construction.
struct PosetSpec {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};

/// Sorted id table plus the reflexive-transitive closure of a cover set.
/// Intermediate form shared by Poset construction and the coatom gadget,
/// which must accept inputs without a maximum.
struct ClosedRelation {
  std::vector<std::string> ids;  // sorted, unique
  std::vector<std::uint8_t> leq;  // ids.size() x ids.size(), row-major

  std::size_t size() const { return ids.size(); }
  bool at(std::size_t a, std::size_t b) const { return leq[a * ids.size() + b] != 0; }
};

namespace detail {

inline std::vector<std::string> sorted_unique_ids(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  auto dup = std::adjacent_find(ids.begin(), ids.end());
  if (dup != ids.end()) throw DuplicateElement("duplicate element id: " + *dup);
  return ids;
}

inline std::size_t index_in(const std::vector<std::string>& ids, std::string_view id) {
  auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id)
    throw UnknownElement("unknown element id: " + std::string(id));
  return static_cast<std::size_t>(it - ids.begin());
}

}  // namespace detail

/// Reflexive-transitive closure of a cover list, with antisymmetry checked.
/// Accepts inputs with no maximum (the gadget construction needs those).
inline ClosedRelation close_covers(const PosetSpec& spec) {
  ClosedRelation rel;
  if (spec.elements.empty()) throw NoMaximum("poset must contain at least one element");
  rel.ids = detail::sorted_unique_ids(spec.elements);
  const std::size_t n = rel.ids.size();
  rel.leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel.leq[i * n + i] = 1;
  for (const auto& [lo, hi] : spec.covers) {
    if (lo == hi) throw SelfCover("self-cover on element: " + lo);
    rel.leq[detail::index_in(rel.ids, lo) * n + detail::index_in(rel.ids, hi)] = 1;
  }
  // Warshall closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel.leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel.leq[k * n + j]) rel.leq[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rel.leq[i * n + j] && rel.leq[j * n + i])
        throw CycleDetected("cycle through elements " + rel.ids[i] + " and " + rel.ids[j]);
  return rel;
}

/// Maximal elements of a closed relation (no strict successor at all).
inline std::vector<std::size_t> maximal_of(const ClosedRelation& rel) {
  std::vector<std::size_t> out;
  const std::size_t n = rel.size();
  for (std::size_t p = 0; p < n; ++p) {
    bool topped = false;
    for (std::size_t q = 0; q < n && !topped; ++q)
      if (q != p && rel.at(p, q)) topped = true;
    if (!topped) out.push_back(p);
  }
  return out;
}

/// A finite poset with a maximum.  Immutable after construction and safe to
/// share across threads; every operation on it is a pure function.
class Poset {
 public:
  /// Builds from element names and cover pairs; the order is the
  /// reflexive-transitive closure of the covers and the maximum is detected
  /// as the unique element above all others.
  static Poset from_covers(const PosetSpec& spec) {
    return Poset(close_covers(spec));
  }

  static Poset from_covers(std::vector<std::string> elements,
                           std::vector<std::pair<std::string, std::string>> covers) {
    return from_covers(PosetSpec{std::move(elements), std::move(covers)});
  }

  /// Builds from an explicit relation on names; the order axioms are
  /// validated rather than assumed.
  static Poset from_relation(std::vector<std::string> elements,
                             const std::function<bool(const std::string&, const std::string&)>& leq) {
    if (elements.empty()) throw NoMaximum("poset must contain at least one element");
    ClosedRelation rel;
    rel.ids = detail::sorted_unique_ids(std::move(elements));
    const std::size_t n = rel.ids.size();
    rel.leq.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rel.leq[i * n + j] = leq(rel.ids[i], rel.ids[j]) ? 1 : 0;
    for (std::size_t i = 0; i < n; ++i)
      if (!rel.at(i, i)) throw OrderViolation("relation not reflexive at " + rel.ids[i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rel.at(i, j) && rel.at(j, i))
          throw CycleDetected("relation not antisymmetric on " + rel.ids[i] + ", " + rel.ids[j]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel.at(i, j))
          for (std::size_t k = 0; k < n; ++k)
            if (rel.at(j, k) && !rel.at(i, k))
              throw OrderViolation("relation not transitive via " + rel.ids[j]);
    return Poset(std::move(rel));
  }

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t i) const { return ids_[i]; }
  std::size_t index_of(std::string_view id) const { return detail::index_in(ids_, id); }
  std::size_t top() const { return top_; }

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * ids_.size() + b] != 0; }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// Cover pairs (a, b) of the order: a < b with nothing strictly between.
  /// This is the transitive reduction, i.e. the Hasse diagram edge set.
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    const std::size_t n = size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (!less(a, b)) continue;
        bool direct = true;
        for (std::size_t c = 0; c < n && direct; ++c)
          if (less(a, c) && less(c, b)) direct = false;
        if (direct) covers.emplace_back(a, b);
      }
    return covers;
  }

  /// Cover pairs as id strings, for serialization.
  PosetSpec to_spec() const {
    PosetSpec spec;
    spec.elements = ids_;
    for (auto [a, b] : cover_pairs()) spec.covers.emplace_back(ids_[a], ids_[b]);
    return spec;
  }

  /// The poset induced on a subset of elements (given by index).  The subset
  /// must still have a maximum, e.g. because it contains top().
  Poset induced(const std::vector<std::size_t>& subset) const {
    std::vector<std::string> sub_ids;
    sub_ids.reserve(subset.size());
    for (std::size_t i : subset) sub_ids.push_back(ids_[i]);
    const Poset& self = *this;
    return from_relation(std::move(sub_ids), [&self](const std::string& a, const std::string& b) {
      return self.leq(self.index_of(a), self.index_of(b));
    });
  }

 private:
  explicit Poset(ClosedRelation rel) : ids_(std::move(rel.ids)), leq_(std::move(rel.leq)) {
    const std::size_t n = ids_.size();
    bool found = false;
    for (std::size_t t = 0; t < n && !found; ++t) {
      bool above_all = true;
      for (std::size_t x = 0; x < n && above_all; ++x)
        if (!leq(x, t)) above_all = false;
      if (above_all) {
        top_ = t;
        found = true;
      }
    }
    if (!found) throw NoMaximum("no element lies above every other element");
  }

  std::vector<std::string> ids_;
  std::vector<std::uint8_t> leq_;
  std::size_t top_ = 0;
};

/// Elements p maximal among those strictly below the top: p < 1 and no q
/// with p < q < 1.  Ascending index order.
inline std::vector<std::size_t> coatoms(const Poset& p) {
  std::vector<std::size_t> out;
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (a == p.top()) continue;
    bool covered_indirectly = false;
    for (std::size_t q = 0; q < n && !covered_indirectly; ++q)
      if (q != p.top() && p.less(a, q)) covered_indirectly = true;
    if (!covered_indirectly) out.push_back(a);
  }
  return out;
}

/// True iff a and b have no common upper bound strictly below the top;
/// written a ∨ b = 1 even when the join does not literally exist.
inline bool joins_to_top(const Poset& p, std::size_t a, std::size_t b) {
  const std::size_t n = p.size();
  for (std::size_t u = 0; u < n; ++u)
    if (u != p.top() && p.leq(a, u) && p.leq(b, u)) return false;
  return true;
}

/// True iff no element strictly below the top bounds every member of xs:
/// "xs generates the whole structure".  The empty family generates only in
/// the one-element poset (no proper element exists to bound it).
inline bool generates_top(const Poset& p, const std::vector<std::size_t>& xs) {
  const std::size_t n = p.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (u == p.top()) continue;
    bool bounds_all = true;
    for (std::size_t x : xs)
      if (!p.leq(x, u)) {
        bounds_all = false;
        break;
      }
    if (bounds_all) return false;
  }
  return true;
}

/// Least common upper bound of a and b, if one exists.
inline std::optional<std::size_t> partial_join(const Poset& p, std::size_t a, std::size_t b) {
  const std::size_t n = p.size();
  std::vector<std::size_t> ubs;
  for (std::size_t u = 0; u < n; ++u)
    if (p.leq(a, u) && p.leq(b, u)) ubs.push_back(u);
  for (std::size_t u : ubs) {
    bool least = true;
    for (std::size_t v : ubs)
      if (!p.leq(u, v)) {
        least = false;
        break;
      }
    if (least) return u;
  }
  return std::nullopt;
}

/// Greatest common lower bound of a nonempty family, if one exists.  The
/// empty family is an explicit error: the no-coatom case has its own
/// convention and callers must apply it themselves.
inline std::optional<std::size_t> partial_meet(const Poset& p, const std::vector<std::size_t>& xs) {
  if (xs.empty()) throw EmptyMeetRequest("meet of the empty family requested");
  const std::size_t n = p.size();
  std::vector<std::size_t> lbs;
  for (std::size_t u = 0; u < n; ++u) {
    bool below_all = true;
    for (std::size_t x : xs)
      if (!p.leq(u, x)) {
        below_all = false;
        break;
      }
    if (below_all) lbs.push_back(u);
  }
  for (std::size_t u : lbs) {
    bool greatest = true;
    for (std::size_t v : lbs)
      if (!p.leq(v, u)) {
        greatest = false;
        break;
      }
    if (greatest) return u;
  }
  return std::nullopt;
}

/// True iff every pair of binary joins exists.
inline bool is_join_semilattice(const Poset& p) {
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!partial_join(p, a, b)) return false;
  return true;
}

}  // namespace frattini
