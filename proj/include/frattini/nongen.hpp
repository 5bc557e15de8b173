#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frattini/chains.hpp"
#include "frattini/errors.hpp"
#include "frattini/laws.hpp"
#include "frattini/poset.hpp"

// Non-generator detection.  An element a is a non-generator when a ∨ e = 1
// forces e = 1.  Besides the definitional test this module implements three
// further characterizations as independent checkers; their extensional
// agreement on finite posets is the central law this library exists to
// exercise.  It also checks the ideal laws of the non-generator set and
// builds the fresh-coatom extension used in the maximal-or-unbounded
// dichotomy argument.

namespace frattini {

/// Default cap on |X| when quantifying over subsets in the absorption law.
inline constexpr std::size_t kDefaultSubsetCap = 4;

/// How the chain-based characterizations quantify over chain members.  The
/// two modes are stated to be interchangeable; both are implemented so the
/// claim can be exercised, with ForEveryMember as the normative checker.
enum class ChainClauseMode { ForEveryMember, ForSomeMember };

/// Definitional test: for every e, a ∨ e = 1 implies e = 1.
inline bool is_nongenerator(const Poset& p, std::size_t a) {
  const std::size_t n = p.size();
  for (std::size_t e = 0; e < n; ++e)
    if (e != p.top() && joins_to_top(p, a, e)) return false;
  return true;
}

/// First e with a ∨ e = 1 and e ≠ 1, if any; the certificate that a fails
/// to be a non-generator.
inline std::optional<std::size_t> nongenerator_witness(const Poset& p, std::size_t a) {
  const std::size_t n = p.size();
  for (std::size_t e = 0; e < n; ++e)
    if (e != p.top() && joins_to_top(p, a, e)) return e;
  return std::nullopt;
}

/// Shared first clause of the three non-definitional characterizations:
/// a lies below every coatom.
inline bool below_all_coatoms(const Poset& p, std::size_t a) {
  for (std::size_t c : coatoms(p))
    if (!p.leq(a, c)) return false;
  return true;
}

namespace detail {

inline std::optional<std::string> coatom_clause_violation(const Poset& p, std::size_t a) {
  for (std::size_t c : coatoms(p))
    if (!p.leq(a, c)) return "not below coatom " + p.id(c);
  return std::nullopt;
}

}  // namespace detail

/// Characterization via coatoms: a below every coatom, and every proper
/// element with no coatom above it shares a strict proper bound with a.
/// Returns the violated sub-clause when false.
inline std::pair<bool, std::string> nongen_by_coatoms_checked(const Poset& p, std::size_t a) {
  if (auto v = detail::coatom_clause_violation(p, a)) return {false, *v};
  const std::size_t n = p.size();
  for (std::size_t e = 0; e < n; ++e) {
    if (e == p.top() || extends_to_coatom(p, e)) continue;
    bool found = false;
    for (std::size_t r = 0; r < n && !found; ++r)
      if (r != p.top() && p.less(a, r) && p.less(e, r)) found = true;
    if (!found) return {false, "no strict proper bound above both " + p.id(a) + " and " + p.id(e)};
  }
  return {true, {}};
}

inline bool nongen_by_coatoms(const Poset& p, std::size_t a) {
  return nongen_by_coatoms_checked(p, a).first;
}

namespace detail {

/// Clause shared by the two chain characterizations: for the given chain,
/// every member (or some member) has a common bound with a.
inline bool chain_clause_holds(const Poset& p, std::size_t a,
                               const std::vector<std::size_t>& chain, ChainClauseMode mode) {
  const std::size_t n = p.size();
  auto bounded_with_a = [&](std::size_t m) {
    for (std::size_t r = 0; r < n; ++r)
      if (p.leq(a, r) && p.leq(m, r)) return true;
    return false;
  };
  if (mode == ChainClauseMode::ForEveryMember) {
    for (std::size_t m : chain)
      if (!bounded_with_a(m)) return false;
    return true;
  }
  for (std::size_t m : chain)
    if (bounded_with_a(m)) return true;
  return false;
}

inline std::string chain_to_string(const Poset& p, const std::vector<std::size_t>& chain) {
  std::string s = "{";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) s += ",";
    s += p.id(chain[i]);
  }
  return s + "}";
}

}  // namespace detail

/// Characterization via unbounded proper chains: the coatom clause, plus a
/// common-bound requirement against every unbounded proper chain.
inline std::pair<bool, std::string> nongen_by_unbounded_chains_checked(
    const Poset& p, std::size_t a, ChainClauseMode mode = ChainClauseMode::ForEveryMember,
    std::size_t chain_cap = kDefaultChainCap) {
  if (auto v = detail::coatom_clause_violation(p, a)) return {false, *v};
  std::string violation;
  for_each_chain(
      p, /*proper_only=*/true,
      [&](const std::vector<std::size_t>& chain) {
        if (!is_unbounded_proper(p, chain)) return true;
        if (!detail::chain_clause_holds(p, a, chain, mode)) {
          violation = "unbounded proper chain " + detail::chain_to_string(p, chain) +
                      " with no common bound for " + p.id(a);
          return false;
        }
        return true;
      },
      chain_cap);
  return {violation.empty(), violation};
}

inline bool nongen_by_unbounded_chains(const Poset& p, std::size_t a,
                                       ChainClauseMode mode = ChainClauseMode::ForEveryMember,
                                       std::size_t chain_cap = kDefaultChainCap) {
  return nongen_by_unbounded_chains_checked(p, a, mode, chain_cap).first;
}

/// Like the unbounded-chain characterization, but quantifying only over
/// chains none of whose members extends to a coatom.
inline std::pair<bool, std::string> nongen_by_unextendable_chains_checked(
    const Poset& p, std::size_t a, ChainClauseMode mode = ChainClauseMode::ForEveryMember,
    std::size_t chain_cap = kDefaultChainCap) {
  if (auto v = detail::coatom_clause_violation(p, a)) return {false, *v};
  std::string violation;
  for_each_chain(
      p, /*proper_only=*/true,
      [&](const std::vector<std::size_t>& chain) {
        if (!is_unbounded_proper(p, chain)) return true;
        for (std::size_t m : chain)
          if (extends_to_coatom(p, m)) return true;
        if (!detail::chain_clause_holds(p, a, chain, mode)) {
          violation = "unextendable unbounded chain " + detail::chain_to_string(p, chain) +
                      " with no common bound for " + p.id(a);
          return false;
        }
        return true;
      },
      chain_cap);
  return {violation.empty(), violation};
}

inline bool nongen_by_unextendable_chains(const Poset& p, std::size_t a,
                                          ChainClauseMode mode = ChainClauseMode::ForEveryMember,
                                          std::size_t chain_cap = kDefaultChainCap) {
  return nongen_by_unextendable_chains_checked(p, a, mode, chain_cap).first;
}

/// Verdict of all four checkers on one element, kept separate so that any
/// disagreement is reportable as a certificate instead of being collapsed.
struct NonGenVerdict {
  std::string element;
  bool by_definition = false;
  bool by_coatoms = false;
  bool by_chains = false;
  bool by_restricted_chains = false;
  std::string definition_witness;        // the e with a ∨ e = 1, e ≠ 1
  std::string coatom_violation;          // violated sub-clause, when false
  std::string chain_violation;
  std::string restricted_chain_violation;

  bool agree() const {
    return by_definition == by_coatoms && by_definition == by_chains &&
           by_definition == by_restricted_chains;
  }
};

inline NonGenVerdict classify_element(const Poset& p, std::size_t a,
                                      ChainClauseMode mode = ChainClauseMode::ForEveryMember,
                                      std::size_t chain_cap = kDefaultChainCap) {
  NonGenVerdict v;
  v.element = p.id(a);
  v.by_definition = is_nongenerator(p, a);
  if (!v.by_definition) v.definition_witness = p.id(*nongenerator_witness(p, a));
  auto [c2, c2v] = nongen_by_coatoms_checked(p, a);
  v.by_coatoms = c2;
  v.coatom_violation = std::move(c2v);
  auto [c3, c3v] = nongen_by_unbounded_chains_checked(p, a, mode, chain_cap);
  v.by_chains = c3;
  v.chain_violation = std::move(c3v);
  auto [c4, c4v] = nongen_by_unextendable_chains_checked(p, a, mode, chain_cap);
  v.by_restricted_chains = c4;
  v.restricted_chain_violation = std::move(c4v);
  return v;
}

namespace detail {

/// Visits every subset of {0..n-1} of size at most cap, including the empty
/// one, in deterministic order.
template <typename Fn>
void for_each_small_subset(std::size_t n, std::size_t cap, std::vector<std::size_t>& current,
                           std::size_t start, Fn&& fn) {
  fn(static_cast<const std::vector<std::size_t>&>(current));
  if (current.size() == cap) return;
  for (std::size_t i = start; i < n; ++i) {
    current.push_back(i);
    for_each_small_subset(n, cap, current, i + 1, fn);
    current.pop_back();
  }
}

}  // namespace detail

/// Exhaustive check that the non-generator set behaves like an ideal:
/// downward closed, closed under existing binary joins, and absorbable out
/// of any generating family (capped subset size for the last law).
inline std::vector<LawCheck> check_ideal_laws(const Poset& p,
                                              std::size_t subset_cap = kDefaultSubsetCap) {
  const std::size_t n = p.size();
  std::vector<std::size_t> nongens;
  for (std::size_t a = 0; a < n; ++a)
    if (is_nongenerator(p, a)) nongens.push_back(a);
  auto is_ng = [&](std::size_t x) {
    return std::binary_search(nongens.begin(), nongens.end(), x);
  };

  LawCheck down("nongen-downward-closed");
  for (std::size_t a : nongens)
    for (std::size_t b = 0; b < n; ++b)
      if (p.leq(b, a)) {
        ++down.cases_checked;
        if (!is_ng(b))
          down.fail(p.id(b) + " <= non-generator " + p.id(a) + " but is not a non-generator");
      }

  LawCheck join("nongen-join-closed");
  for (std::size_t a : nongens)
    for (std::size_t b : nongens)
      if (auto j = partial_join(p, a, b)) {
        ++join.cases_checked;
        if (!is_ng(*j))
          join.fail("join " + p.id(*j) + " of non-generators " + p.id(a) + ", " + p.id(b) +
                    " is not a non-generator");
      }

  LawCheck absorb("nongen-subset-absorption");
  std::vector<std::size_t> subset;
  for (std::size_t a : nongens) {
    detail::for_each_small_subset(n, subset_cap, subset, 0, [&](const std::vector<std::size_t>& xs) {
      std::vector<std::size_t> with_a = xs;
      with_a.push_back(a);
      ++absorb.cases_checked;
      if (generates_top(p, with_a) && !generates_top(p, xs))
        absorb.fail("dropping non-generator " + p.id(a) + " from generating family " +
                    detail::chain_to_string(p, with_a) + " loses generation");
    });
  }

  return {down, join, absorb};
}

/// Result of extending a poset with a fresh top and a fresh coatom that is
/// incomparable to everything else.
struct CoatomGadget {
  PosetSpec spec;                       // serializable form of the extension
  Poset poset;                          // the validated extension
  std::vector<std::string> q_maximal;   // maximal elements of the input
  std::string top_id;
  std::string coatom_id;
};

/// Builds P = Q ∪ {top, a} with every element of Q below the new top, the
/// fresh a below the top only, and a incomparable to all of Q.  Q may be any
/// nonempty finite poset; a maximum of its own is treated as an ordinary
/// element.  The fresh names must not collide with Q's elements.
inline CoatomGadget adjoin_free_coatom(const PosetSpec& q, const std::string& top_id = "1",
                                       const std::string& coatom_id = "a") {
  ClosedRelation q_rel = close_covers(q);  // validates Q, tolerates no-maximum
  for (const auto& id : q_rel.ids)
    if (id == top_id || id == coatom_id)
      throw NameClash("fresh id '" + id + "' already names an element of the input");
  if (top_id == coatom_id) throw NameClash("fresh top and coatom ids coincide");

  CoatomGadget out{q, Poset::from_covers({top_id}, {}), {}, top_id, coatom_id};
  for (std::size_t m : maximal_of(q_rel)) out.q_maximal.push_back(q_rel.ids[m]);

  out.spec.elements.push_back(top_id);
  out.spec.elements.push_back(coatom_id);
  for (const auto& m : out.q_maximal) out.spec.covers.emplace_back(m, top_id);
  out.spec.covers.emplace_back(coatom_id, top_id);
  out.poset = Poset::from_covers(out.spec);
  return out;
}

}  // namespace frattini
