#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frattini/chains.hpp"
#include "frattini/laws.hpp"
#include "frattini/nongen.hpp"
#include "frattini/poset.hpp"

// The top-compactness hierarchy and the Frattini element Φ, the meet of all
// coatoms.  On finite posets every element is top-compact and the whole
// hierarchy collapses to true; the checkers still evaluate the definitions
// honestly so that very collapse can be asserted rather than assumed.

namespace frattini {

/// Why an element-valued result is absent.  Machine-readable; serialized
/// verbatim into reports.
enum class AbsentReason { NoMeet, EmptyFamily, NoJoin };

inline const char* to_string(AbsentReason r) {
  switch (r) {
    case AbsentReason::NoMeet: return "NoMeet";
    case AbsentReason::EmptyFamily: return "EmptyFamily";
    case AbsentReason::NoJoin: return "NoJoin";
  }
  return "?";
}

/// An element index, or a reason there is none.
struct MaybeElement {
  std::optional<std::size_t> value;
  std::optional<AbsentReason> reason;

  static MaybeElement present(std::size_t v) { return {v, std::nullopt}; }
  static MaybeElement absent(AbsentReason r) { return {std::nullopt, r}; }
  bool has_value() const { return value.has_value(); }
};

/// Top-compact: whenever a chain generates the top, a lies below some chain
/// member.  Chains here may contain the top itself.
inline bool is_top_compact(const Poset& p, std::size_t a,
                           std::size_t chain_cap = kDefaultChainCap) {
  bool ok = true;
  for_each_chain(
      p, /*proper_only=*/false,
      [&](const std::vector<std::size_t>& chain) {
        if (!generates_top(p, chain)) return true;
        for (std::size_t m : chain)
          if (p.leq(a, m)) return true;
        ok = false;
        return false;
      },
      chain_cap);
  return ok;
}

/// Weakly top-compact: for every unbounded proper chain, some member shares
/// a proper bound with a.  Quantifies over chains of proper elements only;
/// a chain through the top has no proper bound above its top member, so the
/// weakened conclusion is only meaningful below the top.
inline bool is_weakly_top_compact(const Poset& p, std::size_t a,
                                  std::size_t chain_cap = kDefaultChainCap) {
  const std::size_t n = p.size();
  bool ok = true;
  for_each_chain(
      p, /*proper_only=*/true,
      [&](const std::vector<std::size_t>& chain) {
        if (!generates_top(p, chain)) return true;
        for (std::size_t m : chain)
          for (std::size_t r = 0; r < n; ++r)
            if (r != p.top() && p.leq(m, r) && p.leq(a, r)) return true;
        ok = false;
        return false;
      },
      chain_cap);
  return ok;
}

/// Very weakly top-compact: as weakly, but only against chains none of whose
/// members extends to a coatom.
inline bool is_very_weakly_top_compact(const Poset& p, std::size_t a,
                                       std::size_t chain_cap = kDefaultChainCap) {
  const std::size_t n = p.size();
  bool ok = true;
  for_each_chain(
      p, /*proper_only=*/true,
      [&](const std::vector<std::size_t>& chain) {
        if (!generates_top(p, chain)) return true;
        for (std::size_t m : chain)
          if (extends_to_coatom(p, m)) return true;
        for (std::size_t m : chain)
          for (std::size_t r = 0; r < n; ++r)
            if (r != p.top() && p.leq(m, r) && p.leq(a, r)) return true;
        ok = false;
        return false;
      },
      chain_cap);
  return ok;
}

/// Compactness classification of one element.  By definition weakening the
/// three booleans always imply each other left to right.
struct CompactnessClass {
  std::string element;
  bool top_compact = false;
  bool weakly = false;
  bool very_weakly = false;

  bool implication_chain_holds() const {
    return (!top_compact || weakly) && (!weakly || very_weakly);
  }
};

inline CompactnessClass compactness_class(const Poset& p, std::size_t a,
                                          std::size_t chain_cap = kDefaultChainCap) {
  return CompactnessClass{p.id(a), is_top_compact(p, a, chain_cap),
                          is_weakly_top_compact(p, a, chain_cap),
                          is_very_weakly_top_compact(p, a, chain_cap)};
}

/// The Frattini element: the meet of all coatoms, taken to be the top when
/// there is no coatom at all.  Absent(NoMeet) when the meet does not exist.
inline MaybeElement frattini_element(const Poset& p) {
  auto cs = coatoms(p);
  if (cs.empty()) return MaybeElement::present(p.top());
  if (auto m = partial_meet(p, cs)) return MaybeElement::present(*m);
  return MaybeElement::absent(AbsentReason::NoMeet);
}

/// Least upper bound of the set of non-generators.  Absent(EmptyFamily) when
/// there is no non-generator at all; no bottom element is invented for that
/// case.  Absent(NoJoin) when the family is nonempty but has no least bound.
inline MaybeElement nongenerator_join(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> gens;
  for (std::size_t a = 0; a < n; ++a)
    if (is_nongenerator(p, a)) gens.push_back(a);
  if (gens.empty()) return MaybeElement::absent(AbsentReason::EmptyFamily);
  std::vector<std::size_t> ubs;
  for (std::size_t u = 0; u < n; ++u) {
    bool above_all = true;
    for (std::size_t g : gens)
      if (!p.leq(g, u)) {
        above_all = false;
        break;
      }
    if (above_all) ubs.push_back(u);
  }
  for (std::size_t u : ubs) {
    bool least = true;
    for (std::size_t v : ubs)
      if (!p.leq(u, v)) {
        least = false;
        break;
      }
    if (least) return MaybeElement::present(u);
  }
  return MaybeElement::absent(AbsentReason::NoJoin);
}

/// Φ side by side with the join of all non-generators, and whether the two
/// routes agree (both present and equal, or both absent).
struct FrattiniResult {
  MaybeElement phi;
  std::vector<std::size_t> coatom_set;
  MaybeElement nongen_join;
  bool agree = false;
};

inline FrattiniResult frattini_result(const Poset& p) {
  FrattiniResult r{frattini_element(p), coatoms(p), nongenerator_join(p), false};
  if (r.phi.has_value() && r.nongen_join.has_value())
    r.agree = *r.phi.value == *r.nongen_join.value;
  else
    r.agree = !r.phi.has_value() && !r.nongen_join.has_value();
  return r;
}

/// For every very weakly top-compact element, being a non-generator is the
/// same as lying below every coatom.
inline LawCheck check_nongen_coatom_law(const Poset& p,
                                        std::size_t chain_cap = kDefaultChainCap) {
  LawCheck law("compact-nongen-coatom");
  const std::size_t n = p.size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!is_very_weakly_top_compact(p, a, chain_cap)) {
      ++law.cases_skipped;
      continue;
    }
    ++law.cases_checked;
    if (is_nongenerator(p, a) != below_all_coatoms(p, a))
      law.fail("element " + p.id(a) + ": non-generator=" +
               (is_nongenerator(p, a) ? "true" : "false") + " but below-all-coatoms=" +
               (below_all_coatoms(p, a) ? "true" : "false"));
  }
  return law;
}

/// The three Φ-versus-non-generator-join laws:
///  - if Φ exists and is very weakly top-compact, it is the join of all
///    non-generators;
///  - on a poset all of whose elements are very weakly top-compact, Φ exists
///    iff that join exists, and they coincide;
///  - on a finite join-semilattice with at least one non-generator, Φ exists
///    and equals the join of the non-generators (skipped, not failed, when
///    the poset is not a join-semilattice).
inline std::vector<LawCheck> check_frattini_join_laws(const Poset& p,
                                                      std::size_t chain_cap = kDefaultChainCap) {
  const FrattiniResult fr = frattini_result(p);
  const std::size_t n = p.size();

  LawCheck compact_phi("frattini-is-nongen-join");
  if (fr.phi.has_value() && is_very_weakly_top_compact(p, *fr.phi.value, chain_cap)) {
    ++compact_phi.cases_checked;
    if (!fr.nongen_join.has_value())
      compact_phi.fail("phi " + p.id(*fr.phi.value) + " exists but the non-generator join does not (" +
                       to_string(*fr.nongen_join.reason) + ")");
    else if (*fr.nongen_join.value != *fr.phi.value)
      compact_phi.fail("phi " + p.id(*fr.phi.value) + " != non-generator join " +
                       p.id(*fr.nongen_join.value));
  } else {
    ++compact_phi.cases_skipped;
    compact_phi.skip_reason =
        fr.phi.has_value() ? "phi not very weakly top-compact" : "phi absent";
  }

  LawCheck iff("frattini-exists-iff-nongen-join");
  bool all_vw = true;
  for (std::size_t a = 0; a < n && all_vw; ++a)
    if (!is_very_weakly_top_compact(p, a, chain_cap)) all_vw = false;
  if (!all_vw) {
    ++iff.cases_skipped;
    iff.skip_reason = "not every element very weakly top-compact";
  } else {
    ++iff.cases_checked;
    if (fr.phi.has_value() != fr.nongen_join.has_value())
      iff.fail(std::string("phi ") + (fr.phi.has_value() ? "exists" : "absent") +
               " but non-generator join " + (fr.nongen_join.has_value() ? "exists" : "absent"));
    else if (fr.phi.has_value() && *fr.phi.value != *fr.nongen_join.value)
      iff.fail("phi " + p.id(*fr.phi.value) + " != non-generator join " +
               p.id(*fr.nongen_join.value));
  }

  LawCheck semi("semilattice-frattini");
  if (!is_join_semilattice(p)) {
    ++semi.cases_skipped;
    semi.skip_reason = "not a join-semilattice";
  } else {
    std::vector<std::size_t> gens;
    for (std::size_t a = 0; a < n; ++a)
      if (is_nongenerator(p, a)) gens.push_back(a);
    if (gens.empty()) {
      ++semi.cases_skipped;
      semi.skip_reason = "no non-generator";
    } else {
      ++semi.cases_checked;
      // Fold the binary joins; in a join-semilattice each one exists.
      std::size_t folded = gens[0];
      for (std::size_t i = 1; i < gens.size(); ++i) folded = *partial_join(p, folded, gens[i]);
      if (!fr.phi.has_value())
        semi.fail("join-semilattice with non-generators but phi absent");
      else if (*fr.phi.value != folded)
        semi.fail("phi " + p.id(*fr.phi.value) + " != folded non-generator join " + p.id(folded));
    }
  }

  return {compact_phi, iff, semi};
}

}  // namespace frattini
