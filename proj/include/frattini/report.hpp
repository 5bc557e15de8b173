#pragma once

#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frattini/chains.hpp"
#include "frattini/closure.hpp"
#include "frattini/frattini.hpp"
#include "frattini/laws.hpp"
#include "frattini/nongen.hpp"
#include "frattini/poset.hpp"

// Report assembly: one classification row per element plus the law-suite
// results, with everything ordered by element id so a report is a pure
// function of its input.  Rows may be computed in parallel; assembly order
// never depends on scheduling.

namespace frattini {

struct AnalysisOptions {
  std::size_t chain_cap = kDefaultChainCap;
  std::size_t subset_cap = kDefaultSubsetCap;
  ChainClauseMode chain_mode = ChainClauseMode::ForEveryMember;
  bool compare_chain_modes = false;  // also run the ForSomeMember checkers
  bool parallel = false;
};

struct ElementRow {
  NonGenVerdict verdict;
  CompactnessClass compact;
  bool below_all_coatoms = false;
};

struct AnalysisReport {
  std::string schema_version = "1";
  std::string input_digest;
  std::vector<ElementRow> rows;  // ascending element id
  std::vector<std::string> coatom_ids;
  MaybeElement phi;
  std::string phi_id;         // empty when absent
  MaybeElement nongen_join;
  std::string nongen_join_id; // empty when absent
  bool phi_agrees = false;
  std::vector<LawCheck> laws;

  // Present only for closure-context inputs.
  struct ClosureSection {
    std::vector<std::string> closed_ids;
    std::vector<std::pair<std::string, std::string>> smallest_closed;  // (element, closed or "-")
    std::vector<std::pair<std::string, bool>> relative_nongen;
    LawCheck reduction;
  };
  std::optional<ClosureSection> closure;

  bool all_laws_pass() const {
    for (const LawCheck& law : laws)
      if (!law.passed) return false;
    if (closure && !closure->reduction.passed) return false;
    return true;
  }
};

/// FNV-1a over a canonical rendering of the input; reports carry it so any
/// two runs over the same mathematical object are comparable at a glance.
inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (std::size_t i = 0; i < 16; ++i) out[15 - i] = digits[(v >> (4 * i)) & 0xf];
  return out;
}

inline std::string canonical_form(const Poset& p) {
  std::string s = "poset;elements=";
  for (const auto& id : p.ids()) s += id + ",";
  s += ";covers=";
  for (auto [a, b] : p.cover_pairs()) s += p.id(a) + "<" + p.id(b) + ",";
  return s;
}

inline std::string input_digest(const Poset& p) { return hex64(fnv1a64(canonical_form(p))); }

namespace detail {

inline ElementRow make_row(const Poset& p, std::size_t a, const AnalysisOptions& opts) {
  ElementRow row;
  row.verdict = classify_element(p, a, opts.chain_mode, opts.chain_cap);
  row.compact = compactness_class(p, a, opts.chain_cap);
  row.below_all_coatoms = below_all_coatoms(p, a);
  return row;
}

}  // namespace detail

/// Classifies every element and runs the full law suite.  With parallel set,
/// rows are computed via futures and joined in index order, so the report is
/// byte-identical either way.
inline AnalysisReport analyze_poset(const Poset& p, const AnalysisOptions& opts = {}) {
  AnalysisReport report;
  report.input_digest = input_digest(p);

  const std::size_t n = p.size();
  report.rows.resize(n);
  if (opts.parallel && n > 1) {
    std::vector<std::future<ElementRow>> futures;
    futures.reserve(n);
    for (std::size_t a = 0; a < n; ++a)
      futures.push_back(std::async(std::launch::async,
                                   [&p, a, &opts] { return detail::make_row(p, a, opts); }));
    for (std::size_t a = 0; a < n; ++a) report.rows[a] = futures[a].get();
  } else {
    for (std::size_t a = 0; a < n; ++a) report.rows[a] = detail::make_row(p, a, opts);
  }

  for (std::size_t c : coatoms(p)) report.coatom_ids.push_back(p.id(c));
  FrattiniResult fr = frattini_result(p);
  report.phi = fr.phi;
  if (fr.phi.has_value()) report.phi_id = p.id(*fr.phi.value);
  report.nongen_join = fr.nongen_join;
  if (fr.nongen_join.has_value()) report.nongen_join_id = p.id(*fr.nongen_join.value);
  report.phi_agrees = fr.agree;

  LawCheck agreement("characterizations-agree");
  for (const ElementRow& row : report.rows) {
    ++agreement.cases_checked;
    if (!row.verdict.agree())
      agreement.fail("element " + row.verdict.element + ": definition=" +
                     (row.verdict.by_definition ? "true" : "false") + " coatoms=" +
                     (row.verdict.by_coatoms ? "true" : "false") + " chains=" +
                     (row.verdict.by_chains ? "true" : "false") + " restricted=" +
                     (row.verdict.by_restricted_chains ? "true" : "false"));
  }
  report.laws.push_back(std::move(agreement));

  if (opts.compare_chain_modes) {
    LawCheck modes("chain-clause-modes-agree");
    for (std::size_t a = 0; a < n; ++a) {
      ++modes.cases_checked;
      bool every3 = nongen_by_unbounded_chains(p, a, ChainClauseMode::ForEveryMember, opts.chain_cap);
      bool some3 = nongen_by_unbounded_chains(p, a, ChainClauseMode::ForSomeMember, opts.chain_cap);
      bool every4 = nongen_by_unextendable_chains(p, a, ChainClauseMode::ForEveryMember, opts.chain_cap);
      bool some4 = nongen_by_unextendable_chains(p, a, ChainClauseMode::ForSomeMember, opts.chain_cap);
      if (every3 != some3 || every4 != some4)
        modes.fail("element " + p.id(a) + ": for-every and for-some checkers disagree");
    }
    report.laws.push_back(std::move(modes));
  }

  for (LawCheck& law : check_ideal_laws(p, opts.subset_cap)) report.laws.push_back(std::move(law));
  report.laws.push_back(check_nongen_coatom_law(p, opts.chain_cap));
  for (LawCheck& law : check_frattini_join_laws(p, opts.chain_cap))
    report.laws.push_back(std::move(law));
  return report;
}

/// Analysis of a closure context: the ambient poset's full report plus the
/// closure section with the reduction law.
inline AnalysisReport analyze_context(const ClosureContext& ctx, const AnalysisOptions& opts = {}) {
  AnalysisReport report = analyze_poset(ctx.ambient(), opts);
  AnalysisReport::ClosureSection section;
  const Poset& p = ctx.ambient();
  for (std::size_t c : ctx.closed_indices()) section.closed_ids.push_back(p.id(c));
  for (std::size_t a = 0; a < p.size(); ++a) {
    auto c = smallest_closed_above(ctx, a);
    section.smallest_closed.emplace_back(p.id(a), c ? p.id(*c) : "-");
    section.relative_nongen.emplace_back(p.id(a), is_nongenerator(ctx, a));
  }
  section.reduction = check_closure_reduction(ctx);
  std::string digest_src = canonical_form(p) + ";closed=";
  for (const auto& id : section.closed_ids) digest_src += id + ",";
  report.input_digest = hex64(fnv1a64(digest_src));
  report.closure = std::move(section);
  return report;
}

}  // namespace frattini
