#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "frattini/builders.hpp"
#include "frattini/closure.hpp"
#include "frattini/errors.hpp"
#include "frattini/group.hpp"
#include "frattini/poset.hpp"
#include "frattini/report.hpp"

// File formats and renderings.  Input documents are JSON: a poset is
// {"elements": [...], "covers": [["a","b"], ...]}, a Moore family is
// {"ground": [...], "closed_sets": [[...], ...]}, a group is {"order": n,
// "identity": i, "table": [[...], ...]}.  Reports render as fixed-layout
// text or as JSON with insertion-ordered keys; both are byte-deterministic.

namespace frattini {

using json = nlohmann::ordered_json;

namespace detail {

inline long line_of_offset(const std::string& text, std::size_t offset) {
  long line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of_offset(text, e.byte));
  }
}

inline std::vector<std::string> string_list(const json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_array())
    throw ParseError("missing or non-array field '" + field + "'");
  std::vector<std::string> out;
  for (const auto& item : j[field]) {
    if (!item.is_string()) throw ParseError("field '" + field + "' must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace detail

enum class InputKind { Poset, Moore, Group };

/// What a document describes, judged by its fields.
inline InputKind detect_input(const std::string& text) {
  json j = detail::parse_json(text);
  if (j.contains("elements")) return InputKind::Poset;
  if (j.contains("ground")) return InputKind::Moore;
  if (j.contains("table")) return InputKind::Group;
  throw ParseError("document has none of the fields 'elements', 'ground', 'table'");
}

/// Parses {"elements", "covers"}; duplicates and self-covers are rejected
/// here, before any order-theoretic validation runs.
inline PosetSpec parse_poset_spec(const std::string& text) {
  json j = detail::parse_json(text);
  PosetSpec spec;
  spec.elements = detail::string_list(j, "elements");
  {
    std::vector<std::string> sorted = spec.elements;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw ParseError("duplicate element '" + *dup + "'");
  }
  if (!j.contains("covers") || !j["covers"].is_array())
    throw ParseError("missing or non-array field 'covers'");
  for (const auto& pair : j["covers"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw ParseError("each cover must be a pair of element names");
    std::string lo = pair[0].get<std::string>(), hi = pair[1].get<std::string>();
    if (lo == hi) throw ParseError("self-cover on element '" + lo + "'");
    if (std::find(spec.elements.begin(), spec.elements.end(), lo) == spec.elements.end())
      throw ParseError("cover names unknown element '" + lo + "'");
    if (std::find(spec.elements.begin(), spec.elements.end(), hi) == spec.elements.end())
      throw ParseError("cover names unknown element '" + hi + "'");
    spec.covers.emplace_back(std::move(lo), std::move(hi));
  }
  return spec;
}

inline std::string write_poset_spec(const PosetSpec& spec) {
  json j;
  j["elements"] = spec.elements;
  json covers = json::array();
  for (const auto& [a, b] : spec.covers) covers.push_back(json::array({a, b}));
  j["covers"] = std::move(covers);
  return j.dump(2) + "\n";
}

/// Parses {"ground", "closed_sets"}; with complete set, the family is closed
/// under intersections before validation instead of being rejected.
inline MooreFamily parse_moore_family(const std::string& text, bool complete = false) {
  json j = detail::parse_json(text);
  std::vector<std::string> ground = detail::string_list(j, "ground");
  if (!j.contains("closed_sets") || !j["closed_sets"].is_array())
    throw ParseError("missing or non-array field 'closed_sets'");
  std::vector<std::vector<std::string>> sets;
  for (const auto& set : j["closed_sets"]) {
    if (!set.is_array()) throw ParseError("each closed set must be an array of element names");
    std::vector<std::string> names;
    for (const auto& name : set) {
      if (!name.is_string()) throw ParseError("closed-set members must be strings");
      names.push_back(name.get<std::string>());
    }
    sets.push_back(std::move(names));
  }
  return MooreFamily::from_sets(std::move(ground), sets, complete);
}

/// Parses {"order", "identity", "table"} with a row-major table.
inline FiniteGroup parse_group(const std::string& text) {
  json j = detail::parse_json(text);
  if (!j.contains("order") || !j["order"].is_number_unsigned())
    throw ParseError("missing or non-numeric field 'order'");
  if (!j.contains("identity") || !j["identity"].is_number_unsigned())
    throw ParseError("missing or non-numeric field 'identity'");
  if (!j.contains("table") || !j["table"].is_array())
    throw ParseError("missing or non-array field 'table'");
  std::size_t order = j["order"].get<std::size_t>();
  std::vector<std::size_t> table;
  for (const auto& row : j["table"]) {
    if (!row.is_array()) throw ParseError("table rows must be arrays");
    for (const auto& cell : row) {
      if (!cell.is_number_unsigned()) throw ParseError("table entries must be element indices");
      table.push_back(cell.get<std::size_t>());
    }
  }
  return FiniteGroup::from_table(order, j["identity"].get<std::size_t>(), std::move(table));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

// ---------------------------------------------------------------------------
// DOT export

namespace detail {

inline std::string dot_quote(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Hasse diagram with the analysis annotations: non-generators filled,
/// coatoms boxed, the Frattini element double-bordered.  Node and edge
/// order follow the element ids, so output is reproducible.
inline std::string dot_export(const Poset& p) {
  std::vector<bool> nongen(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) nongen[a] = is_nongenerator(p, a);
  std::vector<bool> coatom(p.size(), false);
  for (std::size_t c : coatoms(p)) coatom[c] = true;
  MaybeElement phi = frattini_element(p);

  std::ostringstream out;
  out << "digraph poset {\n";
  out << "  rankdir=BT;\n";
  out << "  // filled = non-generator, box = coatom, double border = Frattini element\n";
  for (std::size_t a = 0; a < p.size(); ++a) {
    out << "  " << detail::dot_quote(p.id(a)) << " [shape=" << (coatom[a] ? "box" : "ellipse");
    if (nongen[a]) out << ", style=filled, fillcolor=lightsteelblue";
    if (phi.has_value() && *phi.value == a) out << ", peripheries=2";
    out << "];\n";
  }
  for (auto [a, b] : p.cover_pairs())
    out << "  " << detail::dot_quote(p.id(a)) << " -> " << detail::dot_quote(p.id(b)) << ";\n";
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Report rendering

namespace detail {

inline const char* bool_word(bool b) { return b ? "true" : "false"; }

inline std::string law_line(const LawCheck& law) {
  std::ostringstream out;
  out << "law " << law.law << ": " << (law.passed ? "pass" : "FAIL")
      << " checked=" << law.cases_checked;
  if (law.cases_skipped > 0) out << " skipped=" << law.cases_skipped;
  if (!law.skip_reason.empty()) out << " skip_reason=\"" << law.skip_reason << "\"";
  if (!law.witness.empty()) out << " witness=\"" << law.witness << "\"";
  return out.str();
}

inline std::string maybe_element_text(const MaybeElement& m, const std::string& id) {
  if (m.has_value()) return id;
  return std::string("absent(") + to_string(*m.reason) + ")";
}

inline json maybe_element_json(const MaybeElement& m, const std::string& id) {
  json j;
  if (m.has_value()) {
    j["value"] = id;
  } else {
    j["value"] = nullptr;
    j["reason"] = to_string(*m.reason);
  }
  return j;
}

inline json law_json(const LawCheck& law) {
  json j;
  j["law"] = law.law;
  j["passed"] = law.passed;
  j["checked"] = law.cases_checked;
  j["skipped"] = law.cases_skipped;
  if (!law.skip_reason.empty()) j["skip_reason"] = law.skip_reason;
  if (!law.witness.empty()) j["witness"] = law.witness;
  return j;
}

}  // namespace detail

inline std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream out;
  out << "schema_version: " << r.schema_version << "\n";
  out << "input_digest: " << r.input_digest << "\n";
  out << "elements: " << r.rows.size() << "\n";
  out << "coatoms:";
  for (const auto& id : r.coatom_ids) out << " " << id;
  out << "\n";
  out << "phi: " << detail::maybe_element_text(r.phi, r.phi_id) << "\n";
  out << "nongen_join: " << detail::maybe_element_text(r.nongen_join, r.nongen_join_id) << "\n";
  out << "phi_agrees: " << detail::bool_word(r.phi_agrees) << "\n";
  for (const ElementRow& row : r.rows) {
    out << "element " << row.verdict.element << ": nongen=" << detail::bool_word(row.verdict.by_definition)
        << " by_coatoms=" << detail::bool_word(row.verdict.by_coatoms)
        << " by_chains=" << detail::bool_word(row.verdict.by_chains)
        << " by_restricted_chains=" << detail::bool_word(row.verdict.by_restricted_chains)
        << " compact=" << detail::bool_word(row.compact.top_compact) << "/"
        << detail::bool_word(row.compact.weakly) << "/" << detail::bool_word(row.compact.very_weakly)
        << " below_all_coatoms=" << detail::bool_word(row.below_all_coatoms);
    if (!row.verdict.definition_witness.empty())
      out << " witness=" << row.verdict.definition_witness;
    out << "\n";
  }
  for (const LawCheck& law : r.laws) out << detail::law_line(law) << "\n";
  if (r.closure) {
    out << "closed:";
    for (const auto& id : r.closure->closed_ids) out << " " << id;
    out << "\n";
    for (std::size_t i = 0; i < r.closure->smallest_closed.size(); ++i) {
      const auto& [elem, closed] = r.closure->smallest_closed[i];
      out << "closure " << elem << ": smallest_closed=" << closed
          << " relative_nongen=" << detail::bool_word(r.closure->relative_nongen[i].second) << "\n";
    }
    out << detail::law_line(r.closure->reduction) << "\n";
  }
  out << "verdict: " << (r.all_laws_pass() ? "all-pass" : "LAW-VIOLATION") << "\n";
  return out.str();
}

inline std::string report_to_json(const AnalysisReport& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["input_digest"] = r.input_digest;
  j["coatoms"] = r.coatom_ids;
  j["phi"] = detail::maybe_element_json(r.phi, r.phi_id);
  j["nongen_join"] = detail::maybe_element_json(r.nongen_join, r.nongen_join_id);
  j["phi_agrees"] = r.phi_agrees;
  json rows = json::array();
  for (const ElementRow& row : r.rows) {
    json rj;
    rj["element"] = row.verdict.element;
    rj["nongen"] = row.verdict.by_definition;
    rj["by_coatoms"] = row.verdict.by_coatoms;
    rj["by_chains"] = row.verdict.by_chains;
    rj["by_restricted_chains"] = row.verdict.by_restricted_chains;
    if (!row.verdict.definition_witness.empty()) rj["witness"] = row.verdict.definition_witness;
    rj["top_compact"] = row.compact.top_compact;
    rj["weakly_top_compact"] = row.compact.weakly;
    rj["very_weakly_top_compact"] = row.compact.very_weakly;
    rj["below_all_coatoms"] = row.below_all_coatoms;
    rows.push_back(std::move(rj));
  }
  j["elements"] = std::move(rows);
  json laws = json::array();
  for (const LawCheck& law : r.laws) laws.push_back(detail::law_json(law));
  j["laws"] = std::move(laws);
  if (r.closure) {
    json c;
    c["closed"] = r.closure->closed_ids;
    json entries = json::array();
    for (std::size_t i = 0; i < r.closure->smallest_closed.size(); ++i) {
      json e;
      e["element"] = r.closure->smallest_closed[i].first;
      const std::string& closed = r.closure->smallest_closed[i].second;
      if (closed == "-")
        e["smallest_closed"] = nullptr;
      else
        e["smallest_closed"] = closed;
      e["relative_nongen"] = r.closure->relative_nongen[i].second;
      entries.push_back(std::move(e));
    }
    c["elements"] = std::move(entries);
    c["reduction"] = detail::law_json(r.closure->reduction);
    j["closure"] = std::move(c);
  }
  j["verdict"] = r.all_laws_pass() ? "all-pass" : "law-violation";
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Group report

struct GroupReport {
  std::string schema_version = "1";
  std::size_t order = 0;
  std::vector<std::string> subgroup_ids;   // ascending by name
  std::vector<std::string> maximal_ids;
  std::string frattini_id;
  std::vector<std::size_t> frattini_members;
  struct ElementVerdict {
    std::size_t element;
    bool nongen_by_subgroups;   // no proper subgroup reaches the top with it
    bool in_frattini;           // membership in the intersection of maximals
    bool bridge;                // relative non-generation of the singleton
  };
  std::vector<ElementVerdict> element_verdicts;
  LawCheck characterization;  // the two group oracles coincide
  LawCheck bridge_law;        // singleton reduction matches the lattice verdict
  std::string lattice_dot;

  bool all_laws_pass() const { return characterization.passed && bridge_law.passed; }
};

inline GroupReport analyze_group(const FiniteGroup& g,
                                 std::size_t order_cap = kGroupOrderCap) {
  GroupReport r;
  r.order = g.order();
  SubgroupLattice lat = subgroup_lattice(g, order_cap);
  for (const auto& id : lat.poset.ids()) r.subgroup_ids.push_back(id);
  for (std::size_t c : coatoms(lat.poset)) r.maximal_ids.push_back(lat.poset.id(c));
  GroupSubset phi = group_frattini(g, order_cap);
  r.frattini_id = subset_name(phi);
  r.frattini_members = subset_elements(phi);

  ClosureContext ctx = group_closure_context(g, order_cap);
  r.characterization = LawCheck("frattini-characterization");
  r.bridge_law = LawCheck("closure-bridge");
  for (std::size_t x = 0; x < g.order(); ++x) {
    GroupReport::ElementVerdict v;
    v.element = x;
    v.nongen_by_subgroups = is_group_nongenerator(g, x, order_cap);
    v.in_frattini = (phi & (1u << x)) != 0;
    v.bridge = is_nongenerator(ctx, ctx.ambient().index_of(subset_name(1u << x)));
    ++r.characterization.cases_checked;
    if (v.nongen_by_subgroups != v.in_frattini)
      r.characterization.fail("element " + std::to_string(x) + ": non-generator=" +
                              detail::bool_word(v.nongen_by_subgroups) + " but in-Frattini=" +
                              detail::bool_word(v.in_frattini));
    ++r.bridge_law.cases_checked;
    if (v.bridge != v.nongen_by_subgroups)
      r.bridge_law.fail("element " + std::to_string(x) + ": relative verdict " +
                        detail::bool_word(v.bridge) + " != group verdict " +
                        detail::bool_word(v.nongen_by_subgroups));
    r.element_verdicts.push_back(v);
  }
  r.lattice_dot = dot_export(lat.poset);
  return r;
}

inline std::string group_report_to_text(const GroupReport& r) {
  std::ostringstream out;
  out << "schema_version: " << r.schema_version << "\n";
  out << "order: " << r.order << "\n";
  out << "subgroups: " << r.subgroup_ids.size() << "\n";
  for (const auto& id : r.subgroup_ids) out << "  " << id << "\n";
  out << "maximal_subgroups:";
  for (const auto& id : r.maximal_ids) out << " " << id;
  out << "\n";
  out << "frattini_subgroup: " << r.frattini_id << " (order " << r.frattini_members.size() << ")\n";
  for (const auto& v : r.element_verdicts)
    out << "element " << v.element << ": nongen=" << detail::bool_word(v.nongen_by_subgroups)
        << " in_frattini=" << detail::bool_word(v.in_frattini)
        << " bridge=" << detail::bool_word(v.bridge) << "\n";
  out << detail::law_line(r.characterization) << "\n";
  out << detail::law_line(r.bridge_law) << "\n";
  out << "verdict: " << (r.all_laws_pass() ? "all-pass" : "LAW-VIOLATION") << "\n";
  return out.str();
}

inline std::string group_report_to_json(const GroupReport& r) {
  json j;
  j["schema_version"] = r.schema_version;
  j["order"] = r.order;
  j["subgroups"] = r.subgroup_ids;
  j["maximal_subgroups"] = r.maximal_ids;
  j["frattini_subgroup"] = r.frattini_id;
  j["frattini_order"] = r.frattini_members.size();
  json elems = json::array();
  for (const auto& v : r.element_verdicts) {
    json e;
    e["element"] = v.element;
    e["nongen"] = v.nongen_by_subgroups;
    e["in_frattini"] = v.in_frattini;
    e["bridge"] = v.bridge;
    elems.push_back(std::move(e));
  }
  j["elements"] = std::move(elems);
  j["laws"] = json::array({detail::law_json(r.characterization), detail::law_json(r.bridge_law)});
  j["verdict"] = r.all_laws_pass() ? "all-pass" : "law-violation";
  return j.dump(2) + "\n";
}

}  // namespace frattini
