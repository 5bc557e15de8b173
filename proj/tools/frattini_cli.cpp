// Command-line surface: ingest poset, Moore-family and Cayley-table
// documents, run the analyses and law suites, emit reports and DOT
// renderings.  Exit codes: 0 when every law passes, 1 on a law violation
// (with its certificate in the report), 2 on input or usage errors.

#include <cstddef>
#include <cstdint>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "frattini/builders.hpp"
#include "frattini/io.hpp"
#include "frattini/report.hpp"

namespace {

using namespace frattini;

struct CommonFlags {
  std::string format = "text";
  std::string out_path;
  std::size_t cap_chains = kDefaultChainCap;
  std::size_t cap_subset = kDefaultSubsetCap;
  std::size_t cap_order = kGroupOrderCap;
  std::size_t cap_ground = kMooreGroundCap;
  bool parallel = false;
  bool compare_chain_modes = false;

  AnalysisOptions analysis_options() const {
    AnalysisOptions opts;
    opts.chain_cap = cap_chains;
    opts.subset_cap = cap_subset;
    opts.parallel = parallel;
    opts.compare_chain_modes = compare_chain_modes;
    return opts;
  }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--format", flags.format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd->add_option("--out", flags.out_path, "Write the report to this file instead of stdout");
  cmd->add_option("--cap-chains", flags.cap_chains,
                  "Largest poset size for full chain enumeration")
      ->capture_default_str();
  cmd->add_option("--cap-subset", flags.cap_subset,
                  "Largest subset size in the absorption law")
      ->capture_default_str();
  cmd->add_option("--cap-order", flags.cap_order, "Largest group order for subgroup enumeration")
      ->capture_default_str();
  cmd->add_option("--cap-ground", flags.cap_ground,
                  "Largest Moore ground set for powerset expansion")
      ->capture_default_str();
  cmd->add_flag("--parallel", flags.parallel, "Evaluate elements (or instances) concurrently");
  cmd->add_flag("--compare-chain-modes", flags.compare_chain_modes,
                "Also run the for-some-member chain checkers and assert agreement");
}

void emit(const CommonFlags& flags, const std::string& content) {
  if (flags.out_path.empty())
    std::cout << content;
  else
    write_file(flags.out_path, content);
}

int run_analyze(const std::string& path, const CommonFlags& flags, bool complete,
                const std::string& dot_path) {
  std::string text = read_file(path);
  InputKind kind = detect_input(text);
  AnalysisReport report;
  std::optional<Poset> poset;
  switch (kind) {
    case InputKind::Poset:
      poset = Poset::from_covers(parse_poset_spec(text));
      report = analyze_poset(*poset, flags.analysis_options());
      break;
    case InputKind::Moore: {
      ClosureContext ctx = moore_to_context(parse_moore_family(text, complete), flags.cap_ground);
      poset = ctx.ambient();
      report = analyze_context(ctx, flags.analysis_options());
      break;
    }
    case InputKind::Group:
      throw ParseError("this is a Cayley-table document; use the 'group' subcommand");
  }
  emit(flags, flags.format == "text" ? report_to_text(report) : report_to_json(report));
  if (!dot_path.empty()) write_file(dot_path, dot_export(*poset));
  return report.all_laws_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-generator and Frattini-element analysis of finite posets"};
  app.require_subcommand(1);

  CommonFlags analyze_flags;
  bool analyze_complete = false;
  std::string analyze_input, analyze_dot;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Analyze a poset or Moore-family document and run every law suite");
  analyze->add_option("input", analyze_input, "Input document")->required();
  add_common_flags(analyze, analyze_flags);
  analyze->add_flag("--complete", analyze_complete,
                    "Close a Moore family under intersections before validating");
  analyze->add_option("--dot", analyze_dot, "Also write an annotated Hasse diagram here");

  CommonFlags sweep_flags;
  std::string sweep_builder;
  std::size_t sweep_count = 1;
  std::uint64_t sweep_seed = 0;
  std::size_t sweep_n = 6;
  double sweep_density = 0.3;
  std::size_t sweep_ground = 3;
  std::size_t sweep_atoms = 2;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Generate instances from a builder and run the law suites on each");
  sweep->add_option("--builder", sweep_builder, "One of: random_poset, random_join_semilattice, "
                                                "random_moore_family, chain, antichain_plus_top, "
                                                "diamond, divisor_lattice")
      ->required();
  sweep->add_option("--count", sweep_count, "Number of instances")->capture_default_str();
  sweep->add_option("--seed", sweep_seed, "Base seed; instance i uses seed + i")
      ->capture_default_str();
  sweep->add_option("--n", sweep_n, "Element count (or the number for divisor_lattice)")
      ->capture_default_str();
  sweep->add_option("--density", sweep_density, "Edge or set density in [0,1]")
      ->capture_default_str();
  sweep->add_option("--ground", sweep_ground, "Moore ground size")->capture_default_str();
  sweep->add_option("--atoms", sweep_atoms, "Atom count for antichain_plus_top and diamond")
      ->capture_default_str();
  add_common_flags(sweep, sweep_flags);

  CommonFlags group_flags;
  std::string group_input, group_dot;
  CLI::App* group = app.add_subcommand("group",
                                       "Subgroup lattice, Frattini subgroup and the two "
                                       "non-generator oracles for a Cayley-table document");
  group->add_option("input", group_input, "Input document")->required();
  add_common_flags(group, group_flags);
  group->add_option("--dot", group_dot, "Write the annotated subgroup lattice here");

  CommonFlags gadget_flags;
  std::string gadget_input, gadget_top = "1", gadget_coatom = "a";
  CLI::App* gadget = app.add_subcommand(
      "gadget", "Extend a poset document with a fresh top and an incomparable fresh coatom");
  gadget->add_option("input", gadget_input, "Input poset document (a maximum is not required)")
      ->required();
  gadget->add_option("--top-id", gadget_top, "Name for the fresh top")->capture_default_str();
  gadget->add_option("--coatom-id", gadget_coatom, "Name for the fresh coatom")
      ->capture_default_str();
  add_common_flags(gadget, gadget_flags);

  CommonFlags dot_flags;
  std::string dot_input;
  CLI::App* export_dot =
      app.add_subcommand("export-dot", "Annotated Hasse diagram of a poset document");
  export_dot->add_option("input", dot_input, "Input poset document")->required();
  export_dot->add_option("--out", dot_flags.out_path, "Write the DOT text to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return run_analyze(analyze_input, analyze_flags, analyze_complete, analyze_dot);

    if (*sweep) {
      auto make_report = [&](std::size_t index) -> AnalysisReport {
        std::uint64_t seed = sweep_seed + index;
        AnalysisOptions opts = sweep_flags.analysis_options();
        if (sweep_builder == "random_poset")
          return analyze_poset(random_poset(sweep_n, sweep_density, seed), opts);
        if (sweep_builder == "random_join_semilattice")
          return analyze_poset(random_join_semilattice(sweep_n, seed), opts);
        if (sweep_builder == "random_moore_family")
          return analyze_context(
              moore_to_context(random_moore_family(sweep_ground, sweep_density, seed),
                               sweep_flags.cap_ground),
              opts);
        if (sweep_builder == "chain") return analyze_poset(chain_poset(sweep_n), opts);
        if (sweep_builder == "antichain_plus_top")
          return analyze_poset(antichain_plus_top(sweep_atoms), opts);
        if (sweep_builder == "diamond") return analyze_poset(diamond(sweep_atoms), opts);
        if (sweep_builder == "divisor_lattice")
          return analyze_poset(divisor_lattice(sweep_n), opts);
        throw ParseError("unknown builder: " + sweep_builder);
      };

      std::vector<AnalysisReport> reports(sweep_count);
      if (sweep_flags.parallel) {
        // Windowed fan-out; results land at their instance index, so the
        // report order never depends on completion order.
        const std::size_t window = std::max(2u, std::thread::hardware_concurrency()) * 2;
        for (std::size_t base = 0; base < sweep_count; base += window) {
          std::size_t end = std::min(sweep_count, base + window);
          std::vector<std::future<AnalysisReport>> futures;
          for (std::size_t i = base; i < end; ++i)
            futures.push_back(std::async(std::launch::async, make_report, i));
          for (std::size_t i = base; i < end; ++i) reports[i] = futures[i - base].get();
        }
      } else {
        for (std::size_t i = 0; i < sweep_count; ++i) reports[i] = make_report(i);
      }

      std::size_t failures = 0;
      std::string first_failure;
      std::size_t first_index = 0;
      for (std::size_t i = 0; i < sweep_count; ++i)
        if (!reports[i].all_laws_pass()) {
          if (failures == 0) {
            first_index = i;
            first_failure = report_to_text(reports[i]);
          }
          ++failures;
        }

      if (sweep_flags.format == "structured") {
        json j;
        j["schema_version"] = "1";
        j["builder"] = sweep_builder;
        j["count"] = sweep_count;
        j["seed"] = sweep_seed;
        j["instances_passed"] = sweep_count - failures;
        j["instances_failed"] = failures;
        if (failures > 0) {
          j["first_failure_index"] = first_index;
          j["first_failure_digest"] = reports[first_index].input_digest;
        }
        json digests = json::array();
        for (const auto& r : reports) digests.push_back(r.input_digest);
        j["instance_digests"] = std::move(digests);
        emit(sweep_flags, j.dump(2) + "\n");
      } else {
        std::ostringstream out;
        out << "builder: " << sweep_builder << "\n";
        out << "count: " << sweep_count << "\n";
        out << "seed: " << sweep_seed << "\n";
        for (std::size_t i = 0; i < sweep_count; ++i)
          out << "instance " << i << ": digest=" << reports[i].input_digest << " "
              << (reports[i].all_laws_pass() ? "all-pass" : "LAW-VIOLATION") << "\n";
        out << "passed: " << (sweep_count - failures) << "/" << sweep_count << "\n";
        if (failures > 0)
          out << "first failure at instance " << first_index << ":\n" << first_failure;
        emit(sweep_flags, out.str());
      }
      return failures == 0 ? 0 : 1;
    }

    if (*group) {
      FiniteGroup g = parse_group(read_file(group_input));
      GroupReport report = analyze_group(g, group_flags.cap_order);
      emit(group_flags,
           group_flags.format == "text" ? group_report_to_text(report) : group_report_to_json(report));
      if (!group_dot.empty()) write_file(group_dot, report.lattice_dot);
      return report.all_laws_pass() ? 0 : 1;
    }

    if (*gadget) {
      // The input may lack a maximum; only acyclicity is required.
      PosetSpec q = parse_poset_spec(read_file(gadget_input));
      CoatomGadget built = adjoin_free_coatom(q, gadget_top, gadget_coatom);
      std::size_t fresh = built.poset.index_of(built.coatom_id);
      bool fresh_not_nongen = !is_nongenerator(built.poset, fresh);
      std::vector<std::string> coatom_ids;
      for (std::size_t c : coatoms(built.poset)) coatom_ids.push_back(built.poset.id(c));

      std::string poset_doc = write_poset_spec(built.spec);
      if (!gadget_flags.out_path.empty()) write_file(gadget_flags.out_path, poset_doc);

      if (gadget_flags.format == "structured") {
        json j;
        j["schema_version"] = "1";
        j["poset"] = json::parse(poset_doc);
        j["top_id"] = built.top_id;
        j["coatom_id"] = built.coatom_id;
        j["coatom_is_nongenerator"] = !fresh_not_nongen;
        j["input_maximal"] = built.q_maximal;
        j["coatoms"] = coatom_ids;
        std::cout << j.dump(2) << "\n";
      } else {
        if (gadget_flags.out_path.empty()) std::cout << poset_doc;
        std::cout << "top_id: " << built.top_id << "\n";
        std::cout << "coatom_id: " << built.coatom_id << "\n";
        std::cout << "coatom_is_nongenerator: " << (fresh_not_nongen ? "false" : "true") << "\n";
        std::cout << "input_maximal:";
        for (const auto& id : built.q_maximal) std::cout << " " << id;
        std::cout << "\ncoatoms:";
        for (const auto& id : coatom_ids) std::cout << " " << id;
        std::cout << "\n";
      }
      return fresh_not_nongen ? 0 : 1;
    }

    if (*export_dot) {
      Poset p = Poset::from_covers(parse_poset_spec(read_file(dot_input)));
      std::string dot = dot_export(p);
      if (dot_flags.out_path.empty())
        std::cout << dot;
      else
        write_file(dot_flags.out_path, dot);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
