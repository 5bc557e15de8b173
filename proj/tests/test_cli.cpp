#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "frattini/io.hpp"

// End-to-end checks of the command-line binary: exit codes, file emission
// and the round trip from the gadget subcommand back through analyze.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string output;
};

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "frattini-cli-tests";
  fs::create_directories(dir);
  return dir;
}

RunResult run_cli(const std::string& args) {
  fs::path out = scratch_dir() / "stdout.txt";
  std::string command = std::string(FRATTINI_CLI_PATH) + " " + args + " > " + out.string() + " 2>&1";
  int status = std::system(command.c_str());
  int code = status == -1 ? -1 : WEXITSTATUS(status);
  std::ifstream in(out);
  std::ostringstream buf;
  buf << in.rdbuf();
  return {code, buf.str()};
}

std::string data_file(const std::string& name) {
  return (fs::path(FRATTINI_DATA_DIR) / name).string();
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("analyze a poset document") {
  RunResult r = run_cli("analyze " + data_file("m2.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verdict: all-pass") != std::string::npos);
  CHECK(r.output.find("phi: 0") != std::string::npos);

  SUBCASE("structured output is valid JSON") {
    RunResult s = run_cli("analyze --format structured " + data_file("two_coatoms.json"));
    CHECK(s.exit_code == 0);
    auto j = nlohmann::json::parse(s.output);
    CHECK(j["phi"]["reason"] == "NoMeet");
    CHECK(j["nongen_join"]["reason"] == "EmptyFamily");
  }
}

TEST_CASE("analyze a moore document, with and without completion") {
  RunResult r = run_cli("analyze " + data_file("moore_pair.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("law closure-reduction: pass") != std::string::npos);

  fs::path incomplete = scratch_dir() / "incomplete_moore.json";
  frattini::write_file(incomplete.string(),
                       R"({"ground": ["x", "y"], "closed_sets": [["x"], ["y"], ["x", "y"]]})");
  CHECK(run_cli("analyze " + incomplete.string()).exit_code == 2);
  CHECK(run_cli("analyze --complete " + incomplete.string()).exit_code == 0);
}

TEST_CASE("input errors exit with 2") {
  fs::path bad = scratch_dir() / "bad.json";
  frattini::write_file(bad.string(), R"({"elements": ["a"], "covers": [["a", "a"]]})");
  RunResult r = run_cli("analyze " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error:") != std::string::npos);
  CHECK(run_cli("analyze " + (scratch_dir() / "does_not_exist.json").string()).exit_code == 2);
  // Group documents are routed to the group subcommand.
  CHECK(run_cli("analyze " + data_file("z8.json")).exit_code == 2);
}

TEST_CASE("determinism across runs, serial and parallel") {
  fs::path a = scratch_dir() / "run_a.txt";
  fs::path b = scratch_dir() / "run_b.txt";
  fs::path c = scratch_dir() / "run_c.txt";
  CHECK(run_cli("analyze --out " + a.string() + " " + data_file("m2.json")).exit_code == 0);
  CHECK(run_cli("analyze --out " + b.string() + " " + data_file("m2.json")).exit_code == 0);
  CHECK(run_cli("analyze --parallel --out " + c.string() + " " + data_file("m2.json")).exit_code ==
        0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a) == slurp(c));
}

TEST_CASE("group subcommand") {
  fs::path dot = scratch_dir() / "z8_lattice.dot";
  RunResult r = run_cli("group --dot " + dot.string() + " " + data_file("z8.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("frattini_subgroup: {0,2,4,6} (order 4)") != std::string::npos);
  CHECK(r.output.find("verdict: all-pass") != std::string::npos);
  CHECK(slurp(dot).find("digraph poset {") == 0);
}

TEST_CASE("gadget round trip through analyze") {
  fs::path gadget_out = scratch_dir() / "gadget.json";
  RunResult g = run_cli("gadget --out " + gadget_out.string() + " " + data_file("antichain_q.json"));
  CHECK(g.exit_code == 0);
  CHECK(g.output.find("coatom_is_nongenerator: false") != std::string::npos);
  CHECK(g.output.find("coatoms: a x y") != std::string::npos);

  RunResult a = run_cli("analyze " + gadget_out.string());
  CHECK(a.exit_code == 0);
  CHECK(a.output.find("coatoms: a x y") != std::string::npos);
  // The fresh element is not a non-generator in the re-ingested poset.
  CHECK(a.output.find("element a: nongen=false") != std::string::npos);
}

TEST_CASE("caps are exposed as flags") {
  // 21 elements: over the default chain cap, fine with a raised one.
  frattini::Poset wide = frattini::antichain_plus_top(20);
  fs::path doc = scratch_dir() / "wide.json";
  frattini::write_file(doc.string(), frattini::write_poset_spec(wide.to_spec()));
  CHECK(run_cli("analyze " + doc.string()).exit_code == 2);
  RunResult raised = run_cli("analyze --cap-chains 21 " + doc.string());
  CHECK(raised.exit_code == 0);
  CHECK(raised.output.find("verdict: all-pass") != std::string::npos);
}

TEST_CASE("a five-point moore ground needs a raised chain cap") {
  fs::path doc = scratch_dir() / "moore5.json";
  frattini::write_file(doc.string(), R"({
    "ground": ["a", "b", "c", "d", "e"],
    "closed_sets": [["a", "b", "c", "d", "e"], ["a", "b"], ["a"], []]
  })");
  // The ambient powerset has 32 elements, over the default enumeration cap.
  CHECK(run_cli("analyze " + doc.string()).exit_code == 2);
  RunResult raised = run_cli("analyze --cap-chains 32 " + doc.string());
  CHECK(raised.exit_code == 0);
  CHECK(raised.output.find("law closure-reduction: pass") != std::string::npos);
}

TEST_CASE("chain-mode comparison law can be requested") {
  RunResult r = run_cli("analyze --compare-chain-modes " + data_file("three_chain.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("law chain-clause-modes-agree: pass") != std::string::npos);
}

TEST_CASE("analyze can emit a DOT rendering on the side") {
  fs::path dot = scratch_dir() / "m2.dot";
  CHECK(run_cli("analyze --dot " + dot.string() + " " + data_file("m2.json")).exit_code == 0);
  CHECK(slurp(dot).find("digraph poset {") == 0);
}

TEST_CASE("export-dot matches the library rendering") {
  RunResult r = run_cli("export-dot " + data_file("m2.json"));
  CHECK(r.exit_code == 0);
  frattini::Poset p =
      frattini::Poset::from_covers(frattini::parse_poset_spec(frattini::read_file(data_file("m2.json"))));
  CHECK(r.output == frattini::dot_export(p));
}

TEST_CASE("sweep subcommand") {
  RunResult r = run_cli("sweep --builder random_poset --count 5 --n 6 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("passed: 5/5") != std::string::npos);

  RunResult moore = run_cli("sweep --builder random_moore_family --count 3 --ground 3 --seed 2");
  CHECK(moore.exit_code == 0);
  CHECK(moore.output.find("passed: 3/3") != std::string::npos);

  SUBCASE("parallel sweeps keep instance order") {
    RunResult serial = run_cli("sweep --builder random_poset --count 6 --n 5 --seed 3");
    RunResult parallel =
        run_cli("sweep --builder random_poset --count 6 --n 5 --seed 3 --parallel");
    CHECK(serial.exit_code == 0);
    CHECK(serial.output == parallel.output);
  }

  CHECK(run_cli("sweep --builder nonsense --count 1").exit_code == 2);
}
