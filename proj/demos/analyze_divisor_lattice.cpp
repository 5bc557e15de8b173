// Builds the divisor lattice of a number, runs the full analysis and prints
// the report plus an annotated Hasse diagram.

#include <cstdlib>
#include <iostream>

#include "frattini/builders.hpp"
#include "frattini/io.hpp"
#include "frattini/report.hpp"

int main(int argc, char** argv) {
  std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 60;
  frattini::Poset lattice = frattini::divisor_lattice(n);
  frattini::AnalysisReport report = frattini::analyze_poset(lattice);
  std::cout << frattini::report_to_text(report) << "\n";
  std::cout << frattini::dot_export(lattice);
  return report.all_laws_pass() ? 0 : 1;
}
