// Prints the Frattini subgroup of every bundled group, computed from the
// subgroup lattice, together with the per-element non-generator verdicts.

#include <iostream>

#include "frattini/group.hpp"

int main() {
  for (const auto& [name, group] : frattini::bundled_groups()) {
    frattini::GroupSubset phi = frattini::group_frattini(group);
    std::cout << name << ": Phi = " << frattini::subset_name(phi) << ", non-generators:";
    for (std::size_t g = 0; g < group.order(); ++g)
      if (frattini::is_group_nongenerator(group, g)) std::cout << " " << g;
    std::cout << "\n";
  }
  return 0;
}
