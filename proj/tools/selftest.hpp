#pragma once

#include <string>
#include <vector>

namespace sphere_lam::selftest {

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;  // observed value when the check fails
};

// The published fixtures: shear vectors, words, the base exchange matrix, permutation examples,
// compatibility examples, taxonomy and adjacency facts, and the fan counts.
std::vector<Check> run();

}  // namespace sphere_lam::selftest
