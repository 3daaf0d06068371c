#pragma once

#include <string>
#include <vector>

#include "octomax/octonion.hpp"

namespace octomax {

struct PropertyCheck {
  std::string name;
  bool pass = false;
  double worst_error = 0.0;
  long long samples = 0;
};

// The verification battery behind `algebra-check`: multiplication table
// against an independently brute-forced one, antisymmetry of the structure
// constants, norm composition, alternativity, subalgebra closure, and the
// non-associativity witness. Runs against the given table so the
// fault-injection hook can corrupt it.
std::vector<PropertyCheck> run_algebra_checks(const StructureConstants& sc, unsigned seed,
                                              int samples);

}  // namespace octomax
