#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinor/field_model.hpp"

namespace spinor {

struct IdentityResult {
  std::string name;
  bool pass = false;
  std::string witness;  // first failing tuple, empty when pass
};

// Runs the executable identity suite for the subgroup calculus over one
// model: every closed-form law of the ups / g / G maps, each stated
// exceptional case, and the restriction consistency of the classical g and G.
// Grids are exhaustive over all square classes and weights in
// [-2e-2, 2e+2], quarter steps where real weights are allowed.
std::vector<IdentityResult> run_identity_suite(const FieldModel& m);

bool all_pass(const std::vector<IdentityResult>& results);

}  // namespace spinor
