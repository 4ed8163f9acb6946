#pragma once

#include <optional>
#include <vector>

#include "mucos/group.hpp"

namespace mucos::oracle {

// Solves f(x+y) + mu(y) f(x-y) = 2 f(x) f(y), f(e) = 1, treating the |G|-1 values f(x), x != e,
// as complex unknowns. Damped Gauss-Newton on the full |G|^2 system from a grid of starting
// points; roots are kept when the all-pairs residual falls below 1e-13 and deduplicated at
// 1e-9. Knows nothing about characters.
std::vector<ScalarTable> solve_scalar_equation(const GroupSpec& spec, const ScalarTable& mu_values);

// Direct all-pairs residual of the scalar equation, independent of the library's verifier.
double scalar_equation_residual(const GroupSpec& spec, const ScalarTable& mu_values, const ScalarTable& f);

}  // namespace mucos::oracle
