#pragma once

namespace conjforge::budget {

// Process-wide iteration budget for orbit-chasing loops (fundamental domain
// search, registry construction retries). The default is 10000 steps; the
// CLI overrides it from the FORGE_BUDGET environment variable.
long iteration_limit();
void set_iteration_limit(long steps);  // steps <= 0 restores the default

inline constexpr long kDefaultIterationLimit = 10000;

}  // namespace conjforge::budget
