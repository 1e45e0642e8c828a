#include "budget.hpp"

#include <atomic>

namespace conjforge::budget {

namespace {
std::atomic<long> g_limit{kDefaultIterationLimit};
}

long iteration_limit() { return g_limit.load(); }

void set_iteration_limit(long steps) {
  g_limit.store(steps > 0 ? steps : kDefaultIterationLimit);
}

}  // namespace conjforge::budget
