#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catnorm/report.hpp"

namespace catnorm {

/// Every suite, in run order.
std::vector<std::string> const& suite_names();

/// Order bound the named suite actually uses under `max_order`: each suite
/// has its own ceiling and runs at min(max_order, ceiling).
int suite_bound(std::string const& name, int max_order);

/// Throws Error{UnknownSuite}. `seed` drives sampled suites only.
Report run_suite(std::string const& name, int max_order, std::uint64_t seed);

/// Number of sampled pairs in the pullback-stability suite.
inline constexpr int kPullbackSamples = 256;

}  // namespace catnorm
