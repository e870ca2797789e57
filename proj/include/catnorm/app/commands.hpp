#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catnorm/io/records.hpp"

namespace catnorm {

std::vector<std::string> const& compute_kinds();

/// Runs one computation on a parsed input document. Throws Error{ParseError}
/// for an unknown kind or malformed input.
io::json cmd_compute(std::string const& kind, io::json const& input);

struct SuiteConfig {
  int max_order = 16;
  std::vector<std::string> suites;
  std::string format = "json";  // json | text
  std::uint64_t seed = 1;
};

struct SuiteOutput {
  std::string document;
  bool ok = true;
};

/// Throws Error{UnknownSuite} before running anything, and Error{ParseError}
/// for a bad format or max_order < 1. Timings go to stderr.
SuiteOutput cmd_suite(SuiteConfig const& cfg);

/// "a,b,c" -> {"a", "b", "c"}; empty pieces dropped.
std::vector<std::string> split_list(std::string const& s);

}  // namespace catnorm
