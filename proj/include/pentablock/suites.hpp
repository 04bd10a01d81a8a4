#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pentablock/records.hpp"

namespace pentablock {

/// Verification suites, one per checked property. Each suite draws from its
/// own substream of the seed, so a suite's result does not depend on which
/// other suites run alongside it.
struct SuiteOptions {
  /// Overrides the suite's default case count.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  /// Overrides the suite's pass threshold.
  std::optional<double> tol;
};

/// Suite names in report order (sorted).
const std::vector<std::string>& suite_names();

bool is_suite(std::string_view name);

/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

/// `name` may be "all".
std::vector<SuiteReport> run_suites(std::string_view name, const SuiteOptions& options = {});

}  // namespace pentablock
