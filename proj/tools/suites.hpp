#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clusterx {

struct SuiteReport {
  std::string name;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> notes;
  bool ok() const { return total > 0 && passed == total; }
};

struct SuiteOptions {
  std::uint64_t rng_seed = 1;
  std::size_t trials = 0;  // 0 picks the suite's default
};

std::vector<std::string> suite_names();

/// Throws cluster::InvalidInput for an unknown name. "all" runs every suite.
std::vector<SuiteReport> run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace clusterx
