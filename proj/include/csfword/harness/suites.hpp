#pragma once

#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "csfword/search.hpp"

namespace csfword::harness {

struct SuiteFailure {
  std::string input;
  std::string expected;
  std::string got;
};

struct SuiteReport {
  std::string suite_name;
  std::size_t cases_run = 0;
  std::vector<SuiteFailure> failures;
  /// Informational counts and flagged shapes; never failures.
  std::vector<std::string> notes;
  std::chrono::duration<double> runtime{0};

  bool ok() const { return failures.empty(); }
};

/// Registered suite names in execution order for "all".
const std::vector<std::string>& suite_names();

/// Runs one suite. Each suite fixes its own vertex-count scope (n_max is
/// raised to it); k_max and node_budget come from `bounds`. Throws
/// PreconditionError for an unknown name.
SuiteReport run_suite(std::string_view name, const SearchBounds& bounds);

nlohmann::json to_json(const SuiteReport& report, bool with_runtime);

}  // namespace csfword::harness
