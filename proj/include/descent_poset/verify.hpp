#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace descent_poset {

struct CheckFailure {
  std::string what;
  nlohmann::ordered_json payload;
};

struct SuiteReport {
  std::string suite;
  std::size_t max_length = 0;
  std::size_t checked = 0;
  std::size_t failure_count = 0;
  // The first few failures with their counterexample payloads.
  std::vector<CheckFailure> failures;
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();

  bool passed() const { return failure_count == 0; }
  nlohmann::ordered_json to_json() const;
};

struct VerifyOptions {
  std::size_t max_length = 7;
  std::size_t parallel_width = 1;
  // Random same-descent pairs with |pi| in [8, max_length] for the
  // fixed-descent suite (used only when max_length >= 8).
  std::size_t random_samples = 1000;
  std::uint64_t seed = 20170101;
  std::size_t max_failures_reported = 20;
};

// Suite names, in the order "all" runs them.
const std::vector<std::string>& suite_names();

// Runs one named suite. Throws PreconditionError on an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

}  // namespace descent_poset
