#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace descent_poset {

enum class OutputFormat { kJson, kCsv, kText };

OutputFormat parse_output_format(std::string_view name);
std::string_view format_name(OutputFormat f);

struct RunConfig {
  std::size_t max_interval_top_length = 14;
  std::size_t verify_threshold = 8;
  std::size_t parallel_width = 1;
  std::optional<std::string> output_path;
  OutputFormat format = OutputFormat::kJson;

  // Defaults with parallel_width from the hardware and
  // DESCENT_POSET_MAX_LEN applied when set. Throws ParseError on a bad value.
  static RunConfig from_environment();

  // Throws PreconditionError unless every limit is positive and
  // verify_threshold <= max_interval_top_length.
  void validate() const;
};

inline constexpr const char* kMaxLenEnv = "DESCENT_POSET_MAX_LEN";

}  // namespace descent_poset
