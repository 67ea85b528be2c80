#include "descent_poset/config.hpp"

#include <charconv>
#include <cstdlib>
#include <thread>

#include "descent_poset/errors.hpp"

namespace descent_poset {

OutputFormat parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "text") return OutputFormat::kText;
  throw ParseError("unknown format '" + std::string(name) + "' (expected json, csv or text)");
}

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kText: return "text";
  }
  return "json";
}

RunConfig RunConfig::from_environment() {
  RunConfig config;
  config.parallel_width = std::max(1U, std::thread::hardware_concurrency());
  if (const char* raw = std::getenv(kMaxLenEnv); raw != nullptr && *raw != '\0') {
    const std::string_view text(raw);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
      throw ParseError(std::string(kMaxLenEnv) + " must be a positive integer, got '" + std::string(text) + "'");
    config.max_interval_top_length = value;
  }
  return config;
}

void RunConfig::validate() const {
  if (max_interval_top_length == 0 || verify_threshold == 0 || parallel_width == 0)
    throw PreconditionError("limits must be positive");
  if (verify_threshold > max_interval_top_length)
    throw PreconditionError("verify threshold " + std::to_string(verify_threshold) + " exceeds max length " +
                            std::to_string(max_interval_top_length));
}

}  // namespace descent_poset
