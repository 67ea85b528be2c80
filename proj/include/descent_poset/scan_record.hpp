#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace descent_poset {

// One exact value in a scan record. No floating point.
using Quantity = std::variant<std::int64_t, bool, std::string, std::vector<std::int64_t>, std::vector<std::string>>;

// A per-subject scan result: ordered metric name -> exact value.
struct ScanRecord {
  std::string subject;
  std::vector<std::pair<std::string, Quantity>> quantities;

  void set(std::string name, Quantity value);
  const Quantity* find(std::string_view name) const;

  nlohmann::ordered_json to_json() const;
  static ScanRecord from_json(const nlohmann::ordered_json& j);

  // CSV cell text for one quantity. Lists are ';'-joined.
  static std::string csv_cell(const Quantity& q);
  // Header "subject,<names...>" and one row aligned to the given names; a
  // name the record lacks yields an empty cell.
  static std::string csv_header(const std::vector<std::string>& names);
  std::string to_csv_row(const std::vector<std::string>& names) const;
};

}  // namespace descent_poset
