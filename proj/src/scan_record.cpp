#include "descent_poset/scan_record.hpp"

#include <algorithm>

#include "descent_poset/errors.hpp"

namespace descent_poset {

using json = nlohmann::ordered_json;

void ScanRecord::set(std::string name, Quantity value) {
  for (auto& [k, v] : quantities) {
    if (k == name) {
      v = std::move(value);
      return;
    }
  }
  quantities.emplace_back(std::move(name), std::move(value));
}

const Quantity* ScanRecord::find(std::string_view name) const {
  for (const auto& [k, v] : quantities)
    if (k == name) return &v;
  return nullptr;
}

json ScanRecord::to_json() const {
  json j = json::object();
  j["subject"] = subject;
  for (const auto& [k, v] : quantities) std::visit([&](const auto& x) { j[k] = x; }, v);
  return j;
}

ScanRecord ScanRecord::from_json(const json& j) {
  if (!j.is_object() || !j.contains("subject") || !j["subject"].is_string())
    throw ParseError("scan record needs a string 'subject'");
  ScanRecord r;
  r.subject = j["subject"].get<std::string>();
  for (const auto& [k, v] : j.items()) {
    if (k == "subject") continue;
    if (v.is_boolean()) {
      r.set(k, v.get<bool>());
    } else if (v.is_number_integer()) {
      r.set(k, v.get<std::int64_t>());
    } else if (v.is_string()) {
      r.set(k, v.get<std::string>());
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_number_integer(); })) {
      // An empty list reads back as integers; both encodings print it the same.
      r.set(k, v.get<std::vector<std::int64_t>>());
    } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& e) { return e.is_string(); })) {
      r.set(k, v.get<std::vector<std::string>>());
    } else {
      throw ParseError("scan record field '" + k + "' is not an exact value");
    }
  }
  return r;
}

std::string ScanRecord::csv_cell(const Quantity& q) {
  struct {
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(const std::vector<std::int64_t>& v) const {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + std::to_string(v[i]);
      return out;
    }
    std::string operator()(const std::vector<std::string>& v) const {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + v[i];
      return out;
    }
  } visitor;
  return std::visit(visitor, q);
}

std::string ScanRecord::csv_header(const std::vector<std::string>& names) {
  std::string out = "subject";
  for (const auto& n : names) out += "," + n;
  return out;
}

std::string ScanRecord::to_csv_row(const std::vector<std::string>& names) const {
  std::string out = subject;
  for (const auto& n : names) {
    out += ",";
    if (const Quantity* q = find(n)) out += csv_cell(*q);
  }
  return out;
}

}  // namespace descent_poset
