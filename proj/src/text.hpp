#pragma once

// Shared text encoding for permutations, words and embeddings.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "descent_poset/errors.hpp"

namespace descent_poset::detail {

inline std::string render_letters(const std::vector<int>& letters) {
  const bool compact = std::all_of(letters.begin(), letters.end(), [](int v) { return v >= 0 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(letters[i]);
  }
  return out;
}

// Compact digits are accepted up to max_compact letters; longer inputs must
// be delimited by commas and/or whitespace. Letters must be positive.
inline std::vector<int> parse_letters(std::string_view text, std::string_view what,
                                      std::size_t max_compact = std::numeric_limits<std::size_t>::max()) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) throw ParseError(std::string("empty ") + std::string(what));

  std::vector<int> out;
  const bool delimited = std::any_of(text.begin(), text.end(), [&](char c) { return c == ',' || is_space(c); });
  if (!delimited) {
    for (char c : text) {
      if (c < '0' || c > '9') throw ParseError(std::string("invalid character '") + c + "' in " + std::string(what));
      if (c == '0') throw ParseError(std::string("non-positive letter 0 in ") + std::string(what));
      out.push_back(c - '0');
    }
    if (out.size() > max_compact)
      throw ParseError(std::string(what) + " longer than " + std::to_string(max_compact) +
                       " letters must be comma-separated");
    return out;
  }

  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ',' && !is_space(text[j])) ++j;
    std::string_view token = text.substr(i, j - i);
    if (token.empty()) throw ParseError(std::string("empty field in ") + std::string(what));
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("invalid integer '" + std::string(token) + "' in " + std::string(what));
    if (v < 1) throw ParseError("non-positive letter " + std::to_string(v) + " in " + std::string(what));
    out.push_back(v);
    while (j < text.size() && is_space(text[j])) ++j;
    if (j < text.size() && text[j] == ',') {
      ++j;
      if (j >= text.size()) throw ParseError(std::string("trailing comma in ") + std::string(what));
    }
    i = j;
  }
  return out;
}

}  // namespace descent_poset::detail
