#pragma once

// Internal parsing helpers shared by the canonical text forms.

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fishburn::detail {

inline std::string_view trim(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  return text;
}

inline int parse_int(std::string_view text, const char* what) {
  text = trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument(std::string(what) + ": expected an integer, got \"" +
                                std::string(text) + "\"");
  return value;
}

// Split on a separator; an empty input yields no fields.
inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> fields;
  if (text.empty()) return fields;
  while (true) {
    auto pos = text.find(sep);
    if (pos == std::string_view::npos) {
      fields.push_back(text);
      return fields;
    }
    fields.push_back(text.substr(0, pos));
    text.remove_prefix(pos + 1);
  }
}

}  // namespace fishburn::detail
