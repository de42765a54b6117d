#pragma once

#include "linwidth/error.hpp"
#include "linwidth/subset.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

namespace linwidth::detail {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;

  std::string_view keyword() const { return tokens.front(); }
  std::size_t arity() const { return tokens.size() - 1; }
};

// Non-empty lines with comments stripped, split on whitespace.
inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
  }
  return out;
}

[[noreturn]] inline void syntax_error(const Line& line, const std::string& message) {
  throw Error(ErrorCode::syntax_error, message, line.number);
}

inline void expect_arity(const Line& line, std::size_t arity) {
  if (line.arity() != arity) {
    syntax_error(line, "'" + std::string(line.keyword()) + "' takes " + std::to_string(arity) + " argument(s)");
  }
}

inline std::uint64_t parse_natural(const Line& line, std::string_view token) {
  std::uint64_t value = 0;
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    syntax_error(line, "expected a natural number, got '" + std::string(token) + "'");
  }
  return value;
}

inline std::string parse_name(const Line& line, std::string_view token) {
  if (!is_valid_label(token)) syntax_error(line, "invalid name '" + std::string(token) + "'");
  return std::string(token);
}

inline Subset parse_subset_at(const Line& line, const GroundSet& ground, std::string_view token) {
  try {
    return ground.parse_subset(token);
  } catch (const Error& e) {
    throw Error(e.code(), e.what(), line.number);
  }
}

}  // namespace linwidth::detail
