#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "wph/errors.hpp"
#include "wph/quotient.hpp"

namespace wph::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline Weight parse_integer(std::string_view token, std::string_view context) {
  token = trim(token);
  Weight value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw InvalidInput("malformed integer '" + std::string(token) + "' in '" + std::string(context) + "'");
  }
  return value;
}

// "4,5,1^3" -> {4,5,1,1,1}
inline std::vector<Weight> parse_integer_list(std::string_view text) {
  std::vector<Weight> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = trim(rest.substr(0, comma));
    const auto caret = item.find('^');
    if (caret == std::string_view::npos) {
      out.push_back(parse_integer(item, text));
    } else {
      std::string_view count_text = item.substr(caret + 1);
      if (count_text.size() >= 2 && count_text.front() == '(' && count_text.back() == ')') {
        count_text = count_text.substr(1, count_text.size() - 2);
      }
      const Weight value = parse_integer(item.substr(0, caret), text);
      const Weight count = parse_integer(count_text, text);
      if (count < 1 || count > 10'000'000) {
        throw InvalidInput("bad repetition count in '" + std::string(text) + "'");
      }
      out.insert(out.end(), static_cast<std::size_t>(count), value);
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

inline std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = text.find(',');
    out.emplace_back(trim(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

}  // namespace wph::detail
