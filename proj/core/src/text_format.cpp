#include "permball/text_format.hpp"

#include <charconv>
#include <stdexcept>

#include "permball/errors.hpp"

namespace permball {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view token, std::string_view whole) {
  token = trim(token);
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("cannot parse permutation '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  const auto body = trim(text);
  std::vector<int> values;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      values.push_back(parse_int(body.substr(start, comma - start), text));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : body) {
      if (c < '1' || c > '9') {
        throw ParseError("cannot parse permutation '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  }
  try {
    return Permutation(std::move(values));
  } catch (const std::invalid_argument&) {
    throw ParseError("'" + std::string(text) + "' is not a permutation of 1..n");
  }
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  if (p.size() <= 9) {
    for (int v : p) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(p[i]);
  }
  return out;
}

std::vector<std::string> format_all(const PermSet& set) {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (const auto& p : set) out.push_back(format_permutation(p));
  return out;
}

}  // namespace permball
