#include "text_util.hpp"

#include <charconv>

#include "gadic/errors.hpp"

namespace gadic::detail {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::uint64_t parse_u64(std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("expected a nonnegative integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_list(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw ParseError("expected a bracketed list, got '" + std::string(s) + "'");
  }
  auto body = trim(s.substr(1, s.size() - 2));
  std::vector<std::uint64_t> out;
  if (body.empty()) return out;
  for (auto item : split(body, ',')) out.push_back(parse_u64(item));
  return out;
}

std::string format_list(const std::vector<std::uint64_t>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  out += ']';
  return out;
}

std::vector<std::pair<std::string_view, std::string_view>> parse_fields(std::string_view s) {
  std::vector<std::pair<std::string_view, std::string_view>> out;
  for (auto part : split(trim(s), ';')) {
    part = trim(part);
    if (part.empty()) continue;
    auto eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key=value, got '" + std::string(part) + "'");
    }
    out.emplace_back(trim(part.substr(0, eq)), trim(part.substr(eq + 1)));
  }
  return out;
}

}  // namespace gadic::detail
