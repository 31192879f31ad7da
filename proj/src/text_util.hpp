#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gadic::detail {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::uint64_t parse_u64(std::string_view s);

/// `[a,b,c]` -> {a,b,c}; `[]` -> {}.
std::vector<std::uint64_t> parse_list(std::string_view s);
std::string format_list(const std::vector<std::uint64_t>& xs);

/// Splits `k1=v1;k2=v2` into ordered (key, value) pairs. Brackets may contain ';'-free lists.
std::vector<std::pair<std::string_view, std::string_view>> parse_fields(std::string_view s);

}  // namespace gadic::detail
