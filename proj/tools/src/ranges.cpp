#include "nekrasov_cli/ranges.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace nekrasov::cli {

namespace {

constexpr std::uint64_t kMaxRangeLength = 1'000'000;

std::uint64_t parse_number(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("malformed index range '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::uint64_t> parse_index_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_number(item, text));
    } else {
      const auto lo = parse_number(item.substr(0, dots), text);
      const auto hi = parse_number(item.substr(dots + 2), text);
      if (hi < lo) throw std::invalid_argument("empty index range '" + std::string(text) + "'");
      if (hi - lo >= kMaxRangeLength) {
        throw std::invalid_argument("index range '" + std::string(text) + "' is too long");
      }
      for (auto v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace nekrasov::cli
