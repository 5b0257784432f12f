#ifndef NEKRASOV_CLI_RANGES_HPP
#define NEKRASOV_CLI_RANGES_HPP

#include <cstdint>
#include <string_view>
#include <vector>

namespace nekrasov::cli {

/// Parses "7", "2..5" (inclusive) or comma-separated mixtures such as
/// "100,200,400" or "0..3,10". Throws std::invalid_argument on malformed or
/// empty ranges.
std::vector<std::uint64_t> parse_index_list(std::string_view text);

}  // namespace nekrasov::cli

#endif  // NEKRASOV_CLI_RANGES_HPP
