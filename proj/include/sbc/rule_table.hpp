#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sbc/block_map.hpp"

namespace sbc {

// Text format:
//
//   # comment
//   alphabet K
//   window N
//   <domain> <output>     (exactly K^N rows, any order)
//
// The domain is N whitespace-separated symbols or, for K <= 10, one
// contiguous digit string. Errors carry the offending line number.
BlockMap parse_block_map(std::string_view text);

// Rows in lexicographic order, contiguous-digit domains when K <= 10.
std::string serialize_block_map(const BlockMap& d);

// Splits on whitespace.
std::vector<std::string_view> split_tokens(std::string_view line);

// Parses a non-negative decimal; nullopt on any malformation.
std::optional<std::size_t> parse_count(std::string_view token);

}  // namespace sbc
