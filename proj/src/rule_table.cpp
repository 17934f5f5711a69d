#include "sbc/rule_table.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include "sbc/error.hpp"

namespace sbc {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::size_t> parse_count(std::string_view token) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    auto tokens = split_tokens(line);
    if (!tokens.empty() && tokens.front().front() != '#') lines.push_back({number, std::move(tokens)});
    start = end + 1;
  }
  return lines;
}

std::size_t header_value(const Line& line, std::string_view keyword) {
  if (line.tokens.size() != 2 || line.tokens[0] != keyword) {
    throw Error(ErrorCode::SyntaxError, "expected '" + std::string(keyword) + " <count>'",
                line.number);
  }
  auto value = parse_count(line.tokens[1]);
  if (!value || *value == 0) {
    throw Error(ErrorCode::SyntaxError,
                std::string(keyword) + " must be a positive integer", line.number);
  }
  return *value;
}

Symbol symbol_token(std::string_view token, std::size_t k, std::size_t line) {
  auto value = parse_count(token);
  if (!value) {
    throw Error(ErrorCode::SyntaxError, "malformed symbol '" + std::string(token) + "'", line);
  }
  if (*value >= k) {
    throw Error(ErrorCode::SymbolOutOfRange,
                "symbol " + std::string(token) + " outside alphabet of size " + std::to_string(k),
                line);
  }
  return static_cast<Symbol>(*value);
}

}  // namespace

BlockMap parse_block_map(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.size() < 2) {
    throw Error(ErrorCode::SyntaxError, "missing 'alphabet' and 'window' header lines",
                lines.empty() ? 0 : lines.front().number);
  }
  const std::size_t k = header_value(lines[0], "alphabet");
  const std::size_t n = header_value(lines[1], "window");
  auto rows = checked_power(k, n);
  if (!rows) {
    throw Error(ErrorCode::TableTooLarge, "alphabet^window exceeds the table size limit",
                lines[1].number);
  }

  std::vector<Symbol> table(*rows);
  std::vector<std::size_t> defined_on(*rows, 0);
  Word domain(n);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const auto& tokens = line.tokens;
    if (tokens.size() == n + 1) {
      for (std::size_t j = 0; j < n; ++j) domain[j] = symbol_token(tokens[j], k, line.number);
    } else if (tokens.size() == 2 && k <= 10 && tokens[0].size() == n) {
      for (std::size_t j = 0; j < n; ++j) {
        domain[j] = symbol_token(tokens[0].substr(j, 1), k, line.number);
      }
    } else {
      throw Error(ErrorCode::SyntaxError,
                  "expected " + std::to_string(n) + " domain symbols and one output symbol",
                  line.number);
    }
    const std::size_t code = encode_word(domain, k);
    if (defined_on[code] != 0) {
      throw Error(ErrorCode::DuplicateRule,
                  "rule for " + format_word(domain, k) + " already given on line " +
                      std::to_string(defined_on[code]),
                  line.number);
    }
    defined_on[code] = line.number;
    table[code] = symbol_token(tokens.back(), k, line.number);
  }
  for (std::size_t code = 0; code < table.size(); ++code) {
    if (defined_on[code] == 0) {
      throw Error(ErrorCode::IncompleteTable,
                  "no rule for " + format_word(decode_word(code, k, n), k) + " (" +
                      std::to_string(table.size()) + " rows required)");
    }
  }
  return BlockMap(Alphabet(k), n, std::move(table));
}

std::string serialize_block_map(const BlockMap& d) {
  const std::size_t k = d.alphabet_size();
  std::string out = "alphabet " + std::to_string(k) + "\nwindow " + std::to_string(d.window()) + "\n";
  Word w(d.window(), 0);
  std::size_t code = 0;
  do {
    if (k <= 10) {
      out += format_word(w, k);
    } else {
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (j > 0) out += ' ';
        out += std::to_string(w[j]);
      }
    }
    out += ' ';
    out += std::to_string(d.at(code++));
    out += '\n';
  } while (next_word(w, k));
  return out;
}

}  // namespace sbc
