#include "sbc/alphabet.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "sbc/error.hpp"

namespace sbc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::WordTooShort: return "WordTooShort";
    case ErrorCode::TableTooLarge: return "TableTooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IncompleteTable: return "IncompleteTable";
    case ErrorCode::DuplicateRule: return "DuplicateRule";
    case ErrorCode::SymbolOutOfRange: return "SymbolOutOfRange";
    case ErrorCode::DepthTooSmall: return "DepthTooSmall";
    case ErrorCode::PreconditionUnverified: return "PreconditionUnverified";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::ContradictoryConstraints: return "ContradictoryConstraints";
  }
  return "Unknown";
}

Alphabet::Alphabet(std::size_t size) : size_(size) {
  if (size == 0) throw Error(ErrorCode::InvalidArgument, "alphabet size must be at least 1");
}

Alphabet::Alphabet(std::size_t size, std::vector<std::string> names) : Alphabet(size) {
  if (names.size() != size) {
    throw Error(ErrorCode::InvalidArgument, "alphabet needs exactly " + std::to_string(size) +
                                                " names, got " + std::to_string(names.size()));
  }
  std::set<std::string> distinct(names.begin(), names.end());
  if (distinct.size() != names.size()) {
    throw Error(ErrorCode::InvalidArgument, "alphabet names must be distinct");
  }
  names_ = std::move(names);
}

std::string Alphabet::name(Symbol s) const {
  if (!contains(s)) {
    throw Error(ErrorCode::AlphabetMismatch, "symbol " + std::to_string(s) + " not in alphabet");
  }
  return names_ ? (*names_)[s] : std::to_string(s);
}

std::optional<std::size_t> checked_power(std::size_t base, std::size_t exponent,
                                         std::size_t limit) {
  std::size_t result = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > limit / base) return std::nullopt;
    result *= base;
  }
  if (result > limit) return std::nullopt;
  return result;
}

std::size_t encode_word(std::span<const Symbol> word, std::size_t k) {
  std::size_t code = 0;
  for (Symbol s : word) code = code * k + s;
  return code;
}

Word decode_word(std::size_t code, std::size_t k, std::size_t length) {
  Word word(length);
  for (std::size_t i = length; i-- > 0;) {
    word[i] = static_cast<Symbol>(code % k);
    code /= k;
  }
  return word;
}

bool next_word(Word& word, std::size_t k) {
  for (std::size_t i = word.size(); i-- > 0;) {
    if (word[i] + 1 < k) {
      ++word[i];
      return true;
    }
    word[i] = 0;
  }
  return false;
}

void require_symbols(std::span<const Symbol> word, std::size_t k) {
  for (Symbol s : word) {
    if (s >= k) {
      throw Error(ErrorCode::AlphabetMismatch, "symbol " + std::to_string(s) +
                                                   " outside alphabet of size " + std::to_string(k));
    }
  }
}

std::string format_word(std::span<const Symbol> word, std::size_t k) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (k > 10 && i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

namespace {

Symbol parse_symbol(std::string_view token, std::size_t k) {
  unsigned long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::SyntaxError, "malformed symbol '" + std::string(token) + "'");
  }
  if (value >= k) {
    throw Error(ErrorCode::SymbolOutOfRange, "symbol " + std::string(token) +
                                                 " outside alphabet of size " + std::to_string(k));
  }
  return static_cast<Symbol>(value);
}

}  // namespace

Word parse_word(std::string_view text, std::size_t k) {
  Word word;
  if (text.empty()) return word;
  if (k <= 10) {
    for (char c : text) word.push_back(parse_symbol(std::string_view(&c, 1), k));
    return word;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    word.push_back(parse_symbol(text.substr(start, comma - start), k));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return word;
}

std::string display_word(std::span<const Symbol> word, const Alphabet& alphabet) {
  if (!alphabet.has_names()) return format_word(word, alphabet.size());
  bool single_char = true;
  for (Symbol s = 0; s < alphabet.size(); ++s) single_char = single_char && alphabet.name(s).size() == 1;
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single_char && i > 0) out += ' ';
    out += alphabet.name(word[i]);
  }
  return out;
}

}  // namespace sbc
