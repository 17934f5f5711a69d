#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sbc {

using Symbol = std::uint32_t;

// A finite word over {0, ..., k-1}. A word also names the cylinder of all
// infinite sequences that begin with it.
using Word = std::vector<Symbol>;

// Upper bound on k^n for any table the library materializes.
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 24;

class Alphabet {
 public:
  explicit Alphabet(std::size_t size);
  Alphabet(std::size_t size, std::vector<std::string> names);

  std::size_t size() const noexcept { return size_; }
  bool has_names() const noexcept { return names_.has_value(); }

  // Display name of a symbol; decimal index when no names were given.
  std::string name(Symbol s) const;
  bool contains(Symbol s) const noexcept { return s < size_; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::size_t size_;
  std::optional<std::vector<std::string>> names_;
};

// k^n, or nullopt when it exceeds `limit`.
std::optional<std::size_t> checked_power(std::size_t base, std::size_t exponent,
                                         std::size_t limit = kMaxTableSize);

// Radix-k code of a word, first symbol most significant.
std::size_t encode_word(std::span<const Symbol> word, std::size_t k);
Word decode_word(std::size_t code, std::size_t k, std::size_t length);

// Advances `word` to its lexicographic successor in A^|word|. Returns false
// (leaving the word all zeros) after the last word.
bool next_word(Word& word, std::size_t k);

// Throws AlphabetMismatch if any symbol is outside [0, k).
void require_symbols(std::span<const Symbol> word, std::size_t k);

// Words as written in files and on the command line: contiguous digits when
// k <= 10, comma-separated decimals otherwise.
std::string format_word(std::span<const Symbol> word, std::size_t k);
Word parse_word(std::string_view text, std::size_t k);

// Human-readable rendering through the alphabet's display names.
std::string display_word(std::span<const Symbol> word, const Alphabet& alphabet);

}  // namespace sbc
