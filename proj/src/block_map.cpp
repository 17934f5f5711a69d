#include "sbc/block_map.hpp"

#include <string>

#include "sbc/error.hpp"

namespace sbc {

namespace {

std::size_t table_size_for(std::size_t k, std::size_t window) {
  auto size = checked_power(k, window);
  if (!size) {
    throw Error(ErrorCode::TableTooLarge, "table of " + std::to_string(k) + "^" +
                                              std::to_string(window) + " rows exceeds the size limit");
  }
  return *size;
}

}  // namespace

BlockMap::BlockMap(Alphabet alphabet, std::size_t window, std::vector<Symbol> table)
    : alphabet_(std::move(alphabet)), window_(window), table_(std::move(table)) {
  if (window_ == 0) throw Error(ErrorCode::InvalidArgument, "window must be at least 1");
  std::size_t expected = table_size_for(alphabet_.size(), window_);
  if (table_.size() != expected) {
    throw Error(ErrorCode::IncompleteTable, "table has " + std::to_string(table_.size()) +
                                                " entries, expected " + std::to_string(expected));
  }
  for (Symbol s : table_) {
    if (!alphabet_.contains(s)) {
      throw Error(ErrorCode::SymbolOutOfRange, "output symbol " + std::to_string(s) +
                                                   " outside alphabet of size " +
                                                   std::to_string(alphabet_.size()));
    }
  }
}

BlockMap BlockMap::from_rule(Alphabet alphabet, std::size_t window,
                             const std::function<Symbol(std::span<const Symbol>)>& rule) {
  if (window == 0) throw Error(ErrorCode::InvalidArgument, "window must be at least 1");
  std::size_t size = table_size_for(alphabet.size(), window);
  std::vector<Symbol> table;
  table.reserve(size);
  Word w(window, 0);
  do {
    table.push_back(rule(w));
  } while (next_word(w, alphabet.size()));
  return BlockMap(std::move(alphabet), window, std::move(table));
}

Symbol BlockMap::apply(std::span<const Symbol> word) const {
  if (word.size() != window_) {
    throw Error(ErrorCode::LengthMismatch, "block map of window " + std::to_string(window_) +
                                               " applied to word of length " +
                                               std::to_string(word.size()));
  }
  require_symbols(word, alphabet_.size());
  return table_[encode_word(word, alphabet_.size())];
}

Word slide(const BlockMap& d, std::span<const Symbol> word) {
  const std::size_t n = d.window();
  const std::size_t k = d.alphabet_size();
  if (word.size() < n) {
    throw Error(ErrorCode::WordTooShort, "word of length " + std::to_string(word.size()) +
                                             " is shorter than window " + std::to_string(n));
  }
  require_symbols(word, k);
  const std::size_t modulus = d.domain_size();
  Word out;
  out.reserve(word.size() - n + 1);
  std::size_t code = encode_word(word.first(n - 1), k);
  for (std::size_t i = n - 1; i < word.size(); ++i) {
    code = (code * k + word[i]) % modulus;
    out.push_back(d.at(code));
  }
  return out;
}

BlockMap shift_block_map(const Alphabet& alphabet) {
  return BlockMap::from_rule(alphabet, 2, [](std::span<const Symbol> w) { return w[1]; });
}

BlockMap identity_block_map(const Alphabet& alphabet) {
  return BlockMap::from_rule(alphabet, 1, [](std::span<const Symbol> w) { return w[0]; });
}

BlockMap compose(const BlockMap& outer, const BlockMap& inner) {
  if (!(outer.alphabet() == inner.alphabet())) {
    throw Error(ErrorCode::AlphabetMismatch, "cannot compose block maps over different alphabets");
  }
  const std::size_t window = inner.window() + outer.window() - 1;
  return BlockMap::from_rule(inner.alphabet(), window, [&](std::span<const Symbol> w) {
    return outer.apply(slide(inner, w));
  });
}

BlockMap reduce_to_minimal(const BlockMap& d) {
  const std::size_t k = d.alphabet_size();
  const std::size_t n = d.window();
  auto table = d.table();
  // Output depends only on the first `lead` coordinates iff every aligned
  // block of k^(n-lead) consecutive rows is constant.
  for (std::size_t lead = 1; lead < n; ++lead) {
    const std::size_t block = *checked_power(k, n - lead);
    bool constant_blocks = true;
    for (std::size_t start = 0; start < table.size() && constant_blocks; start += block) {
      for (std::size_t j = 1; j < block; ++j) {
        if (table[start + j] != table[start]) {
          constant_blocks = false;
          break;
        }
      }
    }
    if (!constant_blocks) continue;
    std::vector<Symbol> reduced;
    reduced.reserve(table.size() / block);
    for (std::size_t start = 0; start < table.size(); start += block) reduced.push_back(table[start]);
    return BlockMap(d.alphabet(), lead, std::move(reduced));
  }
  return d;
}

}  // namespace sbc
