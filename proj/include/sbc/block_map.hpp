#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sbc/alphabet.hpp"

namespace sbc {

// A total rule table d : A^n -> A. The table holds k^n outputs indexed by
// the radix-k code of the domain word (first symbol most significant), so
// row order is lexicographic. Immutable once constructed.
class BlockMap {
 public:
  BlockMap(Alphabet alphabet, std::size_t window, std::vector<Symbol> table);

  // Builds the table by evaluating `rule` on every word of A^window.
  static BlockMap from_rule(Alphabet alphabet, std::size_t window,
                            const std::function<Symbol(std::span<const Symbol>)>& rule);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  std::size_t window() const noexcept { return window_; }
  std::size_t domain_size() const noexcept { return table_.size(); }
  std::span<const Symbol> table() const noexcept { return table_; }

  // Output for the domain word with the given radix code; unchecked.
  Symbol at(std::size_t code) const noexcept { return table_[code]; }

  // d(w) for |w| = window. Throws LengthMismatch / AlphabetMismatch.
  Symbol apply(std::span<const Symbol> word) const;

  bool operator==(const BlockMap&) const = default;

 private:
  Alphabet alphabet_;
  std::size_t window_;
  std::vector<Symbol> table_;
};

// Sliding evaluation on a finite word: output i is d(w_i ... w_{i+n-1}).
// Throws WordTooShort if |w| < n.
Word slide(const BlockMap& d, std::span<const Symbol> word);

// d(a1 a2) = a2; slides to the shift map.
BlockMap shift_block_map(const Alphabet& alphabet);

// Window-1 identity d(a) = a.
BlockMap identity_block_map(const Alphabet& alphabet);

// Block map of the composite code: slide(result, w) = slide(outer, slide(inner, w)).
// The result has window inner.window() + outer.window() - 1.
BlockMap compose(const BlockMap& outer, const BlockMap& inner);

// The unique block map of least window inducing the same code. Only
// dependence on leading coordinates is removed; dropping trailing ones
// would realign the output.
BlockMap reduce_to_minimal(const BlockMap& d);

}  // namespace sbc
