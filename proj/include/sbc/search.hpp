#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sbc/block_map.hpp"

namespace sbc {

enum class Requirement { Any, Yes, No };

struct WeakOrderRequirement {
  std::size_t order = 1;
  bool at_most = false;  // "order <= m" instead of "least order == m"
};

struct SearchConstraints {
  std::size_t alphabet_size = 2;
  std::size_t window = 1;
  Requirement progressive = Requirement::Any;
  Requirement regressive = Requirement::Any;
  std::optional<WeakOrderRequirement> weak_order;
  std::optional<std::size_t> covering_degree;
  std::optional<std::size_t> limit;  // maximum number of maps emitted
  bool count_only = false;
  bool modulo_relabeling = false;
  bool allow_large = false;  // lifts the search-space guard
  std::size_t threads = 1;
};

// Unpruned searches need k^n <= this.
inline constexpr std::size_t kUnprunedRowLimit = 16;
// Every search also needs its leaf count, k^(k^n) unpruned or
// (k!)^(k^(n-1)) pruned, to be at most this.
inline constexpr double kLeafLimit = 268435456.0;

// Enumerates every table over (k, n) satisfying the constraints in
// lexicographic table order, or only the lexicographically least member of
// each simultaneous-relabeling orbit when modulo_relabeling is set. Matches
// are passed to `emit` (at most `limit` of them, none when count_only);
// the return value is the exact number of matches. Output is independent
// of the thread count.
//
// Throws SpaceTooLarge when the guard trips and ContradictoryConstraints for
// requirement combinations that cannot hold together.
std::size_t enumerate(const SearchConstraints& constraints,
                      const std::function<void(const BlockMap&)>& emit);

struct SearchResult {
  std::vector<BlockMap> maps;
  std::size_t count = 0;
};

SearchResult enumerate(const SearchConstraints& constraints);

// Simultaneous relabeling pi . d . pi^{-1}, applied coordinate-wise on the
// domain. `permutation[s]` is the new name of symbol s.
BlockMap relabel(const BlockMap& d, const std::vector<Symbol>& permutation);

// Lexicographically least table among all simultaneous relabelings.
BlockMap canonical_form(const BlockMap& d);

}  // namespace sbc
