#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sbc/block_map.hpp"

namespace sbc {

// Synchronous product of two copies of a block map's window. A state is an
// ordered pair (u, v) of words of length n-1; reading (a, b) moves to
// (u_2..u_{n-1} a, v_2..v_{n-1} b) and the edge exists iff d(ua) = d(vb).
// Infinite paths are pairs of input tails with identical outputs.
class PairAutomaton {
 public:
  struct Edge {
    Symbol left;
    Symbol right;
    std::size_t target;
  };

  explicit PairAutomaton(const BlockMap& d);

  std::size_t alphabet_size() const noexcept { return k_; }
  std::size_t window() const noexcept { return n_; }
  std::size_t state_count() const noexcept { return edges_.size(); }
  std::size_t suffix_count() const noexcept { return suffix_count_; }

  // State index of (u, v) given their radix codes.
  std::size_t state(std::size_t left_code, std::size_t right_code) const noexcept {
    return left_code * suffix_count_ + right_code;
  }
  std::size_t left_code(std::size_t state) const noexcept { return state / suffix_count_; }
  std::size_t right_code(std::size_t state) const noexcept { return state % suffix_count_; }
  bool is_diagonal(std::size_t state) const noexcept { return left_code(state) == right_code(state); }

  // Edges in lexicographic (left, right) label order.
  const std::vector<Edge>& edges(std::size_t state) const { return edges_[state]; }

  // States from which an infinite path starts (equivalently, that reach a
  // cycle).
  std::vector<bool> states_with_infinite_paths() const;

 private:
  std::size_t k_;
  std::size_t n_;
  std::size_t suffix_count_;
  std::vector<std::vector<Edge>> edges_;
};

// Two distinct eventually periodic inputs with equal images:
//   context · left_stem · left_cycle^inf  and  context · right_stem · right_cycle^inf.
// Both stems start at the divergent labels, so the inputs lie in the same
// cylinder Z(context) with |context| = n - 1.
struct DivergenceWitness {
  Word context;
  Symbol left_label = 0;
  Symbol right_label = 0;
  Word left_stem;
  Word right_stem;
  Word left_cycle;
  Word right_cycle;

  // First `length` symbols of either infinite input.
  Word left_prefix(std::size_t length) const;
  Word right_prefix(std::size_t length) const;
};

struct InjectivityVerdict {
  bool injective = true;
  std::optional<DivergenceWitness> witness;
};

// Decides whether the code is injective on every cylinder Z(w), |w| = n-1:
// it is not iff some diagonal state has a divergent edge (a != b) into a
// state with an infinite path.
InjectivityVerdict cylinder_injectivity(const BlockMap& d);

}  // namespace sbc
