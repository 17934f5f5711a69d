#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "sbc/block_map.hpp"
#include "sbc/pair_automaton.hpp"

namespace sbc {

inline constexpr std::size_t kDefaultMaxWeakOrder = 6;

// Two domain words with the same output, showing a per-context map is not
// a bijection of A.
struct Collision {
  Word first;
  Word second;
  Symbol output = 0;
};

struct BijectivityVerdict {
  bool holds = true;
  std::optional<Collision> witness;
};

// Progressive: for every prefix p in A^{n-1}, a -> d(pa) is a bijection.
BijectivityVerdict is_progressive(const BlockMap& d);

// Regressive: for every suffix s in A^{n-1}, a -> d(as) is a bijection.
BijectivityVerdict is_regressive(const BlockMap& d);

// A (mu, nu) pair for which the number of admissible next symbols is not
// exactly one. `admissible` lists them (empty or at least two).
struct WeakWitness {
  Word mu;
  Word nu;
  std::vector<Symbol> admissible;
};

struct WeakVerdict {
  bool holds = true;
  std::optional<WeakWitness> witness;
};

// Weakly progressive of order m: for every mu in A^n and nu in A^m with
// d(mu) = nu_1 there is exactly one a such that some alpha in A^{m-1} gives
// slide(d, mu_1..mu_{n-1} a alpha) = nu. Only mu's prefix and d(mu) matter,
// so the check runs over (prefix, attainable nu) pairs.
WeakVerdict is_weakly_progressive(const BlockMap& d, std::size_t order);

struct WeakOrderSearch {
  std::optional<std::size_t> order;
  std::size_t bound = kDefaultMaxWeakOrder;
};

// Least m <= max_order that is_weakly_progressive accepts. Every m is tested;
// no monotonicity in m is assumed.
WeakOrderSearch weak_progressive_order(const BlockMap& d,
                                       std::size_t max_order = kDefaultMaxWeakOrder);

// Characterization: the code *-commutes with the shift iff d is regressive.
bool star_commutes_with_shift(const BlockMap& d);

// Brute-force finite rendering of *-commuting at depth L >= n: for every
// z in A^L and every y in A^{L-n+2} whose tail is slide(d, z), exactly one
// x in A^{L+1} has x_2.. = z and slide(d, x) = y. Shares no code with
// is_regressive. Throws DepthTooSmall.
bool star_commute_oracle(const BlockMap& d, std::size_t depth);

// All u in A^{|nu|+n-1} with slide(d, u) = nu, lexicographically sorted.
// Stops after `limit` words when given.
std::vector<Word> preimage_prefixes(const BlockMap& d, std::span<const Symbol> nu,
                                    std::optional<std::size_t> limit = std::nullopt);

struct CoveringDegree {
  std::optional<std::size_t> degree;
  // counts[s] = number of prefixes p in A^{n-1} with s in {d(pa) : a in A}.
  std::vector<std::size_t> counts;
};

// Requires a weak order for which d has been (and is re-)verified weakly
// progressive; each cylinder Z(p) then maps bijectively onto the union of
// Z(d(pa)), so a constant count table is the covering degree. Throws
// PreconditionUnverified when the witness is missing or does not hold.
CoveringDegree covering_degree(const BlockMap& d, std::optional<std::size_t> weak_order);

struct ProvenLocalHomeo {
  std::size_t weak_order;
};
struct RefutedLocalHomeo {
  DivergenceWitness witness;
};
struct UnknownLocalHomeo {
  std::size_t weak_bound;
};
using LocalHomeoVerdict = std::variant<ProvenLocalHomeo, RefutedLocalHomeo, UnknownLocalHomeo>;

struct PropertyReport {
  BlockMap minimal;
  BijectivityVerdict progressive;
  BijectivityVerdict regressive;
  WeakOrderSearch weak;
  bool star_commutes = false;
  std::size_t oracle_depth = 0;
  InjectivityVerdict injectivity;
  LocalHomeoVerdict local_homeo;
  std::optional<CoveringDegree> covering;

  std::size_t minimal_window() const noexcept { return minimal.window(); }
};

// Reduces d to its minimal window, then runs every checker on the minimal
// map and cross-checks the results. `oracle_depth` defaults to n_min + 3.
// Results that contradict the known implications between properties raise
// std::logic_error.
PropertyReport analyze(const BlockMap& d, std::size_t max_weak_order = kDefaultMaxWeakOrder,
                       std::optional<std::size_t> oracle_depth = std::nullopt);

}  // namespace sbc
