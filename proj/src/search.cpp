#include "sbc/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>

#include "sbc/error.hpp"
#include "sbc/properties.hpp"

namespace sbc {

BlockMap relabel(const BlockMap& d, const std::vector<Symbol>& permutation) {
  const std::size_t k = d.alphabet_size();
  if (permutation.size() != k) {
    throw Error(ErrorCode::InvalidArgument, "relabeling must permute the whole alphabet");
  }
  std::vector<Symbol> table(d.domain_size());
  Word w(d.window(), 0);
  Word image(d.window());
  std::size_t code = 0;
  do {
    std::transform(w.begin(), w.end(), image.begin(), [&](Symbol s) { return permutation[s]; });
    table[encode_word(image, k)] = permutation[d.at(code++)];
  } while (next_word(w, k));
  return BlockMap(d.alphabet(), d.window(), std::move(table));
}

BlockMap canonical_form(const BlockMap& d) {
  std::vector<Symbol> permutation(d.alphabet_size());
  std::iota(permutation.begin(), permutation.end(), Symbol{0});
  BlockMap best = d;
  do {
    BlockMap candidate = relabel(d, permutation);
    if (std::lexicographical_compare(candidate.table().begin(), candidate.table().end(),
                                     best.table().begin(), best.table().end())) {
      best = std::move(candidate);
    }
  } while (std::next_permutation(permutation.begin(), permutation.end()));
  return best;
}

namespace {

using Mask = std::uint32_t;

double leaf_estimate(std::size_t k, std::size_t n, bool pruned) {
  const double kd = static_cast<double>(k);
  if (pruned) return std::exp(std::lgamma(kd + 1.0) * std::pow(kd, static_cast<double>(n - 1)));
  return std::exp(std::log(kd) * std::pow(kd, static_cast<double>(n)));
}

void validate(const SearchConstraints& c) {
  if (c.alphabet_size == 0 || c.window == 0) {
    throw Error(ErrorCode::InvalidArgument, "alphabet size and window must be >= 1");
  }
  if (c.weak_order && c.weak_order->order == 0) {
    throw Error(ErrorCode::InvalidArgument, "weak order must be >= 1");
  }
  if (c.threads == 0) throw Error(ErrorCode::InvalidArgument, "thread count must be >= 1");

  const bool exact_weak = c.weak_order && !c.weak_order->at_most;
  if (c.progressive == Requirement::Yes && exact_weak && c.weak_order->order >= 2) {
    throw Error(ErrorCode::ContradictoryConstraints,
                "progressive maps have weak order 1, not " + std::to_string(c.weak_order->order));
  }
  if (c.progressive == Requirement::No && exact_weak && c.weak_order->order == 1) {
    throw Error(ErrorCode::ContradictoryConstraints,
                "weak order 1 is equivalent to progressive");
  }
  if (c.progressive == Requirement::Yes && c.covering_degree) {
    auto expected = checked_power(c.alphabet_size, c.window - 1);
    if (!expected || *c.covering_degree != *expected) {
      throw Error(ErrorCode::ContradictoryConstraints,
                  "progressive maps have covering degree k^(n-1)");
    }
  }

  auto rows = checked_power(c.alphabet_size, c.window);
  if (!rows) throw Error(ErrorCode::SpaceTooLarge, "table size exceeds the limit");
  if (c.alphabet_size > 32) throw Error(ErrorCode::SpaceTooLarge, "alphabet too large to search");
  if (c.allow_large) return;
  const bool pruned = c.progressive == Requirement::Yes || c.regressive == Requirement::Yes;
  if (!pruned && *rows > kUnprunedRowLimit) {
    throw Error(ErrorCode::SpaceTooLarge,
                "unpruned search needs k^n <= " + std::to_string(kUnprunedRowLimit) + " (got " +
                    std::to_string(*rows) + "); add --progressive/--regressive yes or override");
  }
  if (leaf_estimate(c.alphabet_size, c.window, pruned) > kLeafLimit) {
    throw Error(ErrorCode::SpaceTooLarge, "search space exceeds the leaf limit");
  }
}

class Searcher {
 public:
  explicit Searcher(const SearchConstraints& c)
      : c_(c),
        k_(c.alphabet_size),
        rows_(*checked_power(c.alphabet_size, c.window)),
        contexts_(rows_ / k_),
        prune_rows_(c.progressive == Requirement::Yes),
        prune_columns_(c.regressive == Requirement::Yes),
        alphabet_(c.alphabet_size) {
    if (c.modulo_relabeling) build_relabelings();
  }

  std::size_t rows() const { return rows_; }

  struct State {
    std::vector<Symbol> table;
    std::vector<Mask> row_used;     // by prefix: outputs taken in row p·a
    std::vector<Mask> column_used;  // by suffix: outputs taken in column a·s
  };

  State empty_state() const {
    return {std::vector<Symbol>(rows_, 0), std::vector<Mask>(contexts_, 0),
            std::vector<Mask>(contexts_, 0)};
  }

  // Visits every admissible completion of cells [pos, stop) in
  // lexicographic order.
  template <class Visit>
  void fill(State& s, std::size_t pos, std::size_t stop, Visit& visit) const {
    if (pos == stop) {
      visit(s);
      return;
    }
    const std::size_t row = pos / k_;
    const std::size_t column = pos % contexts_;
    for (Symbol v = 0; v < k_; ++v) {
      const Mask bit = Mask{1} << v;
      if (prune_rows_ && (s.row_used[row] & bit)) continue;
      if (prune_columns_ && (s.column_used[column] & bit)) continue;
      s.table[pos] = v;
      s.row_used[row] |= bit;
      s.column_used[column] |= bit;
      fill(s, pos + 1, stop, visit);
      s.row_used[row] &= ~bit;
      s.column_used[column] &= ~bit;
    }
  }

  bool accepts(const std::vector<Symbol>& table) const {
    if (c_.modulo_relabeling && !is_canonical(table)) return false;
    const BlockMap d(alphabet_, c_.window, table);
    if (c_.progressive == Requirement::No && is_progressive(d).holds) return false;
    if (c_.regressive == Requirement::No && is_regressive(d).holds) return false;
    if (c_.weak_order || c_.covering_degree) {
      const std::size_t bound = c_.weak_order ? c_.weak_order->order : kDefaultMaxWeakOrder;
      const auto weak = weak_progressive_order(d, bound);
      if (c_.weak_order && (!weak.order || (!c_.weak_order->at_most && *weak.order != bound))) {
        return false;
      }
      if (c_.covering_degree) {
        if (!weak.order) return false;
        if (covering_degree(d, weak.order).degree != c_.covering_degree) return false;
      }
    }
    return true;
  }

 private:
  void build_relabelings() {
    std::vector<Symbol> permutation(k_);
    std::iota(permutation.begin(), permutation.end(), Symbol{0});
    while (std::next_permutation(permutation.begin(), permutation.end())) {
      // relabeled[j] = pi(table[source[j]]) where source[j] = code(pi^-1(word j)).
      std::vector<Symbol> inverse(k_);
      for (Symbol s = 0; s < k_; ++s) inverse[permutation[s]] = s;
      std::vector<std::size_t> source(rows_);
      Word w(c_.window, 0);
      std::size_t j = 0;
      do {
        Word pre(w.size());
        std::transform(w.begin(), w.end(), pre.begin(), [&](Symbol s) { return inverse[s]; });
        source[j++] = encode_word(pre, k_);
      } while (next_word(w, k_));
      relabelings_.push_back({permutation, std::move(source)});
    }
  }

  bool is_canonical(const std::vector<Symbol>& table) const {
    for (const auto& r : relabelings_) {
      for (std::size_t j = 0; j < rows_; ++j) {
        const Symbol image = r.permutation[table[r.source[j]]];
        if (image < table[j]) return false;
        if (image > table[j]) break;
      }
    }
    return true;
  }

  struct Relabeling {
    std::vector<Symbol> permutation;
    std::vector<std::size_t> source;
  };

  const SearchConstraints& c_;
  std::size_t k_;
  std::size_t rows_;
  std::size_t contexts_;
  bool prune_rows_;
  bool prune_columns_;
  Alphabet alphabet_;
  std::vector<Relabeling> relabelings_;
};

struct SeedResult {
  std::size_t count = 0;
  std::vector<std::vector<Symbol>> tables;
};

}  // namespace

std::size_t enumerate(const SearchConstraints& constraints,
                      const std::function<void(const BlockMap&)>& emit) {
  validate(constraints);
  const Searcher searcher(constraints);
  const std::size_t cap =
      constraints.count_only ? 0 : constraints.limit.value_or(static_cast<std::size_t>(-1));

  // The first two cells split the tree into independent subtrees.
  const std::size_t split = std::min<std::size_t>(2, searcher.rows());
  std::vector<Searcher::State> seeds;
  {
    auto state = searcher.empty_state();
    auto collect = [&](const Searcher::State& s) { seeds.push_back(s); };
    searcher.fill(state, 0, split, collect);
  }

  const Alphabet alphabet(constraints.alphabet_size);
  std::size_t count = 0;
  std::size_t emitted = 0;

  if (constraints.threads == 1) {
    for (auto& seed : seeds) {
      auto visit = [&](const Searcher::State& s) {
        if (!searcher.accepts(s.table)) return;
        ++count;
        if (emitted < cap) {
          ++emitted;
          emit(BlockMap(alphabet, constraints.window, s.table));
        }
      };
      searcher.fill(seed, split, searcher.rows(), visit);
    }
    return count;
  }

  std::vector<SeedResult> results(seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      SeedResult& result = results[i];
      auto visit = [&](const Searcher::State& s) {
        if (!searcher.accepts(s.table)) return;
        ++result.count;
        if (result.tables.size() < cap) result.tables.push_back(s.table);
      };
      searcher.fill(seeds[i], split, searcher.rows(), visit);
    }
  };
  std::vector<std::thread> pool;
  const std::size_t workers = std::min(constraints.threads, std::max<std::size_t>(seeds.size(), 1));
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (auto& result : results) {
    count += result.count;
    for (auto& table : result.tables) {
      if (emitted == cap) break;
      ++emitted;
      emit(BlockMap(alphabet, constraints.window, std::move(table)));
    }
  }
  return count;
}

SearchResult enumerate(const SearchConstraints& constraints) {
  SearchResult result;
  result.count = enumerate(constraints, [&](const BlockMap& d) { result.maps.push_back(d); });
  return result;
}

}  // namespace sbc
