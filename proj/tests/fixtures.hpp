#pragma once

// Shared example maps and brute-force oracles for the test suites. The
// oracles deliberately avoid the library's evaluation paths: they index
// tables directly and enumerate whole word spaces.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "sbc/block_map.hpp"

namespace sbc::testing {

inline BlockMap table_map(std::size_t k, std::size_t n, std::vector<Symbol> table) {
  return BlockMap(Alphabet(k), n, std::move(table));
}

inline BlockMap counterex() {
  return table_map(4, 2, {0, 0, 1, 1, 3, 3, 2, 2, 2, 2, 3, 3, 1, 1, 0, 0});
}

inline BlockMap wpnotr() {
  return table_map(4, 2, {0, 0, 1, 1, 2, 2, 3, 3, 0, 0, 1, 1, 2, 2, 3, 3});
}

inline BlockMap flip() { return table_map(2, 1, {1, 0}); }

inline BlockMap constant_map(std::size_t k, std::size_t n, Symbol value) {
  return BlockMap::from_rule(Alphabet(k), n, [=](std::span<const Symbol>) { return value; });
}

// d(a_1..a_n) = (a_1 + ... + a_n) mod n over {0..n-1}.
inline BlockMap modn(std::size_t n) {
  return BlockMap::from_rule(Alphabet(n), n, [=](std::span<const Symbol> w) {
    return static_cast<Symbol>(std::accumulate(w.begin(), w.end(), std::size_t{0}) % n);
  });
}

inline std::vector<Word> all_words(std::size_t k, std::size_t length) {
  std::vector<Word> words;
  Word w(length, 0);
  while (true) {
    words.push_back(w);
    std::size_t i = length;
    while (i > 0 && w[i - 1] + 1 == k) w[--i] = 0;
    if (i == 0) break;
    ++w[i - 1];
  }
  return words;
}

// Every table d : A^n -> A, in lexicographic table order.
inline void for_each_table(std::size_t k, std::size_t n, const std::function<void(const BlockMap&)>& f) {
  std::size_t rows = 1;
  for (std::size_t i = 0; i < n; ++i) rows *= k;
  for (const Word& table : all_words(k, rows)) f(table_map(k, n, table));
}

inline Symbol lookup(const BlockMap& d, std::span<const Symbol> window) {
  std::size_t index = 0;
  for (Symbol s : window) index = index * d.alphabet_size() + s;
  return d.table()[index];
}

inline Word naive_slide(const BlockMap& d, const Word& w) {
  Word out;
  for (std::size_t i = 0; i + d.window() <= w.size(); ++i) {
    out.push_back(lookup(d, std::span(w).subspan(i, d.window())));
  }
  return out;
}

// Bijectivity of a -> d(context with a inserted at slot), for every context.
inline bool naive_bijective_at(const BlockMap& d, std::size_t slot) {
  const std::size_t k = d.alphabet_size();
  for (const Word& context : all_words(k, d.window() - 1)) {
    std::set<Symbol> image;
    for (Symbol a = 0; a < k; ++a) {
      Word w = context;
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(slot), a);
      image.insert(lookup(d, w));
    }
    if (image.size() != k) return false;
  }
  return true;
}

inline bool naive_progressive(const BlockMap& d) { return naive_bijective_at(d, d.window() - 1); }
inline bool naive_regressive(const BlockMap& d) { return naive_bijective_at(d, 0); }

// The weak-progressive definition read literally: every mu in A^n, every
// nu in A^m with d(mu) = nu_1, count a with some alpha giving nu.
inline bool naive_weakly_progressive(const BlockMap& d, std::size_t m) {
  const std::size_t k = d.alphabet_size();
  const std::size_t n = d.window();
  const auto alphas = all_words(k, m - 1);
  for (const Word& mu : all_words(k, n)) {
    for (const Word& nu : all_words(k, m)) {
      if (lookup(d, mu) != nu[0]) continue;
      std::size_t admissible = 0;
      for (Symbol a = 0; a < k; ++a) {
        bool found = false;
        for (const Word& alpha : alphas) {
          Word u(mu.begin(), mu.end() - 1);
          u.push_back(a);
          u.insert(u.end(), alpha.begin(), alpha.end());
          if (naive_slide(d, u) == nu) {
            found = true;
            break;
          }
        }
        admissible += found;
      }
      if (admissible != 1) return false;
    }
  }
  return true;
}

inline std::vector<Word> naive_preimages(const BlockMap& d, const Word& nu) {
  std::vector<Word> found;
  for (const Word& u : all_words(d.alphabet_size(), nu.size() + d.window() - 1)) {
    if (naive_slide(d, u) == nu) found.push_back(u);
  }
  return found;
}

}  // namespace sbc::testing
