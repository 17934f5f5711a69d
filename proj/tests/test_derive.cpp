#include <doctest.h>

#include "fixtures.hpp"
#include "sbc/derive.hpp"
#include "sbc/error.hpp"

using namespace sbc;
using namespace sbc::testing;

namespace {

SampleCorpus flip_at_fixed_points() {
  SampleCorpus corpus{Alphabet(2)};
  corpus.add({0, 0, 0, 0, 0}, {1, 1, 1, 1});
  corpus.add({0, 0, 0, 0, 1}, {0, 0, 0, 0});
  return corpus;
}

}  // namespace

TEST_CASE("sample corpus invariants") {
  SampleCorpus corpus{Alphabet(2)};
  CHECK(corpus.add({0, 1}, {1}));
  CHECK_FALSE(corpus.add({0, 1}, {1}));
  CHECK(corpus.size() == 1);
  CHECK_THROWS_AS(corpus.add({0}, {0, 1}), Error);
  CHECK_THROWS_AS(corpus.add({0, 1}, {}), Error);
  CHECK_THROWS_AS(corpus.add({0, 2}, {1}), Error);
}

TEST_CASE("derive recovers the shift map") {
  const BlockMap shift = shift_block_map(Alphabet(2));
  const auto outcome = derive_block_map(corpus_from_block_map(shift, 3), 4);
  REQUIRE(std::holds_alternative<Derived>(outcome));
  CHECK(std::get<Derived>(outcome).map == shift);
}

TEST_CASE("derive recovers a constant function at window 1") {
  for (Symbol a = 0; a < 3; ++a) {
    SampleCorpus corpus{Alphabet(3)};
    for (const Word& x : all_words(3, 2)) corpus.add(x, {a});
    const auto outcome = derive_block_map(corpus, 4);
    REQUIRE(std::holds_alternative<Derived>(outcome));
    CHECK(std::get<Derived>(outcome).map == constant_map(3, 1, a));
  }
}

TEST_CASE("derive reports the flip-at-fixed-points function as inconsistent") {
  const auto outcome = derive_block_map(flip_at_fixed_points(), 4);
  REQUIRE(std::holds_alternative<Inconsistent>(outcome));
  const auto& conflicts = std::get<Inconsistent>(outcome).conflicts;
  REQUIRE(conflicts.size() == 4);
  for (std::size_t n = 1; n <= 4; ++n) {
    const Conflict& c = conflicts[n - 1];
    CHECK(c.window == n);
    CHECK(c.domain == Word(n, 0));
    CHECK(c.first_output != c.second_output);
    CHECK(c.first.sample != c.second.sample);
  }
  // One more symbol of context separates the two samples.
  CHECK(std::holds_alternative<Underdetermined>(derive_block_map(flip_at_fixed_points(), 5)));
}

TEST_CASE("derive recovers the counterexample table exactly") {
  const BlockMap d = counterex();
  const SampleCorpus corpus = corpus_from_block_map(d, 4);
  CHECK(corpus.size() == 256);
  const auto outcome = derive_block_map(corpus, 4);
  REQUIRE(std::holds_alternative<Derived>(outcome));
  CHECK(std::get<Derived>(outcome).map == d);
}

TEST_CASE("derive reports holes instead of guessing") {
  SampleCorpus corpus{Alphabet(2)};
  corpus.add({0, 1}, {1});
  corpus.add({1, 1}, {1});
  corpus.add({0, 0}, {0});
  // n = 1 conflicts (d(0) = 1 and d(0) = 0); n = 2 lacks the row 10.
  const auto outcome = derive_block_map(corpus, 3);
  REQUIRE(std::holds_alternative<Underdetermined>(outcome));
  const auto& under = std::get<Underdetermined>(outcome);
  CHECK(under.window == 2);
  CHECK(under.holes == std::vector<Word>{{1, 0}});
}

TEST_CASE("derive stops at the table-size limit") {
  SampleCorpus corpus{Alphabet(16)};
  corpus.add({0, 0, 0, 0, 0, 0, 0, 0}, {1});
  corpus.add({0, 0, 0, 0, 0, 0, 0, 1}, {0});
  const auto outcome = derive_block_map(corpus, 8);
  REQUIRE(std::holds_alternative<WindowExceeded>(outcome));
  const auto& exceeded = std::get<WindowExceeded>(outcome);
  CHECK(exceeded.max_window == 8);
  CHECK(exceeded.last_tried == 6);
  CHECK(exceeded.conflicts.size() == 6);
}

TEST_CASE("derive keeps the least consistent window when reduction would break a sample") {
  // The window-2 table is constant 0, so it reduces to window 1, but the
  // short sample 0 -> 1 rules the constant window-1 map out.
  SampleCorpus corpus{Alphabet(2)};
  corpus.add({0}, {1});
  corpus.add({0, 0}, {0});
  corpus.add({0, 1}, {0});
  corpus.add({1, 0}, {0});
  corpus.add({1, 1}, {0});
  const auto outcome = derive_block_map(corpus, 3);
  REQUIRE(std::holds_alternative<Derived>(outcome));
  const BlockMap& map = std::get<Derived>(outcome).map;
  CHECK(map.window() == 2);
  CHECK(verify_against_corpus(map, corpus).consistent);
}

TEST_CASE("verify_against_corpus") {
  const BlockMap d = counterex();
  CHECK(verify_against_corpus(d, corpus_from_block_map(d, 3)).consistent);

  SampleCorpus corpus{Alphabet(2)};
  corpus.add({0, 1, 0}, {0});
  const auto verdict = verify_against_corpus(shift_block_map(Alphabet(2)), corpus);
  CHECK_FALSE(verdict.consistent);
  REQUIRE(verdict.witness);
  CHECK(verdict.witness->sample == 0);
  CHECK(verdict.witness->position == 0);
  CHECK(verdict.witness->expected == 0);
  CHECK(verdict.witness->actual == 1);

  CHECK(verify_against_corpus(d, SampleCorpus{Alphabet(4)}).consistent);
  CHECK_THROWS_AS(verify_against_corpus(d, corpus), Error);
}

TEST_CASE("round trip over every binary table with window <= 2") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for_each_table(2, n, [&](const BlockMap& d) {
      const SampleCorpus corpus = corpus_from_block_map(d, n + 2);
      const auto outcome = derive_block_map(corpus, 4);
      REQUIRE(std::holds_alternative<Derived>(outcome));
      const BlockMap& derived = std::get<Derived>(outcome).map;
      REQUIRE(derived == reduce_to_minimal(d));
      // Soundness.
      REQUIRE(verify_against_corpus(derived, corpus).consistent);
      // Minimality: one window less has a conflict.
      if (derived.window() > 1) {
        REQUIRE(std::holds_alternative<Inconsistent>(derive_block_map(corpus, derived.window() - 1)));
      }
      // Monotone evidence: samples generated from the result change nothing.
      SampleCorpus extended = corpus;
      for (const Word& x : all_words(2, n + 3)) extended.add(x, slide(derived, x));
      const auto again = derive_block_map(extended, 4);
      REQUIRE(std::holds_alternative<Derived>(again));
      REQUIRE(std::get<Derived>(again).map == derived);
    });
  }
}

TEST_CASE("samples file format") {
  const SampleCorpus corpus = parse_samples("# flip\nalphabet 2\n00000 -> 1111\n\n00001 -> 0000\n");
  CHECK(corpus.size() == 2);
  CHECK(corpus.samples()[1].input == Word{0, 0, 0, 0, 1});
  CHECK(parse_samples(serialize_samples(corpus)).samples() == corpus.samples());

  const SampleCorpus wide = parse_samples("alphabet 12\n11,0,3 -> 10\n");
  CHECK(wide.samples()[0].input == Word{11, 0, 3});
  CHECK(serialize_samples(wide) == "alphabet 12\n11,0,3 -> 10\n");

  auto line_of = [](const std::string& text) {
    try {
      parse_samples(text);
    } catch (const Error& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("alphabet 2\n01 -> 1\n01 1\n") == 3);
  CHECK(line_of("alphabet 2\n01 -> 2\n") == 2);
  CHECK(line_of("alphabet 2\n0 -> 11\n") == 2);
  CHECK(line_of("01 -> 1\n") == 1);
  CHECK_THROWS_AS(parse_samples("# nothing\n"), Error);
}
