#include "sbc/derive.hpp"

#include <algorithm>
#include <string>

#include "sbc/error.hpp"
#include "sbc/rule_table.hpp"

namespace sbc {

bool SampleCorpus::add(Word input, Word output) {
  if (output.empty()) throw Error(ErrorCode::InvalidArgument, "sample output must be non-empty");
  if (input.size() < output.size()) {
    throw Error(ErrorCode::LengthMismatch, "sample input is shorter than its output");
  }
  require_symbols(input, alphabet_.size());
  require_symbols(output, alphabet_.size());
  Sample sample{std::move(input), std::move(output)};
  if (!index_.insert(sample).second) return false;
  samples_.push_back(std::move(sample));
  return true;
}

SampleCorpus corpus_from_block_map(const BlockMap& d, std::size_t length) {
  if (length < d.window()) {
    throw Error(ErrorCode::WordTooShort, "corpus inputs must be at least as long as the window");
  }
  SampleCorpus corpus(d.alphabet());
  Word x(length, 0);
  do {
    corpus.add(x, slide(d, x));
  } while (next_word(x, d.alphabet_size()));
  return corpus;
}

namespace {

struct Assignment {
  Symbol output;
  SampleRef source;
};

// Fills the window-n table from the corpus; returns the first conflict in
// scan order (samples in corpus order, positions ascending).
std::optional<Conflict> constrain(const SampleCorpus& corpus, std::size_t n,
                                  std::vector<std::optional<Assignment>>& table) {
  const std::size_t k = corpus.alphabet().size();
  const auto& samples = corpus.samples();
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Sample& sample = samples[s];
    for (std::size_t i = 0; i < sample.output.size() && i + n <= sample.input.size(); ++i) {
      const auto domain = std::span(sample.input).subspan(i, n);
      auto& entry = table[encode_word(domain, k)];
      const Symbol out = sample.output[i];
      if (!entry) {
        entry = Assignment{out, {s, i}};
      } else if (entry->output != out) {
        return Conflict{n, Word(domain.begin(), domain.end()), entry->source, entry->output,
                        SampleRef{s, i}, out};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

DeriveOutcome derive_block_map(const SampleCorpus& corpus, std::size_t max_window) {
  if (max_window == 0) throw Error(ErrorCode::InvalidArgument, "maximum window must be >= 1");
  const Alphabet& alphabet = corpus.alphabet();
  const std::size_t k = alphabet.size();

  std::vector<Conflict> conflicts;
  for (std::size_t n = 1; n <= max_window; ++n) {
    auto rows = checked_power(k, n);
    if (!rows) return WindowExceeded{max_window, n - 1, std::move(conflicts)};

    std::vector<std::optional<Assignment>> table(*rows);
    if (auto conflict = constrain(corpus, n, table)) {
      conflicts.push_back(std::move(*conflict));
      continue;
    }

    std::vector<Word> holes;
    std::vector<Symbol> outputs(*rows);
    for (std::size_t code = 0; code < *rows; ++code) {
      if (table[code]) {
        outputs[code] = table[code]->output;
      } else {
        holes.push_back(decode_word(code, k, n));
      }
    }
    if (!holes.empty()) return Underdetermined{n, std::move(holes)};

    BlockMap map(alphabet, n, std::move(outputs));
    // n is already the least consistent window, so a shorter reduction can
    // only appear when it breaks some end-of-input constraint.
    BlockMap reduced = reduce_to_minimal(map);
    if (reduced.window() < map.window() && verify_against_corpus(reduced, corpus).consistent) {
      return Derived{std::move(reduced)};
    }
    return Derived{std::move(map)};
  }
  return Inconsistent{std::move(conflicts)};
}

CorpusVerdict verify_against_corpus(const BlockMap& d, const SampleCorpus& corpus) {
  if (!(d.alphabet() == corpus.alphabet())) {
    throw Error(ErrorCode::AlphabetMismatch, "block map and corpus use different alphabets");
  }
  const auto& samples = corpus.samples();
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const Sample& sample = samples[s];
    if (sample.input.size() < d.window()) continue;
    const Word image = slide(d, sample.input);
    const std::size_t common = std::min(sample.output.size(), image.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (image[i] != sample.output[i]) {
        return {false, CorpusMismatch{s, i, sample.output[i], image[i]}};
      }
    }
  }
  return {true, std::nullopt};
}

SampleCorpus parse_samples(std::string_view text) {
  std::optional<SampleCorpus> corpus;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const auto tokens = split_tokens(text.substr(start, end - start));
    start = end + 1;
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!corpus) {
      auto k = tokens.size() == 2 && tokens[0] == "alphabet" ? parse_count(tokens[1])
                                                             : std::nullopt;
      if (!k || *k == 0) throw Error(ErrorCode::SyntaxError, "expected 'alphabet <count>'", number);
      corpus.emplace(Alphabet(*k));
      continue;
    }
    if (tokens.size() != 3 || tokens[1] != "->") {
      throw Error(ErrorCode::SyntaxError, "expected 'INPUT -> OUTPUT'", number);
    }
    try {
      const std::size_t k = corpus->alphabet().size();
      corpus->add(parse_word(tokens[0], k), parse_word(tokens[2], k));
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), number);
    }
  }
  if (!corpus) throw Error(ErrorCode::SyntaxError, "missing 'alphabet' header line");
  return std::move(*corpus);
}

std::string serialize_samples(const SampleCorpus& corpus) {
  const std::size_t k = corpus.alphabet().size();
  std::string out = "alphabet " + std::to_string(k) + "\n";
  for (const Sample& s : corpus.samples()) {
    out += format_word(s.input, k) + " -> " + format_word(s.output, k) + "\n";
  }
  return out;
}

}  // namespace sbc
