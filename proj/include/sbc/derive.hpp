#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sbc/block_map.hpp"

namespace sbc {

// One observation of an unknown shift-commuting map phi: every input
// starting with `input` has an image starting with `output`.
struct Sample {
  Word input;
  Word output;

  auto operator<=>(const Sample&) const = default;
};

// A finite set of samples over one alphabet. Duplicate samples collapse;
// insertion order is otherwise kept and fixes witness scan order.
class SampleCorpus {
 public:
  explicit SampleCorpus(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  // Returns false if the sample was already present. Throws on empty
  // output, |input| < |output| or symbols outside the alphabet.
  bool add(Word input, Word output);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Sample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

 private:
  Alphabet alphabet_;
  std::vector<Sample> samples_;
  std::set<Sample> index_;
};

// Corpus of (x, slide(d, x)) for every x in A^length (length >= window).
SampleCorpus corpus_from_block_map(const BlockMap& d, std::size_t length);

// Where a constraint came from: sample index and 0-based output position.
struct SampleRef {
  std::size_t sample = 0;
  std::size_t position = 0;
};

// At window n, two constraints demand different outputs for one domain word.
struct Conflict {
  std::size_t window = 0;
  Word domain;
  SampleRef first;
  Symbol first_output = 0;
  SampleRef second;
  Symbol second_output = 0;
};

struct Derived {
  BlockMap map;
};
// Every window up to the bound conflicts; one witness per window.
struct Inconsistent {
  std::vector<Conflict> conflicts;
};
// The least consistent window leaves some domain words unconstrained.
struct Underdetermined {
  std::size_t window = 0;
  std::vector<Word> holes;
};
// The table-size limit stopped the scan before the bound; every window
// tried conflicted.
struct WindowExceeded {
  std::size_t max_window = 0;
  std::size_t last_tried = 0;
  std::vector<Conflict> conflicts;
};
using DeriveOutcome = std::variant<Derived, Inconsistent, Underdetermined, WindowExceeded>;

// Searches n = 1..max_window for the least window at which a block map is
// consistent with every sample: sample (x, y) forces d(x_i..x_{i+n-1}) = y_i
// whenever i <= |y| and i+n-1 <= |x|. Unconstrained rows are reported, never
// guessed.
DeriveOutcome derive_block_map(const SampleCorpus& corpus, std::size_t max_window);

struct CorpusMismatch {
  std::size_t sample = 0;
  std::size_t position = 0;
  Symbol expected = 0;
  Symbol actual = 0;
};

struct CorpusVerdict {
  bool consistent = true;
  std::optional<CorpusMismatch> witness;
};

// True iff every sample's output agrees with slide(d, input) on their
// common length. Samples with |input| < n claim nothing.
CorpusVerdict verify_against_corpus(const BlockMap& d, const SampleCorpus& corpus);

// Samples file: `alphabet K` header, then one `INPUT -> OUTPUT` per line,
// words as on the command line; '#' comments and blank lines ignored.
SampleCorpus parse_samples(std::string_view text);
std::string serialize_samples(const SampleCorpus& corpus);

}  // namespace sbc
