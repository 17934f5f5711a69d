#include "sbc/pair_automaton.hpp"

#include <deque>
#include <map>

namespace sbc {

PairAutomaton::PairAutomaton(const BlockMap& d)
    : k_(d.alphabet_size()),
      n_(d.window()),
      suffix_count_(d.domain_size() / d.alphabet_size()) {
  edges_.resize(suffix_count_ * suffix_count_);
  for (std::size_t u = 0; u < suffix_count_; ++u) {
    for (std::size_t v = 0; v < suffix_count_; ++v) {
      auto& out = edges_[state(u, v)];
      for (std::size_t a = 0; a < k_; ++a) {
        const std::size_t ua = u * k_ + a;
        for (std::size_t b = 0; b < k_; ++b) {
          const std::size_t vb = v * k_ + b;
          if (d.at(ua) != d.at(vb)) continue;
          out.push_back({static_cast<Symbol>(a), static_cast<Symbol>(b),
                         state(ua % suffix_count_, vb % suffix_count_)});
        }
      }
    }
  }
}

std::vector<bool> PairAutomaton::states_with_infinite_paths() const {
  const std::size_t count = state_count();
  std::vector<std::vector<std::size_t>> predecessors(count);
  std::vector<std::size_t> out_degree(count, 0);
  for (std::size_t s = 0; s < count; ++s) {
    out_degree[s] = edges_[s].size();
    for (const Edge& e : edges_[s]) predecessors[e.target].push_back(s);
  }
  // Peel off states whose every path dead-ends.
  std::vector<bool> alive(count, true);
  std::deque<std::size_t> dead;
  for (std::size_t s = 0; s < count; ++s) {
    if (out_degree[s] == 0) {
      alive[s] = false;
      dead.push_back(s);
    }
  }
  while (!dead.empty()) {
    std::size_t s = dead.front();
    dead.pop_front();
    for (std::size_t p : predecessors[s]) {
      if (alive[p] && --out_degree[p] == 0) {
        alive[p] = false;
        dead.push_back(p);
      }
    }
  }
  return alive;
}

namespace {

Word eventually_periodic_prefix(const Word& context, const Word& stem, const Word& cycle,
                                std::size_t length) {
  Word out;
  out.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (i < context.size()) {
      out.push_back(context[i]);
    } else if (i - context.size() < stem.size()) {
      out.push_back(stem[i - context.size()]);
    } else {
      out.push_back(cycle[(i - context.size() - stem.size()) % cycle.size()]);
    }
  }
  return out;
}

}  // namespace

Word DivergenceWitness::left_prefix(std::size_t length) const {
  return eventually_periodic_prefix(context, left_stem, left_cycle, length);
}

Word DivergenceWitness::right_prefix(std::size_t length) const {
  return eventually_periodic_prefix(context, right_stem, right_cycle, length);
}

InjectivityVerdict cylinder_injectivity(const BlockMap& d) {
  const PairAutomaton automaton(d);
  const auto alive = automaton.states_with_infinite_paths();
  const std::size_t k = automaton.alphabet_size();
  const std::size_t context_length = automaton.window() - 1;

  for (std::size_t w = 0; w < automaton.suffix_count(); ++w) {
    const std::size_t diagonal = automaton.state(w, w);
    for (const auto& divergent : automaton.edges(diagonal)) {
      if (divergent.left == divergent.right || !alive[divergent.target]) continue;

      DivergenceWitness witness;
      witness.context = decode_word(w, k, context_length);
      witness.left_label = divergent.left;
      witness.right_label = divergent.right;

      // Walk live edges until a state repeats: stem, then cycle.
      Word left_labels, right_labels;
      std::map<std::size_t, std::size_t> first_visit;
      std::size_t current = divergent.target;
      while (!first_visit.contains(current)) {
        first_visit[current] = left_labels.size();
        for (const auto& e : automaton.edges(current)) {
          if (!alive[e.target]) continue;
          left_labels.push_back(e.left);
          right_labels.push_back(e.right);
          current = e.target;
          break;
        }
      }
      const auto cycle_start = static_cast<std::ptrdiff_t>(first_visit[current]);
      witness.left_stem.push_back(divergent.left);
      witness.right_stem.push_back(divergent.right);
      witness.left_stem.insert(witness.left_stem.end(), left_labels.begin(),
                               left_labels.begin() + cycle_start);
      witness.right_stem.insert(witness.right_stem.end(), right_labels.begin(),
                                right_labels.begin() + cycle_start);
      witness.left_cycle.assign(left_labels.begin() + cycle_start, left_labels.end());
      witness.right_cycle.assign(right_labels.begin() + cycle_start, right_labels.end());
      return {false, std::move(witness)};
    }
  }
  return {true, std::nullopt};
}

}  // namespace sbc
