#include "sbc/properties.hpp"

#include <stdexcept>
#include <string>

#include "sbc/error.hpp"

namespace sbc {

namespace {

// Checks that a -> d(word with `a` at position `slot`) is a bijection for
// every filling of the other n-1 coordinates. slot = n-1 is the progressive
// (last coordinate) test, slot = 0 the regressive (first coordinate) one.
BijectivityVerdict free_coordinate_bijective(const BlockMap& d, std::size_t slot) {
  const std::size_t k = d.alphabet_size();
  const std::size_t n = d.window();
  Word context(n - 1, 0);
  std::vector<std::optional<Symbol>> seen(k);
  auto domain = [&](Symbol a) {
    Word w = context;
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(slot), a);
    return w;
  };
  do {
    std::fill(seen.begin(), seen.end(), std::nullopt);
    for (Symbol a = 0; a < k; ++a) {
      const Word w = domain(a);
      const Symbol out = d.at(encode_word(w, k));
      if (seen[out]) return {false, Collision{domain(*seen[out]), w, out}};
      seen[out] = a;
    }
  } while (next_word(context, k));
  return {true, std::nullopt};
}

}  // namespace

BijectivityVerdict is_progressive(const BlockMap& d) {
  return free_coordinate_bijective(d, d.window() - 1);
}

BijectivityVerdict is_regressive(const BlockMap& d) { return free_coordinate_bijective(d, 0); }

WeakVerdict is_weakly_progressive(const BlockMap& d, std::size_t order) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "weak progressive order must be >= 1");
  const std::size_t k = d.alphabet_size();
  const std::size_t n = d.window();
  const std::size_t prefixes = d.domain_size() / k;
  auto outputs = checked_power(k, order);
  if (!outputs || *outputs > kMaxTableSize / k) {
    throw Error(ErrorCode::SpaceTooLarge,
                "weak progressive check of order " + std::to_string(order) + " is too large");
  }
  const std::size_t tail_outputs = *outputs / k;

  // reachable[a * outputs + code(nu)]: some alpha drives prefix·a·alpha to nu.
  std::vector<char> reachable(k * *outputs);
  std::vector<char> in_image(k);

  for (std::size_t prefix = 0; prefix < prefixes; ++prefix) {
    std::fill(reachable.begin(), reachable.end(), 0);
    std::fill(in_image.begin(), in_image.end(), 0);

    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t first = prefix * k + a;
      in_image[d.at(first)] = 1;
      char* marks = reachable.data() + a * *outputs;
      // Depth-first over alpha; suffix holds the last n-1 input symbols.
      auto extend = [&](auto&& self, std::size_t suffix, std::size_t code,
                        std::size_t remaining) -> void {
        if (remaining == 0) {
          marks[code] = 1;
          return;
        }
        for (std::size_t b = 0; b < k; ++b) {
          const std::size_t window = suffix * k + b;
          self(self, window % prefixes, code * k + d.at(window), remaining - 1);
        }
      };
      extend(extend, first % prefixes, d.at(first), order - 1);
    }

    for (std::size_t nu = 0; nu < *outputs; ++nu) {
      const auto head = static_cast<Symbol>(nu / tail_outputs);
      if (!in_image[head]) continue;
      std::vector<Symbol> admissible;
      for (std::size_t a = 0; a < k; ++a) {
        if (reachable[a * *outputs + nu]) admissible.push_back(static_cast<Symbol>(a));
      }
      if (admissible.size() == 1) continue;

      Word mu = decode_word(prefix, k, n - 1);
      for (Symbol a = 0; a < k; ++a) {
        if (d.at(prefix * k + a) == head) {
          mu.push_back(a);
          break;
        }
      }
      return {false, WeakWitness{std::move(mu), decode_word(nu, k, order), std::move(admissible)}};
    }
  }
  return {true, std::nullopt};
}

WeakOrderSearch weak_progressive_order(const BlockMap& d, std::size_t max_order) {
  if (max_order == 0) throw Error(ErrorCode::InvalidArgument, "weak order bound must be >= 1");
  for (std::size_t m = 1; m <= max_order; ++m) {
    if (is_weakly_progressive(d, m).holds) return {m, max_order};
  }
  return {std::nullopt, max_order};
}

bool star_commutes_with_shift(const BlockMap& d) { return is_regressive(d).holds; }

bool star_commute_oracle(const BlockMap& d, std::size_t depth) {
  const std::size_t k = d.alphabet_size();
  if (depth < d.window()) {
    throw Error(ErrorCode::DepthTooSmall, "oracle depth " + std::to_string(depth) +
                                              " is below window " + std::to_string(d.window()));
  }
  Word z(depth, 0);
  Word x(depth + 1, 0);
  do {
    const Word tail = slide(d, z);
    Word y(tail.size() + 1);
    std::copy(tail.begin(), tail.end(), y.begin() + 1);
    std::copy(z.begin(), z.end(), x.begin() + 1);
    for (Symbol head = 0; head < k; ++head) {
      y[0] = head;
      std::size_t lifts = 0;
      for (Symbol a = 0; a < k; ++a) {
        x[0] = a;
        if (slide(d, x) == y) ++lifts;
      }
      if (lifts != 1) return false;
    }
  } while (next_word(z, k));
  return true;
}

std::vector<Word> preimage_prefixes(const BlockMap& d, std::span<const Symbol> nu,
                                    std::optional<std::size_t> limit) {
  const std::size_t k = d.alphabet_size();
  const std::size_t n = d.window();
  if (nu.empty()) throw Error(ErrorCode::InvalidArgument, "output word must be non-empty");
  require_symbols(nu, k);

  const std::size_t length = nu.size() + n - 1;
  std::vector<Word> found;
  Word u;
  u.reserve(length);
  auto extend = [&](auto&& self) -> bool {
    if (u.size() == length) {
      found.push_back(u);
      return !(limit && found.size() >= *limit);
    }
    for (Symbol a = 0; a < k; ++a) {
      u.push_back(a);
      bool keep_going = true;
      if (u.size() < n ||
          d.at(encode_word(std::span(u).last(n), k)) == nu[u.size() - n]) {
        keep_going = self(self);
      }
      u.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  if (!(limit && *limit == 0)) extend(extend);
  return found;
}

CoveringDegree covering_degree(const BlockMap& d, std::optional<std::size_t> weak_order) {
  if (!weak_order) {
    throw Error(ErrorCode::PreconditionUnverified,
                "covering degree needs a weakly progressive order as witness");
  }
  if (!is_weakly_progressive(d, *weak_order).holds) {
    throw Error(ErrorCode::PreconditionUnverified,
                "block map is not weakly progressive of order " + std::to_string(*weak_order));
  }
  const std::size_t k = d.alphabet_size();
  const std::size_t prefixes = d.domain_size() / k;
  CoveringDegree result;
  result.counts.assign(k, 0);
  std::vector<char> image(k);
  for (std::size_t prefix = 0; prefix < prefixes; ++prefix) {
    std::fill(image.begin(), image.end(), 0);
    for (std::size_t a = 0; a < k; ++a) image[d.at(prefix * k + a)] = 1;
    for (std::size_t s = 0; s < k; ++s) result.counts[s] += image[s];
  }
  bool constant = true;
  for (std::size_t c : result.counts) constant = constant && c == result.counts.front();
  if (constant) result.degree = result.counts.front();
  return result;
}

PropertyReport analyze(const BlockMap& d, std::size_t max_weak_order,
                       std::optional<std::size_t> oracle_depth) {
  BlockMap minimal = reduce_to_minimal(d);
  const std::size_t depth = oracle_depth.value_or(minimal.window() + 3);

  PropertyReport report{
      .minimal = minimal,
      .progressive = is_progressive(minimal),
      .regressive = is_regressive(minimal),
      .weak = weak_progressive_order(minimal, max_weak_order),
      .star_commutes = star_commutes_with_shift(minimal),
      .oracle_depth = depth,
      .injectivity = cylinder_injectivity(minimal),
      .local_homeo = UnknownLocalHomeo{max_weak_order},
      .covering = std::nullopt,
  };

  if (star_commute_oracle(minimal, depth) != report.star_commutes) {
    throw std::logic_error("star-commuting oracle disagrees with regressivity");
  }
  if ((report.weak.order == std::size_t{1}) != report.progressive.holds) {
    throw std::logic_error("weak order 1 disagrees with progressivity");
  }

  if (report.weak.order) {
    if (!report.injectivity.injective) {
      throw std::logic_error("weakly progressive map is not injective on cylinders");
    }
    report.local_homeo = ProvenLocalHomeo{*report.weak.order};
    report.covering = covering_degree(minimal, report.weak.order);
    if (report.star_commutes && !report.covering->degree) {
      throw std::logic_error("*-commuting local homeomorphism without a covering degree");
    }
  } else if (!report.injectivity.injective) {
    report.local_homeo = RefutedLocalHomeo{*report.injectivity.witness};
  }
  return report;
}

}  // namespace sbc
