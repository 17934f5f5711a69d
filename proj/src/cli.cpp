#include "sbc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "sbc/error.hpp"
#include "sbc/rule_table.hpp"
#include "sbc/search.hpp"

namespace sbc::cli {

namespace {

// Failure tied to an input or output file; rendered as "error: FILE:LINE: ...".
struct FileError {
  std::string path;
  Error error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError{path, Error(ErrorCode::InvalidArgument, "cannot open file")};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) {
    throw FileError{path, Error(ErrorCode::InvalidArgument, "cannot write file")};
  }
}

template <class Parse>
auto load(const std::string& path, Parse parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw FileError{path, e};
  }
}

BlockMap load_block_map(const std::string& path) {
  return load(path, [](const std::string& text) { return parse_block_map(text); });
}

std::string yes_no(bool value) { return value ? "true" : "false"; }

std::string format_cycle(const Word& word, std::size_t k) {
  return "(" + format_word(word, k) + ")";
}

std::string format_weak_witness(const WeakWitness& w, std::size_t k) {
  std::string out = "mu=" + format_word(w.mu, k) + " nu=" + format_word(w.nu, k) + " admissible {";
  for (std::size_t i = 0; i < w.admissible.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(w.admissible[i]);
  }
  return out + "}";
}

std::string format_counts(const std::vector<std::size_t>& counts) {
  std::string out = "counts";
  for (std::size_t s = 0; s < counts.size(); ++s) {
    out += " " + std::to_string(s) + ":" + std::to_string(counts[s]);
  }
  return out;
}

std::string format_conflict(const Conflict& c, std::size_t k) {
  return "window " + std::to_string(c.window) + ": d(" + format_word(c.domain, k) +
         ") forced to " + std::to_string(c.first_output) + " by sample " +
         std::to_string(c.first.sample + 1) + " position " + std::to_string(c.first.position + 1) +
         " and to " + std::to_string(c.second_output) + " by sample " +
         std::to_string(c.second.sample + 1) + " position " +
         std::to_string(c.second.position + 1);
}

std::string bijectivity_line(std::string_view key, const BijectivityVerdict& v, std::size_t k) {
  std::string line = std::string(key) + ": " + yes_no(v.holds);
  if (v.witness) line += " (" + format_collision(*v.witness, k) + ")";
  return line;
}

std::string injectivity_line(const InjectivityVerdict& v, std::size_t k) {
  std::string line = "cylinder_injective: " + yes_no(v.injective);
  if (v.witness) line += " (" + format_divergence(*v.witness, k) + ")";
  return line;
}

struct Options {
  std::string file;
  std::string second_file;
  std::string word;
  std::string output;
  std::size_t max_weak_order = kDefaultMaxWeakOrder;
  std::optional<std::size_t> oracle_depth;
  std::optional<std::size_t> limit;
  std::size_t max_window = 4;

  bool progressive = false;
  bool regressive = false;
  std::optional<std::size_t> weak_order;
  bool star_commutes = false;
  bool injective = false;
  std::string samples;

  std::size_t alphabet = 0;
  std::size_t window = 0;
  std::string require_progressive = "any";
  std::string require_regressive = "any";
  std::optional<std::size_t> weak_order_max;
  std::optional<std::size_t> covering;
  bool count_only = false;
  bool modulo_relabeling = false;
  bool allow_large = false;
  std::size_t threads = 1;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  const BlockMap d = load_block_map(o.file);
  out << format_report(analyze(d, o.max_weak_order, o.oracle_depth));
  return kHolds;
}

int cmd_apply(const Options& o, std::ostream& out) {
  const BlockMap d = load_block_map(o.file);
  const Word w = parse_word(o.word, d.alphabet_size());
  out << format_word(slide(d, w), d.alphabet_size()) << "\n";
  return kHolds;
}

int cmd_preimages(const Options& o, std::ostream& out) {
  const BlockMap d = load_block_map(o.file);
  const std::size_t k = d.alphabet_size();
  const auto found = preimage_prefixes(d, parse_word(o.word, k), o.limit);
  for (const Word& u : found) out << format_word(u, k) << "\n";
  out << "count: " << found.size() << "\n";
  return kHolds;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const BlockMap reduced = reduce_to_minimal(load_block_map(o.file));
  if (o.output.empty()) {
    out << serialize_block_map(reduced);
  } else {
    write_file(o.output, serialize_block_map(reduced));
    out << "minimal_window: " << reduced.window() << "\n";
  }
  return kHolds;
}

int cmd_compose(const Options& o, std::ostream& out) {
  const BlockMap inner = load_block_map(o.file);
  const BlockMap outer = load_block_map(o.second_file);
  const BlockMap composite = compose(outer, inner);
  write_file(o.output, serialize_block_map(composite));
  out << "window: " << composite.window() << "\n";
  return kHolds;
}

int cmd_check(const Options& o, std::ostream& out) {
  const int selected = int{o.progressive} + int{o.regressive} + int{o.weak_order.has_value()} +
                       int{o.star_commutes} + int{o.injective} + int{!o.samples.empty()};
  if (selected != 1) {
    throw Error(ErrorCode::InvalidArgument,
                "check needs exactly one of --progressive, --regressive, --weak-order, "
                "--star-commutes, --injective, --samples");
  }
  if (o.oracle_depth && !o.star_commutes) {
    throw Error(ErrorCode::InvalidArgument, "--oracle-depth only applies to --star-commutes");
  }
  const BlockMap d = load_block_map(o.file);
  const std::size_t k = d.alphabet_size();

  if (o.progressive || o.regressive) {
    const auto verdict = o.progressive ? is_progressive(d) : is_regressive(d);
    out << bijectivity_line(o.progressive ? "progressive" : "regressive", verdict, k) << "\n";
    return verdict.holds ? kHolds : kFails;
  }
  if (o.weak_order) {
    const auto verdict = is_weakly_progressive(d, *o.weak_order);
    out << "weakly_progressive(" << *o.weak_order << "): " << yes_no(verdict.holds);
    if (verdict.witness) out << " (" << format_weak_witness(*verdict.witness, k) << ")";
    out << "\n";
    return verdict.holds ? kHolds : kFails;
  }
  if (o.star_commutes) {
    const bool holds = star_commutes_with_shift(d);
    out << "star_commutes: " << yes_no(holds) << "\n";
    if (o.oracle_depth) {
      out << "star_commutes_oracle(" << *o.oracle_depth
          << "): " << yes_no(star_commute_oracle(d, *o.oracle_depth)) << "\n";
    }
    return holds ? kHolds : kFails;
  }
  if (o.injective) {
    const auto verdict = cylinder_injectivity(d);
    out << injectivity_line(verdict, k) << "\n";
    return verdict.injective ? kHolds : kFails;
  }
  const SampleCorpus corpus =
      load(o.samples, [](const std::string& text) { return parse_samples(text); });
  const auto verdict = verify_against_corpus(d, corpus);
  out << "consistent: " << yes_no(verdict.consistent);
  if (verdict.witness) {
    const auto& w = *verdict.witness;
    out << " (sample " << w.sample + 1 << " position " << w.position + 1 << ": expected "
        << w.expected << ", got " << w.actual << ")";
  }
  out << "\n";
  return verdict.consistent ? kHolds : kFails;
}

int cmd_derive(const Options& o, std::ostream& out) {
  const SampleCorpus corpus =
      load(o.file, [](const std::string& text) { return parse_samples(text); });
  const std::size_t k = corpus.alphabet().size();
  const DeriveOutcome outcome = derive_block_map(corpus, o.max_window);

  if (const auto* derived = std::get_if<Derived>(&outcome)) {
    write_file(o.output, serialize_block_map(derived->map));
    out << "window: " << derived->map.window() << "\n";
    return kHolds;
  }
  if (const auto* inconsistent = std::get_if<Inconsistent>(&outcome)) {
    out << "inconsistent: no block map of window <= " << o.max_window << " fits the samples\n";
    for (const Conflict& c : inconsistent->conflicts) out << format_conflict(c, k) << "\n";
    return kFails;
  }
  if (const auto* under = std::get_if<Underdetermined>(&outcome)) {
    out << "underdetermined: window " << under->window << " leaves " << under->holes.size()
        << " rows unconstrained:";
    for (const Word& w : under->holes) out << " " << format_word(w, k);
    out << "\n";
    return kFails;
  }
  const auto& exceeded = std::get<WindowExceeded>(outcome);
  out << "window_exceeded: table size limit reached after window " << exceeded.last_tried
      << " (requested " << exceeded.max_window << ")\n";
  for (const Conflict& c : exceeded.conflicts) out << format_conflict(c, k) << "\n";
  return kFails;
}

Requirement requirement(const std::string& value) {
  if (value == "yes") return Requirement::Yes;
  if (value == "no") return Requirement::No;
  return Requirement::Any;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.weak_order && o.weak_order_max) {
    throw Error(ErrorCode::InvalidArgument, "--weak-order and --weak-order-max are exclusive");
  }
  SearchConstraints c;
  c.alphabet_size = o.alphabet;
  c.window = o.window;
  c.progressive = requirement(o.require_progressive);
  c.regressive = requirement(o.require_regressive);
  if (o.weak_order) c.weak_order = WeakOrderRequirement{*o.weak_order, false};
  if (o.weak_order_max) c.weak_order = WeakOrderRequirement{*o.weak_order_max, true};
  c.covering_degree = o.covering;
  c.limit = o.limit;
  c.count_only = o.count_only;
  c.modulo_relabeling = o.modulo_relabeling;
  c.allow_large = o.allow_large;
  c.threads = o.threads;

  bool first = true;
  const std::size_t count = enumerate(c, [&](const BlockMap& d) {
    if (!first) out << "---\n";
    first = false;
    out << serialize_block_map(d);
  });
  if (o.count_only) out << "count: " << count << "\n";
  return kHolds;
}

}  // namespace

std::string format_collision(const Collision& c, std::size_t k) {
  return "d(" + format_word(c.first, k) + ")=d(" + format_word(c.second, k) +
         ")=" + std::to_string(c.output);
}

std::string format_divergence(const DivergenceWitness& w, std::size_t k) {
  const std::string context = format_word(w.context, k);
  return "Z(" + context + ") holds " + context + format_word(w.left_stem, k) +
         format_cycle(w.left_cycle, k) + "... and " + context + format_word(w.right_stem, k) +
         format_cycle(w.right_cycle, k) + "... with equal images";
}

std::string format_report(const PropertyReport& r) {
  const std::size_t k = r.minimal.alphabet_size();
  std::ostringstream out;
  out << "minimal_window: " << r.minimal_window() << "\n";
  out << bijectivity_line("progressive", r.progressive, k) << "\n";
  out << bijectivity_line("regressive", r.regressive, k) << "\n";
  out << "weak_order: ";
  if (r.weak.order) {
    out << *r.weak.order;
  } else {
    out << "none";
  }
  out << " (searched m <= " << r.weak.bound << ")\n";
  out << "star_commutes: " << yes_no(r.star_commutes) << " (oracle depth " << r.oracle_depth
      << " agrees)\n";
  out << injectivity_line(r.injectivity, k) << "\n";
  out << "local_homeo: ";
  if (const auto* proven = std::get_if<ProvenLocalHomeo>(&r.local_homeo)) {
    out << "proven (weakly progressive of order " << proven->weak_order << ")";
  } else if (const auto* refuted = std::get_if<RefutedLocalHomeo>(&r.local_homeo)) {
    out << "refuted (" << format_divergence(refuted->witness, k) << ")";
  } else {
    out << "unknown (no weak order <= " << std::get<UnknownLocalHomeo>(r.local_homeo).weak_bound
        << "; injective on cylinders)";
  }
  out << "\n";
  out << "covering_degree: ";
  if (!r.covering) {
    out << "none (requires a weak order)";
  } else if (r.covering->degree) {
    out << *r.covering->degree << " (" << format_counts(r.covering->counts) << ")";
  } else {
    out << "none (" << format_counts(r.covering->counts) << ")";
  }
  out << "\n";
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analysis of block maps and sliding block codes on one-sided full shifts", "sbc"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> command;

  auto* analyze_cmd = app.add_subcommand("analyze", "Report every property of a block map");
  analyze_cmd->add_option("FILE", o.file, "Rule-table file")->required();
  analyze_cmd->add_option("--max-weak-order", o.max_weak_order, "Weak order search bound")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--oracle-depth", o.oracle_depth, "*-commuting oracle depth");
  analyze_cmd->callback([&] { command = cmd_analyze; });

  auto* apply_cmd = app.add_subcommand("apply", "Slide a block map over a word");
  apply_cmd->add_option("FILE", o.file)->required();
  apply_cmd->add_option("WORD", o.word)->required();
  apply_cmd->callback([&] { command = cmd_apply; });

  auto* preimages_cmd = app.add_subcommand("preimages", "List all preimage words of a word");
  preimages_cmd->add_option("FILE", o.file)->required();
  preimages_cmd->add_option("WORD", o.word)->required();
  preimages_cmd->add_option("--limit", o.limit, "Stop after this many preimages");
  preimages_cmd->callback([&] { command = cmd_preimages; });

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a block map to its minimal window");
  reduce_cmd->add_option("FILE", o.file)->required();
  reduce_cmd->add_option("-o", o.output, "Output rule-table file");
  reduce_cmd->callback([&] { command = cmd_reduce; });

  auto* compose_cmd = app.add_subcommand("compose", "Compose two block maps (INNER first)");
  compose_cmd->add_option("INNER", o.file)->required();
  compose_cmd->add_option("OUTER", o.second_file)->required();
  compose_cmd->add_option("-o", o.output, "Output rule-table file")->required();
  compose_cmd->callback([&] { command = cmd_compose; });

  auto* check_cmd = app.add_subcommand("check", "Check one property; exit 0 if it holds");
  check_cmd->add_option("FILE", o.file)->required();
  check_cmd->add_flag("--progressive", o.progressive);
  check_cmd->add_flag("--regressive", o.regressive);
  check_cmd->add_option("--weak-order", o.weak_order, "Order m")->check(CLI::PositiveNumber);
  check_cmd->add_flag("--star-commutes", o.star_commutes);
  check_cmd->add_option("--oracle-depth", o.oracle_depth,
                        "Also run the brute-force *-commuting oracle at this depth");
  check_cmd->add_flag("--injective", o.injective);
  check_cmd->add_option("--samples", o.samples, "Verify against a samples file");
  check_cmd->callback([&] { command = cmd_check; });

  auto* derive_cmd = app.add_subcommand("derive", "Infer a block map from input/output samples");
  derive_cmd->add_option("SAMPLES", o.file)->required();
  derive_cmd->add_option("-o", o.output, "Output rule-table file")->required();
  derive_cmd->add_option("--max-window", o.max_window)->check(CLI::PositiveNumber);
  derive_cmd->callback([&] { command = cmd_derive; });

  auto* search_cmd = app.add_subcommand("search", "Enumerate block maps with given properties");
  search_cmd->add_option("--alphabet", o.alphabet)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--window", o.window)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--progressive", o.require_progressive)
      ->check(CLI::IsMember({"yes", "no"}));
  search_cmd->add_option("--regressive", o.require_regressive)
      ->check(CLI::IsMember({"yes", "no"}));
  search_cmd->add_option("--weak-order", o.weak_order, "Least weak order equals M")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--weak-order-max", o.weak_order_max, "Some weak order <= M")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--covering", o.covering, "Required covering degree");
  search_cmd->add_option("--limit", o.limit, "Maximum number of maps printed");
  search_cmd->add_flag("--count-only", o.count_only);
  search_cmd->add_flag("--modulo-relabeling", o.modulo_relabeling);
  search_cmd->add_flag("--allow-large", o.allow_large, "Disable the search-space guard");
  search_cmd->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  search_cmd->callback([&] { command = cmd_search; });

  std::vector<std::string> argv_storage{"sbc"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    std::string message = e.what();
    for (char& c : message) {
      if (c == '\n') c = ' ';
    }
    err << "error: " << message << "\n";
    return kUsageError;
  }

  try {
    return command(o, out);
  } catch (const FileError& e) {
    err << "error: " << e.path;
    if (e.error.line() != 0) err << ":" << e.error.line();
    err << ": " << to_string(e.error.code()) << ": " << e.error.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace sbc::cli
