// Copyright 2026 The telsyl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "telsyl/corpus_stats.hpp"
#include "telsyl/selector.hpp"
#include "telsyl/syllabifier.hpp"
#include "telsyl/transliterator.hpp"
#include "telsyl/utf8.hpp"
#include "telsyl/wx_core.hpp"

namespace {

using namespace telsyl;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

enum class Command { Transliterate, Syllabify, Stats, Buckets, Index, Select };

struct RunConfig {
  Command command = Command::Transliterate;
  std::vector<std::string> inputs;  // empty or "-" reads stdin
  std::string output = "-";         // "-" writes stdout
  std::string mode_name = "types";
  corpus::CountingMode mode = corpus::CountingMode::Types;
  std::vector<std::uint64_t> cutoffs = {1, 10, 100, 1000, 10000};
  std::vector<double> thresholds = {0.5, 0.8, 1.0};
  std::vector<std::uint64_t> edges = {std::begin(corpus::kDefaultBucketEdges),
                                      std::end(corpus::kDefaultBucketEdges)};
  std::optional<double> coverage;
  std::optional<std::uint64_t> max_words;
  std::string table_file;       // inventory override
  std::string frequencies_out;  // stats: frequency table CSV
  std::string plot_prefix;      // stats: plot CSV path prefix
  std::string table_csv;        // index: precomputed frequency CSV
  std::string target_file;      // select: target syllables, one per line
  std::string audit_out;        // select: audit JSON
  bool to_telugu = false;
  bool weighted = false;
  bool telugu_column = false;
  bool distinct_index = false;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Streams one input (file or stdin) through fn line by line.
template <typename Fn>
void for_each_line(const std::string& path, Fn&& fn) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (path != "-") {
    file.open(path, std::ios::binary);
    if (!file) throw DataError("IO: cannot open input \"" + path + "\"");
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) fn(line);
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("IO: cannot open input \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Line-structured commands write as they go with bounded memory.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw DataError("IO: cannot open output \"" + path + "\"");
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  void finish() {
    out_->flush();
    if (file_.is_open() && !file_) throw DataError("IO: short write");
  }

 private:
  std::ofstream file_;
  std::ostream* out_ = &std::cout;
};

void write_output(const std::string& path, std::string_view content) {
  if (path == "-") {
    std::cout.write(content.data(), static_cast<std::streamsize>(content.size()));
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("IO: cannot open output \"" + path + "\"");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw DataError("IO: short write to \"" + path + "\"");
}

const wx::Inventory& inventory_for(const RunConfig& config) {
  static wx::Inventory loaded;
  if (config.table_file.empty()) return wx::Inventory::builtin();
  loaded = wx::Inventory::load(config.table_file);
  return loaded;
}

std::vector<std::string> input_list(const RunConfig& config) {
  return config.inputs.empty() ? std::vector<std::string>{"-"} : config.inputs;
}

corpus::Corpus load_corpus(const RunConfig& config) {
  corpus::Corpus merged;
  for (const std::string& path : input_list(config))
    merged.merge(corpus::extract_words(read_file(path)));
  return merged;
}

// Applies fn to every whitespace-delimited token, preserving the separators.
template <typename Fn>
std::string map_tokens(std::string_view text, Fn&& fn) {
  std::string out;
  std::size_t i = 0;
  std::size_t word_start = std::string_view::npos;
  const auto flush = [&](std::size_t end) {
    if (word_start != std::string_view::npos) {
      out += fn(text.substr(word_start, end - word_start));
      word_start = std::string_view::npos;
    }
  };
  while (i < text.size()) {
    const std::size_t at = i;
    const char32_t cp = utf8::decode(text, i);
    if (utf8::is_space(cp)) {
      flush(at);
      utf8::append(out, cp);
    } else if (word_start == std::string_view::npos) {
      word_start = at;
    }
  }
  flush(text.size());
  return out;
}

template <typename Fn>
void for_each_token(std::string_view text, Fn&& fn) {
  map_tokens(text, [&](std::string_view token) {
    fn(token);
    return std::string();
  });
}

void print_skip(std::uint64_t line_no, std::string_view word, const std::exception& e) {
  std::cerr << "skip: line " << line_no << ": word \"" << word << "\": " << e.what() << "\n";
}

int run_transliterate(const RunConfig& config) {
  const wx::Inventory& inventory = inventory_for(config);
  const auto& mapping = translit::MappingTable::builtin();
  Output out(config.output);
  std::uint64_t words = 0, errors = 0, line_no = 0;

  for (const std::string& path : input_list(config)) {
    for_each_line(path, [&](const std::string& line) {
      ++line_no;
      out.stream() << map_tokens(line, [&](std::string_view token) -> std::string {
        ++words;
        try {
          if (config.to_telugu)
            return translit::wx_word_to_telugu(token, mapping, inventory);
          return translit::telugu_to_wx(token, mapping);
        } catch (const std::exception& e) {
          ++errors;
          print_skip(line_no, token, e);
          return std::string(token);  // pass the word through unchanged
        }
      }) << '\n';
    });
  }
  out.finish();
  std::cerr << "transliterate: " << words << " words, " << errors << " errors\n";
  return errors == 0 ? kExitOk : kExitData;
}

int run_syllabify(const RunConfig& config) {
  const wx::Inventory& inventory = inventory_for(config);
  const auto& mapping = translit::MappingTable::builtin();
  Output out(config.output);
  std::uint64_t words = 0, skipped = 0, line_no = 0;

  for (const std::string& path : input_list(config)) {
    for_each_line(path, [&](const std::string& line) {
      ++line_no;
      for_each_token(line, [&](std::string_view token) {
        ++words;
        try {
          const wx::WxWord word = translit::to_wx_word(token, mapping, inventory);
          out.stream() << syll::hyphenate(word) << '\n';
        } catch (const std::exception& e) {
          ++skipped;
          print_skip(line_no, token, e);
        }
      });
    });
  }
  out.finish();
  std::cerr << "syllabify: " << words << " words, " << skipped << " skipped\n";
  return kExitOk;
}

int run_stats(const RunConfig& config) {
  const wx::Inventory& inventory = inventory_for(config);
  const auto& mapping = translit::MappingTable::builtin();
  const corpus::Corpus corp = load_corpus(config);

  corpus::ScanReport skips;
  const auto distribution =
      corpus::phoneme_distribution(corp, config.mode, &skips, mapping, inventory);
  const auto table = corpus::syllable_frequency(corp, config.mode, &skips, mapping, inventory);
  const auto buckets = corpus::frequency_buckets(table, config.edges);

  write_output(config.output,
               corpus::report_json(corp, config.mode, distribution, table, buckets, skips));
  if (!config.frequencies_out.empty())
    write_output(config.frequencies_out, corpus::frequency_csv(table));
  if (!config.plot_prefix.empty()) {
    write_output(config.plot_prefix + ".phonemes.csv", corpus::phoneme_share_csv(distribution));
    write_output(config.plot_prefix + ".vowel_classes.csv",
                 corpus::vowel_class_share_csv(distribution));
    write_output(config.plot_prefix + ".consonant_classes.csv",
                 corpus::consonant_class_share_csv(distribution));
    write_output(config.plot_prefix + ".buckets.csv", corpus::buckets_csv(buckets));
  }
  std::cerr << "stats: " << corp.total_types() << " types, " << corp.total_tokens
            << " tokens, " << table.total_distinct() << " distinct syllables, "
            << skips.total() << " skipped\n";
  return kExitOk;
}

int run_buckets(const RunConfig& config) {
  corpus::SyllableFrequencyTable table;
  for (const std::string& path : input_list(config))
    table.merge(corpus::frequency_from_csv(read_file(path)));
  const auto buckets = corpus::frequency_buckets(table, config.edges);
  write_output(config.output, corpus::buckets_csv(buckets));
  std::cerr << "buckets: " << buckets.size() << " ranges, " << table.total_distinct()
            << " syllables\n";
  return kExitOk;
}

int run_index(const RunConfig& config) {
  const wx::Inventory& inventory = inventory_for(config);
  const auto& mapping = translit::MappingTable::builtin();
  const corpus::Corpus corp = load_corpus(config);

  corpus::ScanReport skips;
  corpus::SyllableFrequencyTable table;
  if (config.table_csv.empty()) {
    table = corpus::syllable_frequency(corp, config.mode, &skips, mapping, inventory);
  } else {
    table = corpus::frequency_from_csv(read_file(config.table_csv));
  }

  const auto matrix = select::count_words_by_index(
      corp, table, config.cutoffs, config.thresholds,
      config.distinct_index ? select::IndexMode::Distinct : select::IndexMode::Occurrences,
      &skips, mapping, inventory);
  write_output(config.output, select::index_csv(matrix));
  std::cerr << "index: " << corp.total_types() << " types, " << matrix.cutoffs.size()
            << " cutoffs, " << matrix.thresholds.size() << " thresholds\n";
  return kExitOk;
}

int run_select(const RunConfig& config) {
  const wx::Inventory& inventory = inventory_for(config);
  const auto& mapping = translit::MappingTable::builtin();
  const corpus::Corpus corp = load_corpus(config);

  std::set<std::string> target;
  if (!config.target_file.empty()) {
    for_each_token(read_file(config.target_file),
                   [&](std::string_view token) { target.emplace(token); });
    if (target.empty()) throw DataError("EmptyTarget: target file lists no syllables");
  }

  select::SelectionOptions options;
  options.target_coverage = config.coverage;
  if (config.max_words) options.max_words = static_cast<std::size_t>(*config.max_words);
  options.frequency_weighted = config.weighted;

  corpus::ScanReport skips;
  corpus::SyllableFrequencyTable weights;
  if (config.weighted)
    weights = corpus::syllable_frequency(corp, config.mode, nullptr, mapping, inventory);

  const auto result = select::select_training_words(
      corp, target, options, config.weighted ? &weights : nullptr, &skips, mapping, inventory);

  write_output(config.output,
               select::selection_wordlist(result, config.telugu_column, mapping, inventory));
  if (!config.audit_out.empty())
    write_output(config.audit_out, select::selection_audit_json(result));

  const double pct = 100.0 * result.coverage;
  std::cerr << "select: " << result.steps.size() << " words cover " << result.covered
            << " of " << result.target_size << " target syllables (" << pct << "%)\n";

  if (config.coverage && result.coverage < *config.coverage &&
      result.stop_reason == select::StopReason::Exhausted) {
    std::cerr << "error: UnreachableCoverage: reached " << result.coverage
              << " of requested " << *config.coverage << "\n";
    return kExitData;
  }
  return kExitOk;
}

int run(const RunConfig& config) {
  switch (config.command) {
    case Command::Transliterate: return run_transliterate(config);
    case Command::Syllabify: return run_syllabify(config);
    case Command::Stats: return run_stats(config);
    case Command::Buckets: return run_buckets(config);
    case Command::Index: return run_index(config);
    case Command::Select: return run_select(config);
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;

  CLI::App app{"Telugu corpus analysis: WX transliteration, syllabification, "
               "syllable statistics, and training-word selection"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub, bool with_table = true) {
    sub->add_option("input", config.inputs, "input files ('-' or none reads stdin)");
    sub->add_option("-o,--output", config.output, "output path ('-' writes stdout)");
    if (with_table)
      sub->add_option("--table", config.table_file, "phoneme inventory table file override");
  };
  const auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", config.mode_name, "count word types or tokens")
        ->check(CLI::IsMember({"types", "tokens"}));
  };

  auto* translit_cmd =
      app.add_subcommand("transliterate", "convert Telugu text to WX notation");
  add_common(translit_cmd);
  translit_cmd->add_flag("--to-telugu", config.to_telugu,
                         "render WX input as Telugu script instead");

  auto* syllabify_cmd = app.add_subcommand(
      "syllabify", "split words into syllables, one word per output line");
  add_common(syllabify_cmd);

  auto* stats_cmd = app.add_subcommand(
      "stats", "phoneme and syllable distribution report over a corpus");
  add_common(stats_cmd);
  add_mode(stats_cmd);
  stats_cmd->add_option("--frequencies", config.frequencies_out,
                        "also write the syllable frequency table CSV here");
  stats_cmd->add_option("--plot-csv", config.plot_prefix,
                        "also write plot-ready label,value CSV files with this prefix");
  stats_cmd->add_option("--edges", config.edges, "frequency bucket edges (ascending)");

  auto* buckets_cmd = app.add_subcommand(
      "buckets", "bucket a syllable frequency CSV into count ranges");
  add_common(buckets_cmd, /*with_table=*/false);
  buckets_cmd->add_option("--edges", config.edges, "frequency bucket edges (ascending)");

  auto* index_cmd = app.add_subcommand(
      "index", "count words by syllable index across cutoff frequencies");
  add_common(index_cmd);
  add_mode(index_cmd);
  index_cmd->add_option("--cutoffs", config.cutoffs, "cutoff frequencies (ascending)");
  index_cmd->add_option("--thresholds", config.thresholds,
                        "syllable index thresholds in (0,1]");
  index_cmd->add_option("--table-csv", config.table_csv,
                        "use this frequency table CSV instead of recomputing");
  index_cmd->add_flag("--distinct", config.distinct_index,
                      "index over distinct syllables instead of occurrences");

  auto* select_cmd = app.add_subcommand(
      "select", "select a minimal word list covering the syllable inventory");
  add_common(select_cmd);
  add_mode(select_cmd);
  select_cmd->add_option("--coverage", config.coverage, "stop at this coverage fraction")
      ->check(CLI::Range(0.0, 1.0));
  select_cmd->add_option("--max-words", config.max_words, "stop after this many words");
  select_cmd->add_option("--target-file", config.target_file,
                         "target syllables, one per line (default: all corpus syllables)");
  select_cmd->add_flag("--weighted", config.weighted,
                       "prefer covering high-frequency syllables first");
  select_cmd->add_flag("--telugu", config.telugu_column,
                       "append a tab-separated Telugu rendering column");
  select_cmd->add_option("--audit", config.audit_out, "write a per-step audit JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  config.mode = config.mode_name == "tokens" ? corpus::CountingMode::Tokens
                                              : corpus::CountingMode::Types;
  if (translit_cmd->parsed()) config.command = Command::Transliterate;
  else if (syllabify_cmd->parsed()) config.command = Command::Syllabify;
  else if (stats_cmd->parsed()) config.command = Command::Stats;
  else if (buckets_cmd->parsed()) config.command = Command::Buckets;
  else if (index_cmd->parsed()) config.command = Command::Index;
  else if (select_cmd->parsed()) config.command = Command::Select;

  try {
    return run(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: InvalidArgument: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    // library errors carry their kind prefix in what()
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
