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

// End-to-end acceptance suite. Each criterion prints one [PASS]/[FAIL] line;
// the process exits nonzero when any criterion fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "telsyl/corpus_stats.hpp"
#include "telsyl/selector.hpp"
#include "telsyl/syllabifier.hpp"
#include "telsyl/transliterator.hpp"
#include "telsyl/wx_core.hpp"

#include "syllabify_oracle.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace telsyl;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// --- golden syllabification -------------------------------------------------

Outcome golden_syllabification() {
  const std::vector<std::pair<std::string, std::string>> golden = {
      {"kaMpeVnIkaMteV", "kaM-peV-nI-kaM-teV"},
      {"KarcukaMteV", "Kar-cu-kaM-teV"},
      {"lABAlaku", "lA-BA-la-ku"},
  };
  double worst_ms = 0.0;
  for (const auto& [input, expected] : golden) {
    const auto start = Clock::now();
    const std::string actual = syll::hyphenate(wx::tokenize_wx(input));
    const double elapsed = ms_since(start);
    worst_ms = std::max(worst_ms, elapsed);
    if (actual != expected)
      return {false, "\"" + input + "\" -> \"" + actual + "\", want \"" + expected + "\""};
    if (elapsed >= 1.0)
      return {false, "\"" + input + "\" took " + std::to_string(elapsed) + " ms (limit 1)"};
  }
  return {true, "3 words exact, worst " + std::to_string(worst_ms) + " ms"};
}

// --- transliteration round trip ----------------------------------------------

Outcome transliteration_round_trip() {
  std::mt19937 rng(1009);
  const auto start = Clock::now();
  for (int n = 0; n < 1000; ++n) {
    const std::string word = testutil::random_word(rng, 8);
    const std::string telugu = translit::wx_word_to_telugu(word);
    const std::string back = translit::telugu_to_wx(telugu);
    if (back != word)
      return {false, "\"" + word + "\" -> \"" + telugu + "\" -> \"" + back + "\""};
  }
  const double elapsed = ms_since(start);
  if (elapsed >= 1000.0)
    return {false, "1000 words took " + std::to_string(elapsed) + " ms (limit 1000)"};
  return {true, "1000/1000 words in " + std::to_string(elapsed) + " ms"};
}

// --- syllabifier oracle equivalence ------------------------------------------

Outcome syllabifier_oracle_equivalence() {
  const std::vector<std::string> alphabet = {"k", "r", "y", "a", "A", "M"};
  const auto start = Clock::now();
  std::uint64_t candidates = 0;

  std::vector<std::string> syms;
  std::function<Outcome(std::size_t)> walk = [&](std::size_t remaining) -> Outcome {
    if (!syms.empty()) {
      const auto expected = oracle::oracle_syllabify(syms);
      bool has_vowel_sym = false;
      for (const auto& s : syms)
        if (s == "a" || s == "A") has_vowel_sym = true;
      if (has_vowel_sym) {
        ++candidates;
        const wx::WxWord word = wx::tokenize_wx(testutil::join(syms));
        const std::string actual = syll::hyphenate(word);
        if (!expected || actual != *expected) {
          return {false, "mismatch on \"" + testutil::join(syms) + "\": got \"" + actual +
                             "\", oracle \"" + (expected ? *expected : "<no vowel>") + "\""};
        }
      }
    }
    if (remaining == 0) return {true, ""};
    for (const auto& s : alphabet) {
      syms.push_back(s);
      Outcome sub = walk(remaining - 1);
      syms.pop_back();
      if (!sub.pass) return sub;
    }
    return {true, ""};
  };

  Outcome result = walk(6);
  if (!result.pass) return result;
  const double elapsed = ms_since(start);
  if (elapsed >= 10000.0)
    return {false, "sweep took " + std::to_string(elapsed) + " ms (limit 10000)"};
  return {true, std::to_string(candidates) + " vowel-containing words, zero mismatches, " +
                    std::to_string(elapsed) + " ms"};
}

// --- losslessness over a synthetic corpus ------------------------------------

Outcome syllabification_losslessness() {
  std::mt19937 rng(4242);
  std::string text;
  std::uint64_t generated = 0;
  for (int n = 0; n < 10000; ++n) {
    // roughly 3% consonant-only words
    if (rng() % 32 == 0) {
      const auto& cons = testutil::consonants();
      std::string word;
      const std::size_t len = 1 + rng() % 3;
      for (std::size_t i = 0; i < len; ++i) word += cons[rng() % cons.size()];
      text += word;
    } else {
      text += testutil::random_word(rng, 8, /*force_vowel=*/true);
    }
    ++generated;
    text += (rng() % 7 == 0) ? "\n" : " ";
  }

  const corpus::Corpus corp = corpus::extract_words(text);
  std::uint64_t expected_no_vowel = 0;
  std::uint64_t vowel_types = 0;
  for (const auto& [word, tokens] : corp.word_types) {
    const wx::WxWord wx_word = wx::tokenize_wx(word);
    if (!syll::has_vowel(wx_word)) {
      ++expected_no_vowel;
      continue;
    }
    ++vowel_types;
    std::string joined;
    for (const auto& s : syll::syllabify(wx_word)) joined += s.text;
    if (joined != word)
      return {false, "lossy split of \"" + word + "\": \"" + joined + "\""};
  }

  corpus::ScanReport skips;
  const auto table = corpus::syllable_frequency(corp, corpus::CountingMode::Types, &skips);
  if (skips.no_vowel != expected_no_vowel) {
    return {false, "skip report lists " + std::to_string(skips.no_vowel) +
                       " no-vowel types, corpus has " + std::to_string(expected_no_vowel)};
  }
  if (skips.unparseable != 0) return {false, "unexpected unparseable words"};
  return {true, std::to_string(generated) + " tokens, " + std::to_string(vowel_types) +
                    " vowel-bearing types lossless, " + std::to_string(skips.no_vowel) +
                    " no-vowel types all reported"};
}

// --- statistics conservation --------------------------------------------------

std::string random_corpus_text(std::mt19937& rng, std::size_t words) {
  std::string text;
  for (std::size_t i = 0; i < words; ++i) {
    text += testutil::random_word(rng, 8, /*force_vowel=*/true);
    switch (rng() % 5) {
      case 0: text += ", "; break;
      case 1: text += ".\n"; break;
      default: text += ' '; break;
    }
  }
  return text;
}

Outcome statistics_conservation() {
  std::mt19937 rng(515);
  for (int round = 0; round < 50; ++round) {
    const std::string part1 = random_corpus_text(rng, 60 + rng() % 120);
    const std::string part2 = random_corpus_text(rng, 40 + rng() % 80);

    const corpus::Corpus single = corpus::extract_words(part1 + " " + part2);
    const auto report = corpus::phoneme_distribution(single);
    double sum = 0.0;
    for (const auto& [cat, share] : report.phoneme_shares) sum += share;
    if (std::abs(sum - 100.0) > 0.01)
      return {false, "phoneme shares sum to " + std::to_string(sum)};

    const auto table = corpus::syllable_frequency(single);
    const std::vector<std::vector<std::uint64_t>> edge_sets = {
        {100, 1000, 10000, 100000}, {2, 3, 5}, {1}};
    for (const auto& edges : edge_sets) {
      std::uint64_t total = 0;
      for (const auto& b : corpus::frequency_buckets(table, edges)) total += b.count;
      if (total != table.total_distinct())
        return {false, "bucket total " + std::to_string(total) + " != distinct " +
                           std::to_string(table.total_distinct())};
    }

    // shard merge must reproduce the single pass byte for byte
    corpus::Corpus merged = corpus::extract_words(part1);
    merged.merge(corpus::extract_words(part2));
    if (corpus::frequency_csv(corpus::syllable_frequency(merged)) !=
        corpus::frequency_csv(corpus::syllable_frequency(single)))
      return {false, "type-mode shard merge differs from single pass"};

    corpus::SyllableFrequencyTable sharded =
        corpus::syllable_frequency(corpus::extract_words(part1), corpus::CountingMode::Tokens);
    sharded.merge(
        corpus::syllable_frequency(corpus::extract_words(part2), corpus::CountingMode::Tokens));
    if (corpus::frequency_csv(sharded) !=
        corpus::frequency_csv(corpus::syllable_frequency(single, corpus::CountingMode::Tokens)))
      return {false, "token-mode shard merge differs from single pass"};
  }
  return {true, "50 corpora: shares sum to 100, buckets conserve, shard merges identical"};
}

// --- syllable-index monotonicity ----------------------------------------------

Outcome index_monotonicity() {
  std::mt19937 rng(616);
  std::uint64_t violations = 0;
  for (int round = 0; round < 100; ++round) {
    const corpus::Corpus corp =
        corpus::extract_words(random_corpus_text(rng, 30 + rng() % 60));
    const auto table = corpus::syllable_frequency(corp);
    const auto matrix = select::count_words_by_index(corp, table, {1, 2, 3, 5, 8, 13},
                                                     {0.5, 0.8, 1.0});
    for (std::size_t ci = 0; ci < matrix.cutoffs.size(); ++ci) {
      for (std::size_t ti = 0; ti < matrix.thresholds.size(); ++ti) {
        if (ci > 0 && matrix.counts[ci][ti] > matrix.counts[ci - 1][ti]) ++violations;
        if (ti > 0 && matrix.counts[ci][ti] > matrix.counts[ci][ti - 1]) ++violations;
      }
    }
  }
  if (violations > 0) return {false, std::to_string(violations) + " violations"};
  return {true, "100 corpora, zero violations in cutoff and threshold"};
}

// --- selection quality ----------------------------------------------------------

Outcome selection_quality() {
  std::mt19937 rng(717);
  const auto start = Clock::now();
  for (int round = 0; round < 100; ++round) {
    const std::size_t n_syllables = 4 + rng() % 9;  // up to 12
    const std::size_t n_words = 3 + rng() % 13;     // up to 15

    std::vector<std::vector<std::size_t>> sets(n_words);
    std::set<std::size_t> universe;
    std::size_t max_set = 1;
    for (auto& set_ids : sets) {
      const std::size_t k = 1 + rng() % 4;
      std::set<std::size_t> ids;
      for (std::size_t j = 0; j < k; ++j) ids.insert(rng() % n_syllables);
      set_ids.assign(ids.begin(), ids.end());
      universe.insert(ids.begin(), ids.end());
      max_set = std::max(max_set, ids.size());
    }

    // instance words: syllable id i is consonants()[i] + "a"
    std::string text;
    for (const auto& ids : sets) {
      for (std::size_t id : ids) text += testutil::consonants()[id] + "a";
      text += ' ';
    }
    const corpus::Corpus corp = corpus::extract_words(text);
    const auto result = select::select_training_words(corp);

    if (result.coverage != 1.0)
      return {false, "greedy stopped at coverage " + std::to_string(result.coverage)};

    // exhaustive minimum cover
    std::size_t optimal = 0;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n_words); ++mask) {
      std::set<std::size_t> covered;
      std::size_t size = 0;
      for (std::size_t i = 0; i < n_words; ++i) {
        if (mask & (std::size_t(1) << i)) {
          ++size;
          covered.insert(sets[i].begin(), sets[i].end());
        }
      }
      if (covered == universe && (optimal == 0 || size < optimal)) optimal = size;
    }

    double harmonic = 0.0;
    for (std::size_t i = 1; i <= max_set; ++i) harmonic += 1.0 / static_cast<double>(i);
    const std::size_t bound =
        static_cast<std::size_t>(std::ceil(harmonic)) * optimal;
    // deduplication can only shrink the greedy count below the word count
    if (result.steps.size() > bound) {
      return {false, "greedy used " + std::to_string(result.steps.size()) + " words, bound " +
                         std::to_string(bound) + " (optimal " + std::to_string(optimal) + ")"};
    }
  }
  const double elapsed = ms_since(start);
  if (elapsed >= 30000.0)
    return {false, "took " + std::to_string(elapsed) + " ms (limit 30000)"};
  return {true, "100 instances within ceil(H_k) x optimal, full coverage, " +
                    std::to_string(elapsed) + " ms"};
}

// --- CLI determinism -------------------------------------------------------------

struct CliRunner {
  std::string cli;
  fs::path dir;
  int serial = 0;

  // runs the command with stdout captured; returns the captured path
  bool run(const std::string& args, std::string* failure) {
    const fs::path out = dir / ("stdout" + std::to_string(serial));
    const fs::path err = dir / ("stderr" + std::to_string(serial));
    ++serial;
    const std::string cmd =
        cli + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code != 0) {
      *failure = "command failed (" + std::to_string(code) + "): " + args;
      return false;
    }
    return true;
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome cli_determinism(const std::string& cli) {
  if (cli.empty()) return {false, "no --cli path given"};

  const fs::path dir =
      fs::temp_directory_path() / ("telsyl_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  CliRunner runner{cli, dir};

  // corpus mixing WX words, Telugu script, punctuation, and junk
  std::mt19937 rng(818);
  std::string text;
  for (int i = 0; i < 400; ++i) {
    const std::string word = testutil::random_word(rng, 8, /*force_vowel=*/true);
    if (i % 3 == 0) {
      text += translit::wx_word_to_telugu(word);
    } else {
      text += word;
    }
    text += (i % 11 == 0) ? ",\n" : " ";
  }
  text += "kr zzz 42 kaMpeVnIkaMteV\n";
  const fs::path corpus_file = dir / "corpus.txt";
  std::ofstream(corpus_file, std::ios::binary) << text;

  const fs::path target_file = dir / "target.txt";
  std::ofstream(target_file, std::ios::binary) << "ka\nla\nnu\n";

  const std::string c = corpus_file.string();
  const auto path_of = [&dir](const std::string& name) { return (dir / name).string(); };

  const std::vector<std::pair<std::string, std::vector<std::string>>> commands = {
      {"transliterate " + c + " -o " + path_of("wx.txt"), {"wx.txt"}},
      {"syllabify " + c + " -o " + path_of("syl.txt"), {"syl.txt"}},
      {"stats " + c + " -o " + path_of("report.json") + " --frequencies " +
           path_of("freq.csv") + " --plot-csv " + path_of("plots"),
       {"report.json", "freq.csv", "plots.phonemes.csv", "plots.vowel_classes.csv",
        "plots.consonant_classes.csv", "plots.buckets.csv"}},
      {"buckets " + path_of("freq.csv") + " --edges 2 5 20 -o " + path_of("buckets.csv"),
       {"buckets.csv"}},
      {"index " + c + " --cutoffs 1 2 4 8 --thresholds 0.5 0.8 1.0 -o " +
           path_of("index.csv"),
       {"index.csv"}},
      {"select " + c + " --audit " + path_of("audit.json") + " -o " + path_of("words.txt"),
       {"words.txt", "audit.json"}},
      {"select " + c + " --weighted --max-words 7 --telugu -o " + path_of("weighted.txt"),
       {"weighted.txt"}},
  };

  for (const auto& [args, outputs] : commands) {
    std::string failure;
    if (!runner.run(args, &failure)) return {false, failure};
    std::vector<std::string> first;
    for (const auto& name : outputs) first.push_back(slurp(dir / name));

    if (!runner.run(args, &failure)) return {false, failure + " (rerun)"};
    for (std::size_t i = 0; i < outputs.size(); ++i) {
      if (slurp(dir / outputs[i]) != first[i])
        return {false, "rerun of \"" + args + "\" changed " + outputs[i]};
    }
    // transliterate feeds the syllabify equivalence below; keep outputs
  }

  // pipelined transliterate -> syllabify equals direct syllabify
  std::string failure;
  if (!runner.run("syllabify " + path_of("wx.txt") + " -o " + path_of("syl2.txt"), &failure))
    return {false, failure};
  if (slurp(dir / "syl.txt") != slurp(dir / "syl2.txt"))
    return {false, "transliterate|syllabify differs from direct syllabify"};

  return {true, "7 commands rerun byte-identical, pipeline equivalence holds"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden_syllabification", golden_syllabification},
      {"transliteration_round_trip", transliteration_round_trip},
      {"syllabifier_oracle_equivalence", syllabifier_oracle_equivalence},
      {"syllabification_losslessness", syllabification_losslessness},
      {"statistics_conservation", statistics_conservation},
      {"index_monotonicity", index_monotonicity},
      {"selection_quality", selection_quality},
      {"cli_determinism", [&cli] { return cli_determinism(cli); }},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome outcome;
    try {
      outcome = fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << ": " << outcome.detail
              << "\n";
    if (!outcome.pass) ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
