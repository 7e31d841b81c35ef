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

#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "telsyl/transliterator.hpp"
#include "telsyl/wx_core.hpp"

namespace telsyl::corpus {

// Word-type statistics use each distinct form once; token statistics weight
// by occurrence count.
enum class CountingMode { Types, Tokens };

std::string_view to_string(CountingMode mode);

struct Corpus {
  std::map<std::string, std::uint64_t, std::less<>> word_types;  // type -> token count
  std::uint64_t total_tokens = 0;
  std::uint64_t utf8_replacements = 0;

  std::size_t total_types() const { return word_types.size(); }
  bool empty() const { return word_types.empty(); }

  // Key-wise addition; merging shards equals single-pass extraction.
  void merge(const Corpus& other);
};

// Splits on whitespace, splits tokens at internal hyphens, strips leading
// and trailing punctuation, symbols, and ASCII digits, and deduplicates the
// survivors to types. Malformed UTF-8 is replaced and the replacements
// counted.
Corpus extract_words(std::string_view text);
Corpus extract_words(std::istream& in);

// Words excluded from an analysis pass, with a few samples for diagnostics.
struct ScanReport {
  std::uint64_t no_vowel = 0;
  std::uint64_t unparseable = 0;
  std::vector<std::string> no_vowel_words;
  std::vector<std::string> unparseable_words;

  static constexpr std::size_t kMaxSamples = 32;
  void add_no_vowel(std::string_view word);
  void add_unparseable(std::string_view word);
  std::uint64_t total() const { return no_vowel + unparseable; }
};

class EmptyCorpusError : public std::runtime_error {
 public:
  EmptyCorpusError();
  explicit EmptyCorpusError(const std::string& what);
};

// Transliterates and tokenizes every word type and hands it to fn with its
// token count. Unparseable words (and, when require_vowel is set, words
// without a vowel) are tallied into skips and passed over.
void for_each_wx_type(const Corpus& corpus, bool require_vowel, ScanReport* skips,
                      const std::function<void(const wx::WxWord&, std::uint64_t)>& fn,
                      const translit::MappingTable& table = translit::MappingTable::builtin(),
                      const wx::Inventory& inventory = wx::Inventory::builtin());

struct DistributionReport {
  std::uint64_t total_phonemes = 0;
  std::map<wx::Category, std::uint64_t> category_counts;
  std::map<wx::VowelClass, std::uint64_t> vowel_class_counts;
  std::map<wx::ConsonantClass, std::uint64_t> consonant_class_counts;
  // Percentages: category shares of all phonemes, class shares within their
  // own category. Computed in full precision; emitters round to 2 decimals.
  std::map<wx::Category, double> phoneme_shares;
  std::map<wx::VowelClass, double> vowel_class_shares;
  std::map<wx::ConsonantClass, double> consonant_class_shares;
};

// Counts every phoneme occurrence across word types (weighted by token
// count in Tokens mode). Unparseable words are skipped and tallied.
DistributionReport phoneme_distribution(
    const Corpus& corpus, CountingMode mode = CountingMode::Types,
    ScanReport* skips = nullptr,
    const translit::MappingTable& table = translit::MappingTable::builtin(),
    const wx::Inventory& inventory = wx::Inventory::builtin());

struct SyllableFrequencyTable {
  std::map<std::string, std::uint64_t, std::less<>> counts;

  std::size_t total_distinct() const { return counts.size(); }
  std::uint64_t total_occurrences() const;
  std::uint64_t count(std::string_view syllable) const;
  void merge(const SyllableFrequencyTable& other);
};

// Syllabifies every word type and counts each syllable occurrence (a
// syllable appearing twice in one type counts twice; Tokens mode weights by
// token count). NoVowel words are skipped and tallied in the report.
SyllableFrequencyTable syllable_frequency(
    const Corpus& corpus, CountingMode mode = CountingMode::Types,
    ScanReport* skips = nullptr,
    const translit::MappingTable& table = translit::MappingTable::builtin(),
    const wx::Inventory& inventory = wx::Inventory::builtin());

struct Bucket {
  std::uint64_t lo = 1;
  std::uint64_t hi = 0;  // exclusive; 0 means unbounded
  std::uint64_t count = 0;

  std::string label() const;  // "[1,100)", "[100000,inf)"
};

inline constexpr std::uint64_t kDefaultBucketEdges[] = {100, 1000, 10000, 100000};

// Distinct-syllable counts per half-open frequency range [1,e1), [e1,e2),
// ..., [eN,inf). Edges must be strictly ascending and >= 1.
std::vector<Bucket> frequency_buckets(
    const SyllableFrequencyTable& table,
    const std::vector<std::uint64_t>& edges = {std::begin(kDefaultBucketEdges),
                                               std::end(kDefaultBucketEdges)});

// --- Emitters (deterministic byte output) ---

// Two columns (syllable, count), sorted by descending count then
// lexicographic syllable.
std::string frequency_csv(const SyllableFrequencyTable& table);
SyllableFrequencyTable frequency_from_csv(std::string_view csv);

std::string buckets_csv(const std::vector<Bucket>& buckets);

// Plot-ready (label, value) series for the distribution report.
std::string phoneme_share_csv(const DistributionReport& report);
std::string vowel_class_share_csv(const DistributionReport& report);
std::string consonant_class_share_csv(const DistributionReport& report);

// The full report as a single JSON document with deterministic key order.
std::string report_json(const Corpus& corpus, CountingMode mode,
                        const DistributionReport& distribution,
                        const SyllableFrequencyTable& table,
                        const std::vector<Bucket>& buckets,
                        const ScanReport& skips);

}  // namespace telsyl::corpus
