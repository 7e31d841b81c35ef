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
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "telsyl/corpus_stats.hpp"
#include "telsyl/syllabifier.hpp"
#include "telsyl/wx_core.hpp"

namespace telsyl::select {

// Occurrences: fraction of the word's syllable occurrences (with
// multiplicity) whose table frequency meets the cutoff.
// Distinct: the same over the word's distinct syllables.
enum class IndexMode { Occurrences, Distinct };

// Qualifying fraction in [0,1]; syllables absent from the table count as
// frequency 0. Propagates NoVowelError from the syllabifier.
double syllable_index(const wx::WxWord& word,
                      const corpus::SyllableFrequencyTable& table,
                      std::uint64_t cutoff, IndexMode mode = IndexMode::Occurrences);

struct IndexCountMatrix {
  std::vector<std::uint64_t> cutoffs;
  std::vector<double> thresholds;
  std::vector<std::vector<std::uint64_t>> counts;  // counts[cutoff][threshold]
};

// For each (cutoff, threshold) pair, the number of word types whose
// syllable index is >= threshold. Cutoffs must be ascending and >= 1;
// thresholds must lie in (0,1].
IndexCountMatrix count_words_by_index(
    const corpus::Corpus& corpus, const corpus::SyllableFrequencyTable& table,
    const std::vector<std::uint64_t>& cutoffs,
    const std::vector<double>& thresholds = {0.5, 0.8, 1.0},
    IndexMode mode = IndexMode::Occurrences, corpus::ScanReport* skips = nullptr,
    const translit::MappingTable& mapping = translit::MappingTable::builtin(),
    const wx::Inventory& inventory = wx::Inventory::builtin());

struct SelectionStep {
  std::string word;                        // WX form
  std::vector<std::string> newly_covered;  // sorted, pairwise disjoint across steps
  double coverage = 0.0;                   // cumulative fraction of the target
};

enum class StopReason {
  CoverageReached,  // requested coverage fraction met
  WordBudget,       // word limit hit
  Exhausted,        // no remaining word adds a new target syllable
};

std::string_view to_string(StopReason reason);

struct SelectionResult {
  std::vector<SelectionStep> steps;
  std::size_t target_size = 0;
  std::size_t covered = 0;
  double coverage = 0.0;
  StopReason stop_reason = StopReason::Exhausted;

  std::vector<std::string> words() const;
};

struct SelectionOptions {
  std::optional<double> target_coverage;  // stop once coverage >= this
  std::optional<std::size_t> max_words;
  // Greedy gain weighted by syllable table frequency instead of cardinality;
  // syllables absent from the weight table weigh 1 so that covering them
  // still counts as progress.
  bool frequency_weighted = false;
};

class EmptyTargetError : public std::runtime_error {
 public:
  EmptyTargetError();
};

// Greedy maximum coverage over the corpus word types (deduplicated by WX
// form). An empty `target` means every syllable occurring in the corpus.
// Ties break by fewer total syllable occurrences in the word, then by
// lexicographically smaller WX form; the result is deterministic and
// independent of corpus iteration order. Each step covers at least one new
// target syllable. Throws EmptyTargetError when no target syllable occurs
// in the corpus.
SelectionResult select_training_words(
    const corpus::Corpus& corpus, const std::set<std::string>& target = {},
    const SelectionOptions& options = {},
    const corpus::SyllableFrequencyTable* weight_table = nullptr,
    corpus::ScanReport* skips = nullptr,
    const translit::MappingTable& mapping = translit::MappingTable::builtin(),
    const wx::Inventory& inventory = wx::Inventory::builtin());

// --- Emitters (deterministic byte output) ---

// Header `cutoff` plus one `si_<percent>` column per threshold.
std::string index_csv(const IndexCountMatrix& matrix);

// One WX word per line; with `telugu_column`, a tab-separated Telugu
// rendering follows each word.
std::string selection_wordlist(
    const SelectionResult& result, bool telugu_column = false,
    const translit::MappingTable& mapping = translit::MappingTable::builtin(),
    const wx::Inventory& inventory = wx::Inventory::builtin());

// Per-step audit log (word, newly covered syllables, cumulative coverage)
// as a single JSON document with deterministic key order.
std::string selection_audit_json(const SelectionResult& result);

}  // namespace telsyl::select
