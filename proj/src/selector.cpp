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

#include "telsyl/selector.hpp"

#include <algorithm>
#include <cstdio>
#include <queue>

#include <json.hpp>

namespace telsyl::select {

namespace {

struct Candidate {
  std::string wx;
  std::vector<std::string> syllables;  // distinct, sorted
  std::size_t total_occurrences = 0;   // syllable occurrences, with multiplicity
};

// Deduplicates word types by WX form; candidates come out sorted by WX so
// the greedy scan is independent of corpus iteration order.
std::vector<Candidate> build_candidates(const corpus::Corpus& corpus,
                                        corpus::ScanReport* skips,
                                        const translit::MappingTable& mapping,
                                        const wx::Inventory& inventory) {
  std::map<std::string, Candidate> by_wx;
  corpus::for_each_wx_type(
      corpus, /*require_vowel=*/true, skips,
      [&by_wx](const wx::WxWord& wx_word, std::uint64_t) {
        std::string key = wx_word.wx();
        if (by_wx.contains(key)) return;
        Candidate c;
        c.wx = key;
        const auto syllables = syll::syllabify(wx_word);
        c.total_occurrences = syllables.size();
        for (const syll::Syllable& s : syllables) c.syllables.push_back(s.text);
        std::sort(c.syllables.begin(), c.syllables.end());
        c.syllables.erase(std::unique(c.syllables.begin(), c.syllables.end()),
                          c.syllables.end());
        by_wx.emplace(std::move(key), std::move(c));
      },
      mapping, inventory);

  std::vector<Candidate> out;
  out.reserve(by_wx.size());
  for (auto& [wx_form, c] : by_wx) out.push_back(std::move(c));
  return out;
}

}  // namespace

EmptyTargetError::EmptyTargetError()
    : std::runtime_error("EmptyTarget: no target syllable occurs in the corpus") {}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::CoverageReached: return "coverage-reached";
    case StopReason::WordBudget: return "word-budget";
    case StopReason::Exhausted: return "exhausted";
  }
  return "?";
}

std::vector<std::string> SelectionResult::words() const {
  std::vector<std::string> out;
  out.reserve(steps.size());
  for (const SelectionStep& s : steps) out.push_back(s.word);
  return out;
}

double syllable_index(const wx::WxWord& word, const corpus::SyllableFrequencyTable& table,
                      std::uint64_t cutoff, IndexMode mode) {
  const auto syllables = syll::syllabify(word);

  if (mode == IndexMode::Distinct) {
    std::vector<std::string_view> distinct;
    distinct.reserve(syllables.size());
    for (const syll::Syllable& s : syllables) distinct.push_back(s.text);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::size_t qualifying = 0;
    for (std::string_view s : distinct)
      if (table.count(s) >= cutoff) ++qualifying;
    return static_cast<double>(qualifying) / static_cast<double>(distinct.size());
  }

  std::size_t qualifying = 0;
  for (const syll::Syllable& s : syllables)
    if (table.count(s.text) >= cutoff) ++qualifying;
  return static_cast<double>(qualifying) / static_cast<double>(syllables.size());
}

IndexCountMatrix count_words_by_index(const corpus::Corpus& corpus,
                                      const corpus::SyllableFrequencyTable& table,
                                      const std::vector<std::uint64_t>& cutoffs,
                                      const std::vector<double>& thresholds,
                                      IndexMode mode, corpus::ScanReport* skips,
                                      const translit::MappingTable& mapping,
                                      const wx::Inventory& inventory) {
  if (corpus.empty()) throw corpus::EmptyCorpusError();
  for (std::size_t i = 0; i < cutoffs.size(); ++i)
    if (cutoffs[i] < 1 || (i > 0 && cutoffs[i] <= cutoffs[i - 1]))
      throw std::invalid_argument("cutoffs must be ascending and >= 1");
  for (double t : thresholds)
    if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("thresholds must lie in (0,1]");

  IndexCountMatrix matrix;
  matrix.cutoffs = cutoffs;
  matrix.thresholds = thresholds;
  matrix.counts.assign(cutoffs.size(), std::vector<std::uint64_t>(thresholds.size(), 0));

  corpus::for_each_wx_type(
      corpus, /*require_vowel=*/true, skips,
      [&](const wx::WxWord& wx_word, std::uint64_t) {
        // one syllabification per word; index per cutoff from the counts
        std::vector<std::uint64_t> freqs;
        for (const syll::Syllable& s : syll::syllabify(wx_word))
          freqs.push_back(table.count(s.text));
        if (mode == IndexMode::Distinct) {
          std::sort(freqs.begin(), freqs.end());
          // distinct by syllable text, not count; recompute precisely
          freqs.clear();
          std::vector<std::string> texts;
          for (const syll::Syllable& s : syll::syllabify(wx_word)) texts.push_back(s.text);
          std::sort(texts.begin(), texts.end());
          texts.erase(std::unique(texts.begin(), texts.end()), texts.end());
          for (const std::string& t : texts) freqs.push_back(table.count(t));
        }
        for (std::size_t ci = 0; ci < cutoffs.size(); ++ci) {
          std::size_t qualifying = 0;
          for (std::uint64_t f : freqs)
            if (f >= cutoffs[ci]) ++qualifying;
          const double index =
              static_cast<double>(qualifying) / static_cast<double>(freqs.size());
          for (std::size_t ti = 0; ti < thresholds.size(); ++ti)
            if (index >= thresholds[ti]) ++matrix.counts[ci][ti];
        }
      },
      mapping, inventory);
  return matrix;
}

SelectionResult select_training_words(const corpus::Corpus& corpus,
                                      const std::set<std::string>& target,
                                      const SelectionOptions& options,
                                      const corpus::SyllableFrequencyTable* weight_table,
                                      corpus::ScanReport* skips,
                                      const translit::MappingTable& mapping,
                                      const wx::Inventory& inventory) {
  if (corpus.empty()) throw corpus::EmptyCorpusError();
  const std::vector<Candidate> candidates = build_candidates(corpus, skips, mapping, inventory);

  std::set<std::string> corpus_syllables;
  for (const Candidate& c : candidates)
    corpus_syllables.insert(c.syllables.begin(), c.syllables.end());

  // An empty target means all corpus syllables; an explicit one keeps its
  // full size as the coverage denominator even when parts of it never occur.
  const std::set<std::string>& effective = target.empty() ? corpus_syllables : target;

  // Intern the reachable target syllables; ids follow lexicographic order.
  std::map<std::string, std::uint32_t> id_of;
  std::vector<const std::string*> name_of;
  for (const std::string& s : effective) {
    if (!target.empty() && !corpus_syllables.contains(s)) continue;
    id_of.emplace(s, static_cast<std::uint32_t>(name_of.size()));
    name_of.push_back(&id_of.find(s)->first);
  }
  if (name_of.empty()) throw EmptyTargetError();

  struct Entry {
    std::vector<std::uint32_t> ids;  // uncovered-target syllables, ascending
    std::size_t total_occurrences;
    const std::string* wx;
    std::uint64_t gain;
  };
  std::vector<Entry> entries;
  entries.reserve(candidates.size());

  std::vector<std::uint64_t> weight(name_of.size(), 1);
  if (options.frequency_weighted && weight_table) {
    for (std::size_t i = 0; i < name_of.size(); ++i) {
      // absent syllables keep weight 1 so covering them still counts
      const std::uint64_t w = weight_table->count(*name_of[i]);
      if (w > 0) weight[i] = w;
    }
  }

  for (const Candidate& c : candidates) {
    Entry e;
    for (const std::string& s : c.syllables) {
      const auto it = id_of.find(s);
      if (it != id_of.end()) e.ids.push_back(it->second);
    }
    if (e.ids.empty()) continue;
    e.total_occurrences = c.total_occurrences;
    e.wx = &c.wx;
    e.gain = 0;
    for (std::uint32_t id : e.ids) e.gain += weight[id];
    entries.push_back(std::move(e));
  }

  // Lazy greedy: gains only shrink as coverage grows, so a popped entry
  // whose refreshed gain matches its cached value is the true argmax under
  // the full tie-break order (gain desc, fewer occurrences, smaller WX).
  const auto worse = [&entries](std::size_t a, std::size_t b) {
    if (entries[a].gain != entries[b].gain) return entries[a].gain < entries[b].gain;
    if (entries[a].total_occurrences != entries[b].total_occurrences)
      return entries[a].total_occurrences > entries[b].total_occurrences;
    return *entries[a].wx > *entries[b].wx;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(worse)> heap(worse);
  for (std::size_t i = 0; i < entries.size(); ++i) heap.push(i);

  SelectionResult result;
  result.target_size = effective.size();
  std::vector<bool> covered(name_of.size(), false);

  while (result.covered < name_of.size()) {
    if (options.max_words && result.steps.size() >= *options.max_words) {
      result.stop_reason = StopReason::WordBudget;
      return result;
    }
    std::size_t best = entries.size();
    while (!heap.empty()) {
      const std::size_t top = heap.top();
      heap.pop();
      Entry& e = entries[top];
      const std::uint64_t cached = e.gain;
      std::erase_if(e.ids, [&covered](std::uint32_t id) { return covered[id]; });
      e.gain = 0;
      for (std::uint32_t id : e.ids) e.gain += weight[id];
      if (e.ids.empty()) continue;  // never useful again
      if (e.gain == cached) {
        best = top;
        break;
      }
      heap.push(top);  // stale; retry under the refreshed gain
    }
    if (best == entries.size()) {
      result.stop_reason = StopReason::Exhausted;
      return result;
    }

    Entry& chosen = entries[best];
    SelectionStep step;
    step.word = *chosen.wx;
    for (std::uint32_t id : chosen.ids) {
      covered[id] = true;
      step.newly_covered.push_back(*name_of[id]);
    }
    result.covered += chosen.ids.size();
    result.coverage =
        static_cast<double>(result.covered) / static_cast<double>(result.target_size);
    step.coverage = result.coverage;
    result.steps.push_back(std::move(step));

    if (options.target_coverage && result.coverage >= *options.target_coverage) {
      result.stop_reason = StopReason::CoverageReached;
      return result;
    }
  }
  // reachable syllables are exhausted; unreachable target entries stay open
  result.stop_reason = result.covered == result.target_size ? StopReason::CoverageReached
                                                            : StopReason::Exhausted;
  return result;
}

std::string index_csv(const IndexCountMatrix& matrix) {
  std::string out = "cutoff";
  for (double t : matrix.thresholds) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", t * 100.0);
    out += ",si_";
    out += buf;
  }
  out += '\n';
  for (std::size_t ci = 0; ci < matrix.cutoffs.size(); ++ci) {
    out += std::to_string(matrix.cutoffs[ci]);
    for (std::uint64_t n : matrix.counts[ci]) {
      out += ',';
      out += std::to_string(n);
    }
    out += '\n';
  }
  return out;
}

std::string selection_wordlist(const SelectionResult& result, bool telugu_column,
                               const translit::MappingTable& mapping,
                               const wx::Inventory& inventory) {
  std::string out;
  for (const SelectionStep& step : result.steps) {
    out += step.word;
    if (telugu_column) {
      out += '\t';
      out += translit::wx_word_to_telugu(step.word, mapping, inventory);
    }
    out += '\n';
  }
  return out;
}

std::string selection_audit_json(const SelectionResult& result) {
  using json = nlohmann::ordered_json;
  json doc = json::object();
  doc["target_size"] = result.target_size;
  doc["covered"] = result.covered;
  doc["coverage"] = result.coverage;
  doc["stop_reason"] = std::string(to_string(result.stop_reason));
  json steps = json::array();
  for (const SelectionStep& step : result.steps) {
    steps.push_back(json::object({
        {"word", step.word},
        {"newly_covered", step.newly_covered},
        {"coverage", step.coverage},
    }));
  }
  doc["steps"] = std::move(steps);
  return doc.dump(2) + "\n";
}

}  // namespace telsyl::select
