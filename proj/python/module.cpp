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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "telsyl/corpus_stats.hpp"
#include "telsyl/selector.hpp"
#include "telsyl/syllabifier.hpp"
#include "telsyl/transliterator.hpp"
#include "telsyl/wx_core.hpp"

namespace py = pybind11;
using namespace telsyl;

namespace {

corpus::Corpus corpus_from(const std::map<std::string, std::uint64_t>& words) {
  corpus::Corpus c;
  for (const auto& [word, count] : words) {
    c.word_types[word] = count;
    c.total_tokens += count;
  }
  return c;
}

corpus::SyllableFrequencyTable table_from(const std::map<std::string, std::uint64_t>& counts) {
  corpus::SyllableFrequencyTable t;
  for (const auto& [syllable, n] : counts) t.counts[syllable] = n;
  return t;
}

corpus::CountingMode mode_from(const std::string& mode) {
  if (mode == "types") return corpus::CountingMode::Types;
  if (mode == "tokens") return corpus::CountingMode::Tokens;
  throw std::invalid_argument("mode must be 'types' or 'tokens'");
}

py::dict skips_dict(const corpus::ScanReport& skips) {
  py::dict d;
  d["no_vowel"] = skips.no_vowel;
  d["unparseable"] = skips.unparseable;
  return d;
}

template <typename Key>
py::dict shares_dict(const std::map<Key, double>& shares,
                     const std::map<Key, std::uint64_t>& counts) {
  py::dict s, c;
  for (const auto& [key, share] : shares) s[py::str(std::string(to_string(key)))] = share;
  for (const auto& [key, n] : counts) c[py::str(std::string(to_string(key)))] = n;
  py::dict out;
  out["shares"] = s;
  out["counts"] = c;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Telugu corpus analysis: WX transliteration, rule-based syllabification, "
            "syllable statistics, and training-word selection";

  py::register_exception<wx::UnknownSymbolError>(m, "UnknownSymbolError", PyExc_ValueError);
  py::register_exception<wx::TableFormatError>(m, "TableFormatError", PyExc_ValueError);
  py::register_exception<translit::DanglingSignError>(m, "DanglingSignError", PyExc_ValueError);
  py::register_exception<translit::UnrenderableError>(m, "UnrenderableError", PyExc_ValueError);
  py::register_exception<syll::NoVowelError>(m, "NoVowelError", PyExc_ValueError);
  py::register_exception<corpus::EmptyCorpusError>(m, "EmptyCorpusError", PyExc_ValueError);
  py::register_exception<select::EmptyTargetError>(m, "EmptyTargetError", PyExc_ValueError);

  // wx_core
  m.def(
      "tokenize",
      [](const std::string& wx_text) {
        std::vector<std::string> symbols;
        for (const auto& p : wx::tokenize_wx(wx_text).phonemes) symbols.push_back(p.symbol);
        return symbols;
      },
      py::arg("wx_text"),
      "Greedy longest-match split of a WX string into phoneme symbols.");

  m.def(
      "classify",
      [](const std::string& symbol) {
        const wx::SymbolInfo& info = wx::Inventory::builtin().info(symbol);
        std::string cls;
        switch (info.category) {
          case wx::Category::Vowel: cls = to_string(info.vowel_class); break;
          case wx::Category::Consonant: cls = to_string(info.consonant_class); break;
          case wx::Category::Modifier: cls = "-"; break;
        }
        return py::make_tuple(std::string(to_string(info.category)), cls);
      },
      py::arg("symbol"), "(category, articulatory class) of one WX symbol.");

  // transliterator
  m.def("telugu_to_wx",
        [](const std::string& text) { return translit::telugu_to_wx(text); },
        py::arg("text"), "Telugu Unicode text to WX; other characters pass through.");
  m.def("wx_to_telugu",
        [](const std::string& wx_text) { return translit::wx_to_telugu(wx_text); },
        py::arg("wx_text"), "WX text to Telugu script, whitespace preserved.");

  // syllabifier
  m.def(
      "label",
      [](const std::string& word) { return syll::label(translit::to_wx_word(word)).labels; },
      py::arg("word"), "Merged consonant/vowel label string of a word.");
  m.def(
      "syllabify",
      [](const std::string& word) {
        std::vector<std::string> out;
        for (const auto& s : syll::syllabify(translit::to_wx_word(word))) out.push_back(s.text);
        return out;
      },
      py::arg("word"), "Syllable texts of one Telugu or WX word.");
  m.def(
      "hyphenate",
      [](const std::string& word) { return syll::hyphenate(translit::to_wx_word(word)); },
      py::arg("word"), "Hyphen-joined syllables of one word.");

  // corpus_stats
  m.def(
      "extract_words",
      [](const std::string& text) {
        return corpus::extract_words(text).word_types;
      },
      py::arg("text"), "Cleaned word types with token counts.");

  m.def(
      "phoneme_distribution",
      [](const std::map<std::string, std::uint64_t>& words, const std::string& mode) {
        corpus::ScanReport skips;
        const auto report =
            corpus::phoneme_distribution(corpus_from(words), mode_from(mode), &skips);
        py::dict out;
        out["total"] = report.total_phonemes;
        py::dict cats = shares_dict(report.phoneme_shares, report.category_counts);
        out["shares"] = cats["shares"];
        out["counts"] = cats["counts"];
        out["vowel_classes"] = shares_dict(report.vowel_class_shares, report.vowel_class_counts);
        out["consonant_classes"] =
            shares_dict(report.consonant_class_shares, report.consonant_class_counts);
        out["skipped"] = skips_dict(skips);
        return out;
      },
      py::arg("words"), py::arg("mode") = "types",
      "Phoneme category and class distribution over word types (or tokens).");

  m.def(
      "syllable_frequency",
      [](const std::map<std::string, std::uint64_t>& words, const std::string& mode) {
        corpus::ScanReport skips;
        return corpus::syllable_frequency(corpus_from(words), mode_from(mode), &skips).counts;
      },
      py::arg("words"), py::arg("mode") = "types",
      "Syllable occurrence counts over word types (or tokens).");

  m.def(
      "frequency_buckets",
      [](const std::map<std::string, std::uint64_t>& table,
         const std::vector<std::uint64_t>& edges) {
        std::vector<std::pair<std::string, std::uint64_t>> out;
        for (const auto& b : corpus::frequency_buckets(table_from(table), edges))
          out.emplace_back(b.label(), b.count);
        return out;
      },
      py::arg("table"),
      py::arg("edges") = std::vector<std::uint64_t>{100, 1000, 10000, 100000},
      "Distinct-syllable counts per half-open frequency range.");

  // selector
  m.def(
      "syllable_index",
      [](const std::string& word, const std::map<std::string, std::uint64_t>& table,
         std::uint64_t cutoff, bool distinct) {
        return select::syllable_index(
            translit::to_wx_word(word), table_from(table), cutoff,
            distinct ? select::IndexMode::Distinct : select::IndexMode::Occurrences);
      },
      py::arg("word"), py::arg("table"), py::arg("cutoff"), py::arg("distinct") = false,
      "Fraction of the word's syllables meeting the cutoff frequency.");

  m.def(
      "count_words_by_index",
      [](const std::map<std::string, std::uint64_t>& words,
         const std::map<std::string, std::uint64_t>& table,
         const std::vector<std::uint64_t>& cutoffs, const std::vector<double>& thresholds,
         bool distinct) {
        const auto matrix = select::count_words_by_index(
            corpus_from(words), table_from(table), cutoffs, thresholds,
            distinct ? select::IndexMode::Distinct : select::IndexMode::Occurrences);
        py::dict out;
        out["cutoffs"] = matrix.cutoffs;
        out["thresholds"] = matrix.thresholds;
        out["counts"] = matrix.counts;
        return out;
      },
      py::arg("words"), py::arg("table"), py::arg("cutoffs"),
      py::arg("thresholds") = std::vector<double>{0.5, 0.8, 1.0}, py::arg("distinct") = false,
      "Word counts with syllable index at or above each threshold, per cutoff.");

  m.def(
      "select_training_words",
      [](const std::map<std::string, std::uint64_t>& words,
         const std::optional<std::set<std::string>>& target, std::optional<double> coverage,
         std::optional<std::size_t> max_words, bool weighted) {
        select::SelectionOptions options;
        options.target_coverage = coverage;
        options.max_words = max_words;
        options.frequency_weighted = weighted;

        const corpus::Corpus corp = corpus_from(words);
        corpus::SyllableFrequencyTable weight_table;
        if (weighted) weight_table = corpus::syllable_frequency(corp);

        const auto result = select::select_training_words(
            corp, target.value_or(std::set<std::string>{}), options,
            weighted ? &weight_table : nullptr);

        py::list steps;
        for (const auto& step : result.steps) {
          py::dict d;
          d["word"] = step.word;
          d["newly_covered"] = step.newly_covered;
          d["coverage"] = step.coverage;
          steps.append(d);
        }
        py::dict out;
        out["words"] = result.words();
        out["steps"] = steps;
        out["target_size"] = result.target_size;
        out["covered"] = result.covered;
        out["coverage"] = result.coverage;
        out["stop_reason"] = std::string(to_string(result.stop_reason));
        return out;
      },
      py::arg("words"), py::arg("target") = std::nullopt, py::arg("coverage") = std::nullopt,
      py::arg("max_words") = std::nullopt, py::arg("weighted") = false,
      "Greedy minimal word list covering the target syllable set.");

#ifdef TELSYL_VERSION
  m.attr("__version__") = TELSYL_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
