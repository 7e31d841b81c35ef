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

#include "telsyl/syllabifier.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace telsyl::syll {

namespace {

template <std::size_t N>
bool in(std::string_view symbol, const std::array<std::string_view, N>& set) {
  return std::find(set.begin(), set.end(), symbol) != set.end();
}

// Cluster rules, applied in this order to a consonant pair (x, next).
bool merges(std::string_view x, std::string_view next) {
  static constexpr std::array<std::string_view, 3> kYExceptions = {"y", "H", "M"};
  static constexpr std::array<std::string_view, 5> kRExceptions = {"y", "r", "l", "lY", "rY"};
  static constexpr std::array<std::string_view, 14> kLOnsets = {
      "k", "c", "t", "w", "p", "g", "j", "d", "x", "b", "m", "R", "S", "s"};
  static constexpr std::array<std::string_view, 14> kVOnsets = {
      "k", "c", "t", "w", "p", "g", "j", "d", "x", "b", "R", "S", "s", "r"};
  if (next == "y") return !in(x, kYExceptions);
  if (next == "r") return !in(x, kRExceptions);
  if (next == "l") return in(x, kLOnsets);
  if (next == "v") return in(x, kVOnsets);
  return false;
}

}  // namespace

NoVowelError::NoVowelError(std::string word)
    : std::runtime_error("NoVowel: word \"" + word + "\" has no vowel phoneme"),
      word_(std::move(word)) {}

LabeledWord label(const wx::WxWord& word) {
  LabeledWord out;
  out.word = word;
  const auto& ph = word.phonemes;
  out.units.reserve(ph.size());
  std::size_t i = 0;
  while (i < ph.size()) {
    const wx::Phoneme& p = ph[i];
    // merged units never merge again, so the scan resumes past the pair
    if (p.category == wx::Category::Consonant && i + 1 < ph.size() &&
        ph[i + 1].category == wx::Category::Consonant &&
        merges(p.symbol, ph[i + 1].symbol)) {
      out.units.push_back(Unit{{p, ph[i + 1]}, false});
      out.labels += 'C';
      i += 2;
      continue;
    }
    const bool is_vowel = p.category == wx::Category::Vowel;
    out.units.push_back(Unit{{p}, is_vowel});
    out.labels += is_vowel ? 'V' : 'C';
    ++i;
  }
  return out;
}

std::vector<Syllable> syllabify(const wx::WxWord& word) {
  const LabeledWord labeled = label(word);

  std::vector<std::size_t> nuclei;
  for (std::size_t u = 0; u < labeled.units.size(); ++u)
    if (labeled.units[u].is_vowel) nuclei.push_back(u);
  if (nuclei.empty()) throw NoVowelError(word.wx());

  // Syllable start indices. Leading C units fall into the first syllable and
  // trailing ones into the last. Between nuclei, a run of n consonant units
  // splits as V-V / V-CV (n <= 1) or VC-C...V (n >= 2): one coda unit left,
  // the rest right.
  std::vector<std::size_t> starts = {0};
  for (std::size_t k = 0; k + 1 < nuclei.size(); ++k) {
    const std::size_t run = nuclei[k + 1] - nuclei[k] - 1;
    starts.push_back(run <= 1 ? nuclei[k] + 1 : nuclei[k] + 2);
  }

  std::vector<Syllable> syllables;
  syllables.reserve(starts.size());
  for (std::size_t s = 0; s < starts.size(); ++s) {
    const std::size_t begin = starts[s];
    const std::size_t end = s + 1 < starts.size() ? starts[s + 1] : labeled.units.size();
    Syllable syl;
    for (std::size_t u = begin; u < end; ++u) {
      for (const wx::Phoneme& p : labeled.units[u].phonemes) {
        syl.text += p.symbol;
        syl.phonemes.push_back(p);
      }
    }
    syllables.push_back(std::move(syl));
  }
  return syllables;
}

std::string hyphenate(const wx::WxWord& word) {
  std::string out;
  for (const Syllable& s : syllabify(word)) {
    if (!out.empty()) out += '-';
    out += s.text;
  }
  return out;
}

bool has_vowel(const wx::WxWord& word) {
  return std::any_of(word.phonemes.begin(), word.phonemes.end(),
                     [](const wx::Phoneme& p) { return p.category == wx::Category::Vowel; });
}

}  // namespace telsyl::syll
