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

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "telsyl/wx_core.hpp"

namespace telsyl::syll {

// One label unit: a single phoneme, or a two-consonant cluster merged by the
// onset rules. Units labeled V are always single vowel phonemes.
struct Unit {
  std::vector<wx::Phoneme> phonemes;
  bool is_vowel = false;
};

struct LabeledWord {
  wx::WxWord word;
  std::string labels;  // over {C, V}, one character per unit
  std::vector<Unit> units;
};

// A C*VC* segment with exactly one vowel nucleus.
struct Syllable {
  std::vector<wx::Phoneme> phonemes;
  std::string text;  // WX rendering
};

class NoVowelError : public std::runtime_error {
 public:
  explicit NoVowelError(std::string word);
  const std::string& word() const { return word_; }

 private:
  std::string word_;
};

// Labels a word as consonant/vowel units, merging adjacent consonant pairs
// into one C unit per the cluster rules (applied in order, left to right,
// and a merged unit never merges again):
//   1. X + y, X any consonant except {y, H, M}
//   2. X + r, X any consonant except {y, r, l, lY, rY}
//   3. X + l, X in {k, c, t, w, p, g, j, d, x, b, m, R, S, s}
//   4. X + v, X in {k, c, t, w, p, g, j, d, x, b, R, S, s, r}
// Modifiers label C but never participate in merges.
LabeledWord label(const wx::WxWord& word);

// Splits a word into syllables: leading C units attach to the vowel on
// their right, trailing C units to the vowel on their left, and between
// nuclei a run of n consonant units breaks as V-V (n = 0), V-CV (n = 1),
// or VC-C…V (n >= 2, one coda unit stays left). Throws NoVowelError when
// the word has no vowel phoneme.
std::vector<Syllable> syllabify(const wx::WxWord& word);

// Syllable texts joined with ASCII '-'.
std::string hyphenate(const wx::WxWord& word);

bool has_vowel(const wx::WxWord& word);

}  // namespace telsyl::syll
