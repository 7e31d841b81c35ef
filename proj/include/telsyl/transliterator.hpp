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

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "telsyl/wx_core.hpp"

namespace telsyl::translit {

// Telugu-block character kinds, decided purely by codepoint range and
// checked in this order.
enum class Kind {
  Consonant,           // U+0C15 - U+0C39
  DependentVowelSign,  // U+0C3E - U+0C4C
  Virama,              // U+0C4D
  IndependentVowel,    // U+0C05 - U+0C14
  Modifier,            // U+0C01 - U+0C03
  Other,
};

Kind kind_of(char32_t cp);

// True when at least one codepoint falls in the Telugu block U+0C00-U+0C7F.
bool contains_telugu(std::string_view text);

class DanglingSignError : public std::runtime_error {
 public:
  DanglingSignError(char32_t cp, std::size_t position, std::string_view what);
  std::size_t position() const { return position_; }
  char32_t codepoint() const { return codepoint_; }

 private:
  char32_t codepoint_;
  std::size_t position_;
};

class UnrenderableError : public std::runtime_error {
 public:
  explicit UnrenderableError(std::string token);
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

// Codepoint <-> WX tables. Consonant entries carry the inherent vowel, so a
// bare consonant letter maps to its "Ca" form. All maps are injective within
// their own kind.
class MappingTable {
 public:
  static const MappingTable& builtin();

  // Forward lookups; nullptr for codepoints without an assigned mapping.
  const std::string* consonant(char32_t cp) const;
  const std::string* dependent_vowel(char32_t cp) const;
  const std::string* independent_vowel(char32_t cp) const;
  const std::string* modifier(char32_t cp) const;

  // Reverse lookups; 0 when the WX token has no orthographic form of that
  // kind (e.g. a vowel with no dependent sign).
  char32_t consonant_codepoint(std::string_view wx_consonant) const;
  char32_t dependent_sign_codepoint(std::string_view wx_vowel) const;
  char32_t independent_vowel_codepoint(std::string_view wx_vowel) const;
  char32_t modifier_codepoint(std::string_view wx_modifier) const;

 private:
  MappingTable();

  std::map<char32_t, std::string> consonant_map_;
  std::map<char32_t, std::string> dependent_vowel_map_;
  std::map<char32_t, std::string> independent_vowel_map_;
  std::map<char32_t, std::string> modifier_map_;
  std::map<std::string, char32_t, std::less<>> consonant_rev_;
  std::map<std::string, char32_t, std::less<>> dependent_rev_;
  std::map<std::string, char32_t, std::less<>> independent_rev_;
  std::map<std::string, char32_t, std::less<>> modifier_rev_;
};

// Converts Telugu Unicode text to WX, character by character: a consonant
// appends its "Ca" form; a dependent vowel sign or virama deletes the
// trailing inherent "a" (exactly one character); an independent vowel or
// modifier appends its WX; anything else passes through unchanged and
// delimits the word, so pending state never crosses it. The split vowel
// sign U+0C46 U+0C56 is composed to U+0C48 first; unassigned codepoints
// inside the mapped ranges raise DanglingSignError rather than guessing.
std::string telugu_to_wx(std::string_view text,
                         const MappingTable& table = MappingTable::builtin());

// Inverse rendering of one whitespace-free WX word: a vowel after a
// consonant becomes a dependent sign (the inherent "a" becomes nothing), a
// consonant not followed by a vowel takes a virama, other vowels render as
// independent letters. Throws UnrenderableError for sequences with no
// orthographic form (leading modifier, vowels lacking the needed shape).
std::string wx_word_to_telugu(std::string_view wx_word,
                              const MappingTable& table = MappingTable::builtin(),
                              const wx::Inventory& inventory = wx::Inventory::builtin());

// Whitespace-preserving text-level inverse of telugu_to_wx.
std::string wx_to_telugu(std::string_view wx_text,
                         const MappingTable& table = MappingTable::builtin(),
                         const wx::Inventory& inventory = wx::Inventory::builtin());

// Transliterates one orthographic word (Telugu or already-WX; pass-through
// makes the conversion the identity on WX) and tokenizes it, keeping the
// original form as the word's source.
wx::WxWord to_wx_word(std::string_view orthographic_word,
                      const MappingTable& table = MappingTable::builtin(),
                      const wx::Inventory& inventory = wx::Inventory::builtin());

}  // namespace telsyl::translit
