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

#include "telsyl/transliterator.hpp"

#include <cstdio>
#include <utility>

#include "telsyl/utf8.hpp"

namespace telsyl::translit {

namespace {

struct CodepointWx {
  char32_t cp;
  const char* wx;
};

// U+0C15 - U+0C39, Unicode 3.0 assignments. Values carry the inherent vowel.
constexpr CodepointWx kConsonants[] = {
    {0x0C15, "ka"}, {0x0C16, "Ka"}, {0x0C17, "ga"}, {0x0C18, "Ga"}, {0x0C19, "fa"},
    {0x0C1A, "ca"}, {0x0C1B, "Ca"}, {0x0C1C, "ja"}, {0x0C1D, "Ja"}, {0x0C1E, "Fa"},
    {0x0C1F, "ta"}, {0x0C20, "Ta"}, {0x0C21, "da"}, {0x0C22, "Da"}, {0x0C23, "Na"},
    {0x0C24, "wa"}, {0x0C25, "Wa"}, {0x0C26, "xa"}, {0x0C27, "Xa"}, {0x0C28, "na"},
    {0x0C2A, "pa"}, {0x0C2B, "Pa"}, {0x0C2C, "ba"}, {0x0C2D, "Ba"}, {0x0C2E, "ma"},
    {0x0C2F, "ya"}, {0x0C30, "ra"}, {0x0C31, "rYa"}, {0x0C32, "la"}, {0x0C33, "lYa"},
    {0x0C35, "va"}, {0x0C36, "Sa"}, {0x0C37, "Ra"}, {0x0C38, "sa"}, {0x0C39, "ha"},
};

// U+0C3E - U+0C4C; the sign replaces the inherent vowel.
constexpr CodepointWx kDependentVowels[] = {
    {0x0C3E, "A"},  {0x0C3F, "i"}, {0x0C40, "I"},  {0x0C41, "u"}, {0x0C42, "U"},
    {0x0C43, "q"},  {0x0C44, "Q"}, {0x0C46, "eV"}, {0x0C47, "e"}, {0x0C48, "E"},
    {0x0C4A, "oV"}, {0x0C4B, "o"}, {0x0C4C, "O"},
};

// U+0C05 - U+0C14, stand-alone letters.
constexpr CodepointWx kIndependentVowels[] = {
    {0x0C05, "a"},  {0x0C06, "A"}, {0x0C07, "i"},  {0x0C08, "I"}, {0x0C09, "u"},
    {0x0C0A, "U"},  {0x0C0B, "q"}, {0x0C0C, "L"},  {0x0C0E, "eV"}, {0x0C0F, "e"},
    {0x0C10, "E"},  {0x0C12, "oV"}, {0x0C13, "o"}, {0x0C14, "O"},
};

constexpr CodepointWx kModifiers[] = {
    {0x0C01, "z"},  // candrabindu
    {0x0C02, "M"},  // anusvara
    {0x0C03, "H"},  // visarga
};

constexpr char32_t kVirama = 0x0C4D;

std::string hex4(char32_t cp) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%04X", static_cast<unsigned>(cp));
  return buf;
}

}  // namespace

Kind kind_of(char32_t cp) {
  if (cp >= 0x0C15 && cp <= 0x0C39) return Kind::Consonant;
  if (cp >= 0x0C3E && cp <= 0x0C4C) return Kind::DependentVowelSign;
  if (cp == kVirama) return Kind::Virama;
  if (cp >= 0x0C05 && cp <= 0x0C14) return Kind::IndependentVowel;
  if (cp >= 0x0C01 && cp <= 0x0C03) return Kind::Modifier;
  return Kind::Other;
}

bool contains_telugu(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    char32_t cp = utf8::decode(text, i);
    if (cp >= 0x0C00 && cp <= 0x0C7F) return true;
  }
  return false;
}

DanglingSignError::DanglingSignError(char32_t cp, std::size_t position, std::string_view what)
    : std::runtime_error("DanglingSign: " + std::string(what) + " (U+" + hex4(cp) +
                         " at position " + std::to_string(position) + ")"),
      codepoint_(cp),
      position_(position) {}

UnrenderableError::UnrenderableError(std::string token)
    : std::runtime_error("Unrenderable: WX token \"" + token + "\" has no orthographic form here"),
      token_(std::move(token)) {}

MappingTable::MappingTable() {
  for (const auto& [cp, s] : kConsonants) {
    consonant_map_.emplace(cp, s);
    // reverse keyed by the bare consonant, without the inherent vowel
    std::string bare(s);
    bare.pop_back();
    consonant_rev_.emplace(std::move(bare), cp);
  }
  for (const auto& [cp, s] : kDependentVowels) {
    dependent_vowel_map_.emplace(cp, s);
    dependent_rev_.emplace(s, cp);
  }
  for (const auto& [cp, s] : kIndependentVowels) {
    independent_vowel_map_.emplace(cp, s);
    independent_rev_.emplace(s, cp);
  }
  for (const auto& [cp, s] : kModifiers) {
    modifier_map_.emplace(cp, s);
    modifier_rev_.emplace(s, cp);
  }
}

const MappingTable& MappingTable::builtin() {
  static const MappingTable instance;
  return instance;
}

namespace {

const std::string* find_cp(const std::map<char32_t, std::string>& m, char32_t cp) {
  auto it = m.find(cp);
  return it == m.end() ? nullptr : &it->second;
}

char32_t find_rev(const std::map<std::string, char32_t, std::less<>>& m, std::string_view wx) {
  auto it = m.find(wx);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

const std::string* MappingTable::consonant(char32_t cp) const { return find_cp(consonant_map_, cp); }
const std::string* MappingTable::dependent_vowel(char32_t cp) const { return find_cp(dependent_vowel_map_, cp); }
const std::string* MappingTable::independent_vowel(char32_t cp) const { return find_cp(independent_vowel_map_, cp); }
const std::string* MappingTable::modifier(char32_t cp) const { return find_cp(modifier_map_, cp); }

char32_t MappingTable::consonant_codepoint(std::string_view wx) const { return find_rev(consonant_rev_, wx); }
char32_t MappingTable::dependent_sign_codepoint(std::string_view wx) const { return find_rev(dependent_rev_, wx); }
char32_t MappingTable::independent_vowel_codepoint(std::string_view wx) const { return find_rev(independent_rev_, wx); }
char32_t MappingTable::modifier_codepoint(std::string_view wx) const { return find_rev(modifier_rev_, wx); }

std::string telugu_to_wx(std::string_view text, const MappingTable& table) {
  std::string out;
  out.reserve(text.size());
  // whether out currently ends with a consonant's inherent "a"
  bool pending_inherent = false;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t at = i;
    char32_t cp = utf8::decode(text, i);
    if (cp == 0x0C46) {
      // compose the split vowel sign: U+0C46 U+0C56 is canonically U+0C48
      std::size_t j = i;
      if (j < text.size() && utf8::decode(text, j) == 0x0C56) {
        cp = 0x0C48;
        i = j;
      }
    }
    switch (kind_of(cp)) {
      case Kind::Consonant: {
        const std::string* wx = table.consonant(cp);
        if (!wx) throw DanglingSignError(cp, at, "unassigned consonant codepoint");
        out += *wx;
        pending_inherent = true;
        break;
      }
      case Kind::DependentVowelSign: {
        const std::string* v = table.dependent_vowel(cp);
        if (!v) throw DanglingSignError(cp, at, "unassigned vowel sign codepoint");
        if (!pending_inherent)
          throw DanglingSignError(cp, at, "vowel sign without a preceding consonant");
        out.pop_back();  // the inherent vowel is the single character 'a'
        out += *v;
        pending_inherent = false;
        break;
      }
      case Kind::Virama: {
        if (!pending_inherent)
          throw DanglingSignError(cp, at, "virama without a preceding consonant");
        out.pop_back();
        pending_inherent = false;
        break;
      }
      case Kind::IndependentVowel: {
        const std::string* v = table.independent_vowel(cp);
        if (!v) throw DanglingSignError(cp, at, "unassigned vowel codepoint");
        out += *v;
        pending_inherent = false;
        break;
      }
      case Kind::Modifier: {
        out += *table.modifier(cp);
        pending_inherent = false;
        break;
      }
      case Kind::Other: {
        // pass through unchanged; word state never crosses a delimiter
        utf8::append(out, cp);
        pending_inherent = false;
        break;
      }
    }
  }
  return out;
}

std::string wx_word_to_telugu(std::string_view wx_word, const MappingTable& table,
                              const wx::Inventory& inventory) {
  const wx::WxWord word = wx::tokenize_wx(wx_word, inventory);
  std::string out;
  const auto& ph = word.phonemes;
  for (std::size_t i = 0; i < ph.size(); ++i) {
    const wx::Phoneme& p = ph[i];
    switch (p.category) {
      case wx::Category::Consonant: {
        char32_t c = table.consonant_codepoint(p.symbol);
        if (!c) throw UnrenderableError(p.symbol);
        utf8::append(out, c);
        if (i + 1 < ph.size() && ph[i + 1].category == wx::Category::Vowel) {
          const wx::Phoneme& v = ph[i + 1];
          if (v.symbol != "a") {  // the inherent vowel needs no sign
            char32_t sign = table.dependent_sign_codepoint(v.symbol);
            if (!sign) throw UnrenderableError(v.symbol);
            utf8::append(out, sign);
          }
          ++i;
        } else {
          utf8::append(out, kVirama);  // bare consonant
        }
        break;
      }
      case wx::Category::Vowel: {
        char32_t v = table.independent_vowel_codepoint(p.symbol);
        if (!v) throw UnrenderableError(p.symbol);
        utf8::append(out, v);
        break;
      }
      case wx::Category::Modifier: {
        if (out.empty()) throw UnrenderableError(p.symbol);  // leading modifier
        utf8::append(out, table.modifier_codepoint(p.symbol));
        break;
      }
    }
  }
  return out;
}

std::string wx_to_telugu(std::string_view wx_text, const MappingTable& table,
                         const wx::Inventory& inventory) {
  std::string out;
  std::size_t i = 0;
  std::size_t word_start = std::string_view::npos;
  const auto flush = [&](std::size_t end) {
    if (word_start != std::string_view::npos) {
      out += wx_word_to_telugu(wx_text.substr(word_start, end - word_start), table, inventory);
      word_start = std::string_view::npos;
    }
  };
  while (i < wx_text.size()) {
    std::size_t at = i;
    char32_t cp = utf8::decode(wx_text, i);
    if (utf8::is_space(cp)) {
      flush(at);
      utf8::append(out, cp);
    } else if (word_start == std::string_view::npos) {
      word_start = at;
    }
  }
  flush(wx_text.size());
  return out;
}

wx::WxWord to_wx_word(std::string_view orthographic_word, const MappingTable& table,
                      const wx::Inventory& inventory) {
  wx::WxWord word = wx::tokenize_wx(telugu_to_wx(orthographic_word, table), inventory);
  word.source = std::string(orthographic_word);
  return word;
}

}  // namespace telsyl::translit
