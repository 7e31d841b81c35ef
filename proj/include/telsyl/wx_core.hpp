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
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace telsyl::wx {

enum class Category { Vowel, Modifier, Consonant };

// Vowel classes by articulator position; vowels outside the five named
// classes fall to Other and are reported separately.
enum class VowelClass {
  ClosedFront,
  HalfClosedFront,
  ClosedBack,
  HalfClosedBack,
  Open,
  Other,
};

// Consonant classes by place of articulation. Palatals have no slot in the
// five-way scheme and fall to Other.
enum class ConsonantClass {
  Bilabial,
  DentalAlveolar,
  Retroflex,
  Velar,
  Glottal,
  Other,
};

std::string_view to_string(Category c);
std::string_view to_string(VowelClass c);
std::string_view to_string(ConsonantClass c);

struct Phoneme {
  std::string symbol;  // WX token, 1-2 characters ("k", "eV", "lY")
  Category category = Category::Consonant;

  bool operator==(const Phoneme&) const = default;
};

struct SymbolInfo {
  Category category = Category::Consonant;
  VowelClass vowel_class = VowelClass::Other;              // when category == Vowel
  ConsonantClass consonant_class = ConsonantClass::Other;  // when category == Consonant
  bool unconfirmed = false;  // inventory slot whose WX spelling is not attested

  bool operator==(const SymbolInfo&) const = default;
};

class UnknownSymbolError : public std::runtime_error {
 public:
  UnknownSymbolError(std::string_view text, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class TableFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The closed WX phoneme inventory with per-symbol category and articulatory
// class. Immutable after construction. The built-in table is the table of
// record; the same data can be loaded from a plain-text file for auditing
// (see data/wx_inventory.tsv).
class Inventory {
 public:
  static const Inventory& builtin();

  // Parses the audit-file format: blank lines and '#' comments ignored,
  // a "version N" line, then one row per symbol:
  //   symbol <ws> category <ws> class [<ws> unconfirmed]
  static Inventory parse(std::string_view text);
  static Inventory load(const std::filesystem::path& path);

  const SymbolInfo* find(std::string_view symbol) const;
  const SymbolInfo& info(std::string_view symbol) const;  // throws UnknownSymbolError
  bool contains(std::string_view symbol) const { return find(symbol) != nullptr; }

  const std::map<std::string, SymbolInfo, std::less<>>& symbols() const { return symbols_; }
  int version() const { return version_; }
  std::size_t max_symbol_length() const { return max_symbol_length_; }

 private:
  std::map<std::string, SymbolInfo, std::less<>> symbols_;
  std::size_t max_symbol_length_ = 1;
  int version_ = 0;
};

// One word as an ordered phoneme sequence plus the orthographic form it was
// derived from. Joining the phoneme symbols reproduces the WX string.
struct WxWord {
  std::string source;
  std::vector<Phoneme> phonemes;

  std::string wx() const;
  bool operator==(const WxWord&) const = default;
};

// Greedy longest-match tokenization, left to right; two-character symbols
// win over their one-character prefixes. Throws UnknownSymbolError when no
// inventory symbol matches at a position.
WxWord tokenize_wx(std::string_view wx_text,
                   const Inventory& inventory = Inventory::builtin());

}  // namespace telsyl::wx
