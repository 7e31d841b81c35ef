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

#include "telsyl/wx_core.hpp"

#include <fstream>
#include <sstream>

namespace telsyl::wx {

namespace {

struct TableRow {
  const char* symbol;
  Category category;
  VowelClass vowel_class;
  ConsonantClass consonant_class;
  bool unconfirmed;
};

constexpr VowelClass kNoV = VowelClass::Other;
constexpr ConsonantClass kNoC = ConsonantClass::Other;

// Table of record. 13 attested vowels plus three unconfirmed slots (the
// vocalic R/L letters, which round out the script's 16 vowel signs), 3
// modifiers, and the 35 consonants of the standard WX-for-Telugu table.
constexpr TableRow kBuiltinTable[] = {
    // vowels
    {"a", Category::Vowel, VowelClass::Open, kNoC, false},
    {"A", Category::Vowel, VowelClass::Open, kNoC, false},
    {"i", Category::Vowel, VowelClass::ClosedFront, kNoC, false},
    {"I", Category::Vowel, VowelClass::ClosedFront, kNoC, false},
    {"u", Category::Vowel, VowelClass::ClosedBack, kNoC, false},
    {"U", Category::Vowel, VowelClass::ClosedBack, kNoC, false},
    {"q", Category::Vowel, VowelClass::Other, kNoC, false},
    {"eV", Category::Vowel, VowelClass::HalfClosedFront, kNoC, false},
    {"e", Category::Vowel, VowelClass::HalfClosedFront, kNoC, false},
    {"E", Category::Vowel, VowelClass::Other, kNoC, false},
    {"oV", Category::Vowel, VowelClass::HalfClosedBack, kNoC, false},
    {"o", Category::Vowel, VowelClass::HalfClosedBack, kNoC, false},
    {"O", Category::Vowel, VowelClass::Other, kNoC, false},
    {"Q", Category::Vowel, VowelClass::Other, kNoC, true},   // vocalic RR
    {"L", Category::Vowel, VowelClass::Other, kNoC, true},   // vocalic L
    {"LY", Category::Vowel, VowelClass::Other, kNoC, true},  // vocalic LL
    // modifiers
    {"M", Category::Modifier, kNoV, kNoC, false},  // anusvara
    {"H", Category::Modifier, kNoV, kNoC, false},  // visarga
    {"z", Category::Modifier, kNoV, kNoC, false},  // candrabindu
    // consonants: velar row
    {"k", Category::Consonant, kNoV, ConsonantClass::Velar, false},
    {"K", Category::Consonant, kNoV, ConsonantClass::Velar, false},
    {"g", Category::Consonant, kNoV, ConsonantClass::Velar, false},
    {"G", Category::Consonant, kNoV, ConsonantClass::Velar, false},
    {"f", Category::Consonant, kNoV, ConsonantClass::Velar, false},
    // palatal row (no slot in the five-way scheme)
    {"c", Category::Consonant, kNoV, ConsonantClass::Other, false},
    {"C", Category::Consonant, kNoV, ConsonantClass::Other, false},
    {"j", Category::Consonant, kNoV, ConsonantClass::Other, false},
    {"J", Category::Consonant, kNoV, ConsonantClass::Other, false},
    {"F", Category::Consonant, kNoV, ConsonantClass::Other, false},
    // retroflex row
    {"t", Category::Consonant, kNoV, ConsonantClass::Retroflex, false},
    {"T", Category::Consonant, kNoV, ConsonantClass::Retroflex, false},
    {"d", Category::Consonant, kNoV, ConsonantClass::Retroflex, false},
    {"D", Category::Consonant, kNoV, ConsonantClass::Retroflex, false},
    {"N", Category::Consonant, kNoV, ConsonantClass::Retroflex, false},
    // dental row
    {"w", Category::Consonant, kNoV, ConsonantClass::DentalAlveolar, false},
    {"W", Category::Consonant, kNoV, ConsonantClass::DentalAlveolar, false},
    {"x", Category::Consonant, kNoV, ConsonantClass::DentalAlveolar, false},
    {"X", Category::Consonant, kNoV, ConsonantClass::DentalAlveolar, false},
    {"n", Category::Consonant, kNoV, ConsonantClass::DentalAlveolar, false},
    // labial row
    {"p", Category::Consonant, kNoV, ConsonantClass::Bilabial, false},
    {"P", Category::Consonant, kNoV, ConsonantClass::Bilabial, false},
    {"b", Category::Consonant, kNoV, ConsonantClass::Bilabial, false},
    {"B", Category::Consonant, kNoV, ConsonantClass::Bilabial, false},
    {"m", Category::Consonant, kNoV, ConsonantClass::Bilabial, false},
    // sonorants, sibilants, h
    {"y", Category::Consonant, kNoV, ConsonantClass::Other, false},
    {"r", Category::Consonant, kNoV, ConsonantClass::DentalAlveolar, false},
    {"l", Category::Consonant, kNoV, ConsonantClass::DentalAlveolar, false},
    {"v", Category::Consonant, kNoV, ConsonantClass::Bilabial, false},
    {"S", Category::Consonant, kNoV, ConsonantClass::Other, false},
    {"R", Category::Consonant, kNoV, ConsonantClass::Retroflex, false},
    {"s", Category::Consonant, kNoV, ConsonantClass::DentalAlveolar, false},
    {"h", Category::Consonant, kNoV, ConsonantClass::Glottal, false},
    {"lY", Category::Consonant, kNoV, ConsonantClass::Retroflex, false},
    {"rY", Category::Consonant, kNoV, ConsonantClass::Retroflex, false},
};

bool parse_category(std::string_view s, Category& out) {
  if (s == "vowel") out = Category::Vowel;
  else if (s == "modifier") out = Category::Modifier;
  else if (s == "consonant") out = Category::Consonant;
  else return false;
  return true;
}

bool parse_vowel_class(std::string_view s, VowelClass& out) {
  if (s == "closed-front") out = VowelClass::ClosedFront;
  else if (s == "half-closed-front") out = VowelClass::HalfClosedFront;
  else if (s == "closed-back") out = VowelClass::ClosedBack;
  else if (s == "half-closed-back") out = VowelClass::HalfClosedBack;
  else if (s == "open") out = VowelClass::Open;
  else if (s == "other") out = VowelClass::Other;
  else return false;
  return true;
}

bool parse_consonant_class(std::string_view s, ConsonantClass& out) {
  if (s == "bilabial") out = ConsonantClass::Bilabial;
  else if (s == "dental-alveolar") out = ConsonantClass::DentalAlveolar;
  else if (s == "retroflex") out = ConsonantClass::Retroflex;
  else if (s == "velar") out = ConsonantClass::Velar;
  else if (s == "glottal") out = ConsonantClass::Glottal;
  else if (s == "other") out = ConsonantClass::Other;
  else return false;
  return true;
}

std::string clip(std::string_view text) {
  constexpr std::size_t kMax = 48;
  if (text.size() <= kMax) return std::string(text);
  return std::string(text.substr(0, kMax)) + "...";
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

std::string_view to_string(Category c) {
  switch (c) {
    case Category::Vowel: return "vowel";
    case Category::Modifier: return "modifier";
    case Category::Consonant: return "consonant";
  }
  return "?";
}

std::string_view to_string(VowelClass c) {
  switch (c) {
    case VowelClass::ClosedFront: return "closed-front";
    case VowelClass::HalfClosedFront: return "half-closed-front";
    case VowelClass::ClosedBack: return "closed-back";
    case VowelClass::HalfClosedBack: return "half-closed-back";
    case VowelClass::Open: return "open";
    case VowelClass::Other: return "other";
  }
  return "?";
}

std::string_view to_string(ConsonantClass c) {
  switch (c) {
    case ConsonantClass::Bilabial: return "bilabial";
    case ConsonantClass::DentalAlveolar: return "dental-alveolar";
    case ConsonantClass::Retroflex: return "retroflex";
    case ConsonantClass::Velar: return "velar";
    case ConsonantClass::Glottal: return "glottal";
    case ConsonantClass::Other: return "other";
  }
  return "?";
}

UnknownSymbolError::UnknownSymbolError(std::string_view text, std::size_t position)
    : std::runtime_error("UnknownSymbol: no WX symbol matches \"" + clip(text) +
                         "\" at position " + std::to_string(position)),
      position_(position) {}

const Inventory& Inventory::builtin() {
  static const Inventory instance = [] {
    Inventory inv;
    inv.version_ = 1;
    for (const TableRow& row : kBuiltinTable) {
      SymbolInfo info;
      info.category = row.category;
      info.vowel_class = row.vowel_class;
      info.consonant_class = row.consonant_class;
      info.unconfirmed = row.unconfirmed;
      inv.symbols_.emplace(row.symbol, info);
      inv.max_symbol_length_ = std::max(inv.max_symbol_length_, std::string_view(row.symbol).size());
    }
    return inv;
  }();
  return instance;
}

Inventory Inventory::parse(std::string_view text) {
  Inventory inv;
  bool have_version = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;

    const auto fail = [&](const std::string& why) {
      throw TableFormatError("inventory table line " + std::to_string(line_no) + ": " + why);
    };

    if (!have_version) {
      if (fields.size() != 2 || fields[0] != "version") fail("expected a 'version N' line");
      int v = 0;
      for (char ch : fields[1]) {
        if (ch < '0' || ch > '9') fail("bad version number");
        v = v * 10 + (ch - '0');
      }
      inv.version_ = v;
      have_version = true;
      continue;
    }

    if (fields.size() < 3 || fields.size() > 4) fail("expected: symbol category class [unconfirmed]");
    SymbolInfo info;
    if (!parse_category(fields[1], info.category)) fail("unknown category");
    switch (info.category) {
      case Category::Vowel:
        if (!parse_vowel_class(fields[2], info.vowel_class)) fail("unknown vowel class");
        break;
      case Category::Consonant:
        if (!parse_consonant_class(fields[2], info.consonant_class)) fail("unknown consonant class");
        break;
      case Category::Modifier:
        if (fields[2] != "-") fail("modifier class must be '-'");
        break;
    }
    if (fields.size() == 4) {
      if (fields[3] != "unconfirmed") fail("unknown flag");
      info.unconfirmed = true;
    }
    std::string symbol(fields[0]);
    if (symbol.empty() || symbol.size() > 2) fail("symbol must be 1-2 characters");
    if (!inv.symbols_.emplace(symbol, info).second) fail("duplicate symbol");
    inv.max_symbol_length_ = std::max(inv.max_symbol_length_, symbol.size());
  }
  if (!have_version) throw TableFormatError("inventory table: missing 'version N' line");
  if (inv.symbols_.empty()) throw TableFormatError("inventory table: no symbols");
  return inv;
}

Inventory Inventory::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw TableFormatError("cannot open inventory table: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

const SymbolInfo* Inventory::find(std::string_view symbol) const {
  auto it = symbols_.find(symbol);
  return it == symbols_.end() ? nullptr : &it->second;
}

const SymbolInfo& Inventory::info(std::string_view symbol) const {
  const SymbolInfo* found = find(symbol);
  if (!found) throw UnknownSymbolError(symbol, 0);
  return *found;
}

std::string WxWord::wx() const {
  std::string out;
  for (const Phoneme& p : phonemes) out += p.symbol;
  return out;
}

WxWord tokenize_wx(std::string_view wx_text, const Inventory& inventory) {
  WxWord word;
  word.source = std::string(wx_text);
  word.phonemes.reserve(wx_text.size());
  const std::size_t max_len = inventory.max_symbol_length();
  std::size_t i = 0;
  while (i < wx_text.size()) {
    const SymbolInfo* info = nullptr;
    std::size_t len = std::min(max_len, wx_text.size() - i);
    for (; len >= 1; --len) {
      info = inventory.find(wx_text.substr(i, len));
      if (info) break;
    }
    if (!info) throw UnknownSymbolError(wx_text, i);
    word.phonemes.push_back(Phoneme{std::string(wx_text.substr(i, len)), info->category});
    i += len;
  }
  return word;
}

}  // namespace telsyl::wx
