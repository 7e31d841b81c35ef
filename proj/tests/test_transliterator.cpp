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

#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "telsyl/utf8.hpp"
#include "test_util.hpp"

using namespace telsyl;

namespace {

std::string seq(std::initializer_list<char32_t> cps) {
  std::string out;
  for (char32_t cp : cps) utf8::append(out, cp);
  return out;
}

constexpr char32_t kKa = 0x0C15;        // bare consonant letter
constexpr char32_t kTta = 0x0C1F;
constexpr char32_t kAnusvara = 0x0C02;
constexpr char32_t kAaSign = 0x0C3E;
constexpr char32_t kIiSign = 0x0C40;
constexpr char32_t kEvSign = 0x0C46;
constexpr char32_t kVirama = 0x0C4D;

}  // namespace

TEST_CASE("kind_of: ranges checked in order") {
  CHECK(translit::kind_of(kKa) == translit::Kind::Consonant);
  CHECK(translit::kind_of(0x0C39) == translit::Kind::Consonant);
  CHECK(translit::kind_of(kAaSign) == translit::Kind::DependentVowelSign);
  CHECK(translit::kind_of(kVirama) == translit::Kind::Virama);
  CHECK(translit::kind_of(0x0C05) == translit::Kind::IndependentVowel);
  CHECK(translit::kind_of(kAnusvara) == translit::Kind::Modifier);
  // neighbors of the mapped ranges fall to Other and pass through
  CHECK(translit::kind_of(0x0C3A) == translit::Kind::Other);
  CHECK(translit::kind_of(0x0C3D) == translit::Kind::Other);
  CHECK(translit::kind_of(0x0C58) == translit::Kind::Other);
  CHECK(translit::kind_of(0x0C60) == translit::Kind::Other);
  CHECK(translit::kind_of(U'a') == translit::Kind::Other);
}

TEST_CASE("telugu_to_wx: empty input") { CHECK(translit::telugu_to_wx("") == ""); }

TEST_CASE("telugu_to_wx: consonant, sign, virama steps") {
  CHECK(translit::telugu_to_wx(seq({kKa})) == "ka");
  CHECK(translit::telugu_to_wx(seq({kKa, kAnusvara})) == "kaM");
  CHECK(translit::telugu_to_wx(seq({kKa, kAaSign})) == "kA");
  CHECK(translit::telugu_to_wx(seq({kKa, kVirama, kKa})) == "kka");
  CHECK(translit::telugu_to_wx(seq({0x0C05})) == "a");
  CHECK(translit::telugu_to_wx(seq({kKa, kIiSign, 0x0C03})) == "kIH");
}

TEST_CASE("telugu_to_wx: golden words") {
  // kaM-peV-nI-kaM-teV shaped word
  const std::string word1 =
      seq({kKa, kAnusvara, 0x0C2A, kEvSign, 0x0C28, kIiSign, kKa, kAnusvara, kTta, kEvSign});
  CHECK(translit::telugu_to_wx(word1) == "kaMpeVnIkaMteV");
}

TEST_CASE("telugu_to_wx: pass-through preserves non-Telugu bytes") {
  CHECK(translit::telugu_to_wx("abc 123 xyz") == "abc 123 xyz");
  const std::string mixed = "id=" + seq({kKa, kAnusvara}) + ", rest";
  CHECK(translit::telugu_to_wx(mixed) == "id=kaM, rest");
}

TEST_CASE("telugu_to_wx: split vowel sign composes before mapping") {
  CHECK(translit::telugu_to_wx(seq({kKa, 0x0C46, 0x0C56})) == "kE");
  CHECK(translit::telugu_to_wx(seq({kKa, 0x0C48})) == "kE");
}

TEST_CASE("telugu_to_wx: dangling signs and unassigned codepoints") {
  CHECK_THROWS_AS(translit::telugu_to_wx(seq({kAaSign})), translit::DanglingSignError);
  CHECK_THROWS_AS(translit::telugu_to_wx(seq({kVirama})), translit::DanglingSignError);
  // a sign after a completed vowel has no inherent 'a' to replace
  CHECK_THROWS_AS(translit::telugu_to_wx(seq({kKa, kAaSign, kAaSign})),
                  translit::DanglingSignError);
  CHECK_THROWS_AS(translit::telugu_to_wx(seq({0x0C05, kVirama})), translit::DanglingSignError);
  // word state never crosses a delimiter
  CHECK_THROWS_AS(translit::telugu_to_wx(seq({kKa, U' ', kAaSign})),
                  translit::DanglingSignError);
  // unassigned points inside mapped ranges: U+0C29, U+0C45, U+0C0D
  CHECK_THROWS_AS(translit::telugu_to_wx(seq({0x0C29})), translit::DanglingSignError);
  CHECK_THROWS_AS(translit::telugu_to_wx(seq({kKa, 0x0C45})), translit::DanglingSignError);
  CHECK_THROWS_AS(translit::telugu_to_wx(seq({0x0C0D})), translit::DanglingSignError);
  try {
    translit::telugu_to_wx(seq({kKa, kKa, kVirama, kVirama}));
    FAIL("expected DanglingSignError");
  } catch (const translit::DanglingSignError& e) {
    CHECK(e.position() == 9);  // byte offset of the second virama
  }
}

TEST_CASE("wx_word_to_telugu: inverse rendering") {
  CHECK(translit::wx_word_to_telugu("") == "");
  CHECK(translit::wx_word_to_telugu("ka") == seq({kKa}));
  CHECK(translit::wx_word_to_telugu("k") == seq({kKa, kVirama}));
  CHECK(translit::wx_word_to_telugu("kka") == seq({kKa, kVirama, kKa}));
  CHECK(translit::wx_word_to_telugu("kA") == seq({kKa, kAaSign}));
  CHECK(translit::wx_word_to_telugu("aka") == seq({0x0C05, kKa}));
  CHECK(translit::wx_word_to_telugu("kaM") == seq({kKa, kAnusvara}));
}

TEST_CASE("wx_word_to_telugu: unrenderable sequences") {
  CHECK_THROWS_AS(translit::wx_word_to_telugu("Ma"), translit::UnrenderableError);  // leading modifier
  CHECK_THROWS_AS(translit::wx_word_to_telugu("kL"), translit::UnrenderableError);  // no dependent sign
  CHECK_THROWS_AS(translit::wx_word_to_telugu("Qa"), translit::UnrenderableError);  // no independent form
  CHECK_THROWS_AS(translit::wx_word_to_telugu("k a"), wx::UnknownSymbolError);
}

TEST_CASE("wx_to_telugu: whitespace and line structure preserved") {
  const std::string wx = "ka  keV\nkaM\n";
  const std::string te = translit::wx_to_telugu(wx);
  CHECK(te == seq({kKa}) + "  " + seq({kKa, kEvSign}) + "\n" + seq({kKa, kAnusvara}) + "\n");
  CHECK(translit::telugu_to_wx(te) == wx);
}

TEST_CASE("round trip: table words") {
  for (const std::string wx : {"kaMpeVnIkaMteV", "KarcukaMteV", "lABAlaku"}) {
    CHECK(translit::telugu_to_wx(translit::wx_word_to_telugu(wx)) == wx);
  }
}

TEST_CASE("round trip: random renderable words") {
  std::mt19937 rng(21);
  for (int n = 0; n < 300; ++n) {
    const std::string wx = testutil::random_word(rng);
    const std::string te = translit::wx_word_to_telugu(wx);
    CHECK(translit::telugu_to_wx(te) == wx);
  }
}

TEST_CASE("determinism: identical input gives identical output") {
  std::mt19937 rng(22);
  const std::string wx = testutil::random_word(rng);
  const std::string te = translit::wx_word_to_telugu(wx);
  CHECK(translit::wx_word_to_telugu(wx) == te);
  CHECK(translit::telugu_to_wx(te) == translit::telugu_to_wx(te));
}

TEST_CASE("mapping table: consonant entries carry the inherent vowel, maps injective") {
  const auto& table = translit::MappingTable::builtin();
  const auto& inv = wx::Inventory::builtin();

  std::size_t consonants = 0;
  std::set<std::string> seen;
  for (char32_t cp = 0x0C15; cp <= 0x0C39; ++cp) {
    const std::string* wx = table.consonant(cp);
    if (!wx) continue;  // unassigned points
    ++consonants;
    REQUIRE(wx->size() >= 2);
    CHECK(wx->back() == 'a');
    const std::string bare = wx->substr(0, wx->size() - 1);
    CHECK(seen.insert(bare).second);  // injective
    CHECK(inv.info(bare).category == wx::Category::Consonant);
    CHECK(table.consonant_codepoint(bare) == cp);
  }
  CHECK(consonants == 35);

  std::set<std::string> signs;
  for (char32_t cp = 0x0C3E; cp <= 0x0C4C; ++cp) {
    const std::string* wx = table.dependent_vowel(cp);
    if (!wx) continue;
    CHECK(signs.insert(*wx).second);
    CHECK(inv.info(*wx).category == wx::Category::Vowel);
  }
  CHECK(signs.size() == 13);

  std::set<std::string> independents;
  for (char32_t cp = 0x0C05; cp <= 0x0C14; ++cp) {
    const std::string* wx = table.independent_vowel(cp);
    if (!wx) continue;
    CHECK(independents.insert(*wx).second);
    CHECK(inv.info(*wx).category == wx::Category::Vowel);
  }
  CHECK(independents.size() == 14);  // every vowel but Q and LY stands alone
}

TEST_CASE("contains_telugu") {
  CHECK(translit::contains_telugu(seq({kKa})));
  CHECK(translit::contains_telugu("abc" + seq({0x0C66})));  // Telugu digit
  CHECK_FALSE(translit::contains_telugu("kaMpeVnIkaMteV"));
  CHECK_FALSE(translit::contains_telugu(""));
}

TEST_CASE("arbitrary bytes never crash the pipeline") {
  std::mt19937 rng(4096);
  for (int n = 0; n < 500; ++n) {
    std::string bytes;
    const std::size_t len = rng() % 64;
    for (std::size_t i = 0; i < len; ++i) bytes += static_cast<char>(rng() & 0xFF);
    try {
      const std::string wx = translit::telugu_to_wx(bytes);
      // pass-through keeps non-Telugu byte content decodable
      (void)wx;
    } catch (const translit::DanglingSignError&) {
    }
    try {
      (void)translit::wx_to_telugu(bytes);
    } catch (const wx::UnknownSymbolError&) {
    } catch (const translit::UnrenderableError&) {
    }
  }
}

TEST_CASE("to_wx_word keeps the orthographic source") {
  const std::string te = seq({kKa, kAnusvara});
  const wx::WxWord word = translit::to_wx_word(te);
  CHECK(word.source == te);
  CHECK(word.wx() == "kaM");
  // identity on already-WX words
  const wx::WxWord word2 = translit::to_wx_word("kaM");
  CHECK(word2.source == "kaM");
  CHECK(word2.wx() == "kaM");
}
