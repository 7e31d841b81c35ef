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

#include "telsyl/utf8.hpp"

namespace telsyl::utf8 {

namespace {

inline bool is_cont(unsigned char b) { return (b & 0xC0) == 0x80; }

}  // namespace

char32_t decode(std::string_view s, std::size_t& i, std::uint64_t* replaced) {
  const auto bad = [&](std::size_t advance) {
    i += advance;
    if (replaced) ++(*replaced);
    return kReplacement;
  };

  const unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  if ((b0 & 0xE0) == 0xC0) {
    if (i + 1 >= s.size() || !is_cont(s[i + 1])) return bad(1);
    char32_t cp = (char32_t(b0 & 0x1F) << 6) | (s[i + 1] & 0x3F);
    if (cp < 0x80) return bad(1);  // overlong
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0) {
    if (i + 2 >= s.size() || !is_cont(s[i + 1]) || !is_cont(s[i + 2])) return bad(1);
    char32_t cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(s[i + 1] & 0x3F) << 6) |
                  (s[i + 2] & 0x3F);
    if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return bad(1);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0) {
    if (i + 3 >= s.size() || !is_cont(s[i + 1]) || !is_cont(s[i + 2]) ||
        !is_cont(s[i + 3])) {
      return bad(1);
    }
    char32_t cp = (char32_t(b0 & 0x07) << 18) | (char32_t(s[i + 1] & 0x3F) << 12) |
                  (char32_t(s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
    if (cp < 0x10000 || cp > 0x10FFFF) return bad(1);
    i += 4;
    return cp;
  }
  return bad(1);
}

std::u32string decode_all(std::string_view s, std::uint64_t* replaced) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) out.push_back(decode(s, i, replaced));
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U'\t':
    case U'\n':
    case U'\v':
    case U'\f':
    case U'\r':
    case U' ':
    case 0x85:    // NEL
    case 0xA0:    // NBSP
    case 0x1680:  // ogham space mark
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

}  // namespace telsyl::utf8
