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

#include <cstdint>
#include <string>
#include <string_view>

namespace telsyl::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the codepoint starting at byte offset `i` and advances `i` past it.
// A malformed sequence yields U+FFFD, advances one byte, and bumps `replaced`
// when given.
char32_t decode(std::string_view s, std::size_t& i, std::uint64_t* replaced = nullptr);

std::u32string decode_all(std::string_view s, std::uint64_t* replaced = nullptr);

void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);

bool is_space(char32_t cp);

}  // namespace telsyl::utf8
