# Copyright 2026 The telsyl Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Telugu corpus analysis: WX transliteration, rule-based syllabification,
syllable statistics, and training-word selection."""

from telsyl._core import (
    DanglingSignError,
    EmptyCorpusError,
    EmptyTargetError,
    NoVowelError,
    TableFormatError,
    UnknownSymbolError,
    UnrenderableError,
    __version__,
    classify,
    count_words_by_index,
    extract_words,
    frequency_buckets,
    hyphenate,
    label,
    phoneme_distribution,
    select_training_words,
    syllabify,
    syllable_frequency,
    syllable_index,
    telugu_to_wx,
    tokenize,
    wx_to_telugu,
)

__all__ = [
    "DanglingSignError",
    "EmptyCorpusError",
    "EmptyTargetError",
    "NoVowelError",
    "TableFormatError",
    "UnknownSymbolError",
    "UnrenderableError",
    "__version__",
    "classify",
    "count_words_by_index",
    "extract_words",
    "frequency_buckets",
    "hyphenate",
    "label",
    "phoneme_distribution",
    "select_training_words",
    "syllabify",
    "syllable_frequency",
    "syllable_index",
    "telugu_to_wx",
    "tokenize",
    "wx_to_telugu",
]
