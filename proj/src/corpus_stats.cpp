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

#include "telsyl/corpus_stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "telsyl/syllabifier.hpp"
#include "telsyl/utf8.hpp"

namespace telsyl::corpus {

namespace {

struct CodepointRange {
  char32_t lo;
  char32_t hi;
};

#include "punct_ranges.inc"

bool is_punct_or_symbol(char32_t cp) {
  std::size_t lo = 0, hi = std::size(kPunctSymbolRanges);
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (cp < kPunctSymbolRanges[mid].lo) {
      hi = mid;
    } else if (cp > kPunctSymbolRanges[mid].hi) {
      lo = mid + 1;
    } else {
      return true;
    }
  }
  return false;
}

bool is_strippable(char32_t cp) {
  return is_punct_or_symbol(cp) || (cp >= U'0' && cp <= U'9');
}

double percent(std::uint64_t part, std::uint64_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string_view to_string(CountingMode mode) {
  return mode == CountingMode::Types ? "types" : "tokens";
}

void Corpus::merge(const Corpus& other) {
  for (const auto& [word, count] : other.word_types) word_types[word] += count;
  total_tokens += other.total_tokens;
  utf8_replacements += other.utf8_replacements;
}

Corpus extract_words(std::string_view text) {
  Corpus corpus;
  const std::u32string cps = utf8::decode_all(text, &corpus.utf8_replacements);

  const auto add = [&corpus](std::u32string_view token) {
    // strip punctuation, symbols, and digits at the edges only
    std::size_t b = 0, e = token.size();
    while (b < e && is_strippable(token[b])) ++b;
    while (e > b && is_strippable(token[e - 1])) --e;
    if (b == e) return;
    ++corpus.word_types[utf8::encode(token.substr(b, e - b))];
    ++corpus.total_tokens;
  };

  std::size_t start = 0;
  for (std::size_t i = 0; i <= cps.size(); ++i) {
    // whitespace delimits tokens; internal hyphens split words
    const bool boundary = i == cps.size() || utf8::is_space(cps[i]) || cps[i] == U'-';
    if (!boundary) continue;
    if (i > start) add(std::u32string_view(cps).substr(start, i - start));
    start = i + 1;
  }
  return corpus;
}

Corpus extract_words(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return extract_words(buf.str());
}

void ScanReport::add_no_vowel(std::string_view word) {
  ++no_vowel;
  if (no_vowel_words.size() < kMaxSamples) no_vowel_words.emplace_back(word);
}

void ScanReport::add_unparseable(std::string_view word) {
  ++unparseable;
  if (unparseable_words.size() < kMaxSamples) unparseable_words.emplace_back(word);
}

EmptyCorpusError::EmptyCorpusError() : std::runtime_error("EmptyCorpus: no words to analyze") {}
EmptyCorpusError::EmptyCorpusError(const std::string& what)
    : std::runtime_error("EmptyCorpus: " + what) {}

void for_each_wx_type(const Corpus& corpus, bool require_vowel, ScanReport* skips,
                      const std::function<void(const wx::WxWord&, std::uint64_t)>& fn,
                      const translit::MappingTable& table, const wx::Inventory& inventory) {
  for (const auto& [word, tokens] : corpus.word_types) {
    wx::WxWord wx_word;
    try {
      wx_word = translit::to_wx_word(word, table, inventory);
    } catch (const translit::DanglingSignError&) {
      if (skips) skips->add_unparseable(word);
      continue;
    } catch (const wx::UnknownSymbolError&) {
      if (skips) skips->add_unparseable(word);
      continue;
    }
    if (require_vowel && !syll::has_vowel(wx_word)) {
      if (skips) skips->add_no_vowel(word);
      continue;
    }
    fn(wx_word, tokens);
  }
}

DistributionReport phoneme_distribution(const Corpus& corpus, CountingMode mode,
                                        ScanReport* skips,
                                        const translit::MappingTable& table,
                                        const wx::Inventory& inventory) {
  if (corpus.empty()) throw EmptyCorpusError();

  DistributionReport report;
  // every category and class appears in the report, zero or not
  for (auto cat : {wx::Category::Vowel, wx::Category::Modifier, wx::Category::Consonant})
    report.category_counts[cat] = 0;
  for (auto cls : {wx::VowelClass::ClosedFront, wx::VowelClass::HalfClosedFront,
                   wx::VowelClass::ClosedBack, wx::VowelClass::HalfClosedBack,
                   wx::VowelClass::Open, wx::VowelClass::Other})
    report.vowel_class_counts[cls] = 0;
  for (auto cls : {wx::ConsonantClass::Bilabial, wx::ConsonantClass::DentalAlveolar,
                   wx::ConsonantClass::Retroflex, wx::ConsonantClass::Velar,
                   wx::ConsonantClass::Glottal, wx::ConsonantClass::Other})
    report.consonant_class_counts[cls] = 0;

  std::uint64_t vowel_total = 0, consonant_total = 0;
  for_each_wx_type(
      corpus, /*require_vowel=*/false, skips,
      [&](const wx::WxWord& wx_word, std::uint64_t tokens) {
        const std::uint64_t weight = mode == CountingMode::Tokens ? tokens : 1;
        for (const wx::Phoneme& p : wx_word.phonemes) {
          report.total_phonemes += weight;
          report.category_counts[p.category] += weight;
          const wx::SymbolInfo& info = inventory.info(p.symbol);
          switch (p.category) {
            case wx::Category::Vowel:
              vowel_total += weight;
              report.vowel_class_counts[info.vowel_class] += weight;
              break;
            case wx::Category::Consonant:
              consonant_total += weight;
              report.consonant_class_counts[info.consonant_class] += weight;
              break;
            case wx::Category::Modifier:
              break;
          }
        }
      },
      table, inventory);
  if (report.total_phonemes == 0) throw EmptyCorpusError("no analyzable words");

  for (const auto& [cat, n] : report.category_counts)
    report.phoneme_shares[cat] = percent(n, report.total_phonemes);
  for (const auto& [cls, n] : report.vowel_class_counts)
    report.vowel_class_shares[cls] = percent(n, vowel_total);
  for (const auto& [cls, n] : report.consonant_class_counts)
    report.consonant_class_shares[cls] = percent(n, consonant_total);
  return report;
}

std::uint64_t SyllableFrequencyTable::total_occurrences() const {
  std::uint64_t total = 0;
  for (const auto& [syllable, n] : counts) total += n;
  return total;
}

std::uint64_t SyllableFrequencyTable::count(std::string_view syllable) const {
  auto it = counts.find(syllable);
  return it == counts.end() ? 0 : it->second;
}

void SyllableFrequencyTable::merge(const SyllableFrequencyTable& other) {
  for (const auto& [syllable, n] : other.counts) counts[syllable] += n;
}

SyllableFrequencyTable syllable_frequency(const Corpus& corpus, CountingMode mode,
                                          ScanReport* skips,
                                          const translit::MappingTable& table,
                                          const wx::Inventory& inventory) {
  if (corpus.empty()) throw EmptyCorpusError();

  SyllableFrequencyTable freq;
  for_each_wx_type(
      corpus, /*require_vowel=*/true, skips,
      [&](const wx::WxWord& wx_word, std::uint64_t tokens) {
        const std::uint64_t weight = mode == CountingMode::Tokens ? tokens : 1;
        for (const syll::Syllable& s : syll::syllabify(wx_word)) freq.counts[s.text] += weight;
      },
      table, inventory);
  return freq;
}

std::string Bucket::label() const {
  std::string out = "[" + std::to_string(lo) + ",";
  out += hi == 0 ? "inf" : std::to_string(hi);
  out += ")";
  return out;
}

std::vector<Bucket> frequency_buckets(const SyllableFrequencyTable& table,
                                      const std::vector<std::uint64_t>& edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i] < 1 || (i > 0 && edges[i] <= edges[i - 1]))
      throw std::invalid_argument("bucket edges must be strictly ascending and >= 1");
  }

  std::vector<Bucket> buckets;
  buckets.reserve(edges.size() + 1);
  std::uint64_t lo = 1;
  for (std::uint64_t edge : edges) {
    buckets.push_back(Bucket{lo, edge, 0});
    lo = edge;
  }
  buckets.push_back(Bucket{lo, 0, 0});

  for (const auto& [syllable, n] : table.counts) {
    const auto it = std::upper_bound(edges.begin(), edges.end(), n);
    buckets[static_cast<std::size_t>(it - edges.begin())].count += 1;
  }
  return buckets;
}

std::string frequency_csv(const SyllableFrequencyTable& table) {
  std::vector<std::pair<std::string_view, std::uint64_t>> rows;
  rows.reserve(table.counts.size());
  for (const auto& [syllable, n] : table.counts) rows.emplace_back(syllable, n);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  std::string out = "syllable,count\n";
  for (const auto& [syllable, n] : rows) {
    out += csv_field(syllable);
    out += ',';
    out += std::to_string(n);
    out += '\n';
  }
  return out;
}

SyllableFrequencyTable frequency_from_csv(std::string_view csv) {
  SyllableFrequencyTable table;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < csv.size()) {
    std::size_t eol = csv.find('\n', pos);
    std::string_view line = csv.substr(pos, eol == std::string_view::npos ? csv.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? csv.size() : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line_no == 1 && line == "syllable,count") continue;
    const std::size_t comma = line.rfind(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("frequency CSV line " + std::to_string(line_no) + ": expected 'syllable,count'");
    std::string_view key = line.substr(0, comma);
    if (key.size() >= 2 && key.front() == '"' && key.back() == '"') key = key.substr(1, key.size() - 2);
    std::uint64_t n = 0;
    for (char c : line.substr(comma + 1)) {
      if (c < '0' || c > '9')
        throw std::invalid_argument("frequency CSV line " + std::to_string(line_no) + ": bad count");
      n = n * 10 + static_cast<std::uint64_t>(c - '0');
    }
    table.counts[std::string(key)] += n;
  }
  return table;
}

std::string buckets_csv(const std::vector<Bucket>& buckets) {
  std::string out = "range,distinct_syllables\n";
  for (const Bucket& b : buckets) {
    out += csv_field(b.label());
    out += ',';
    out += std::to_string(b.count);
    out += '\n';
  }
  return out;
}

namespace {

std::string format2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

template <typename Key>
std::string share_csv(const std::map<Key, double>& shares) {
  std::string out = "label,value\n";
  for (const auto& [key, share] : shares) {
    out += csv_field(to_string(key));
    out += ',';
    out += format2(share);
    out += '\n';
  }
  return out;
}

}  // namespace

std::string phoneme_share_csv(const DistributionReport& report) {
  return share_csv(report.phoneme_shares);
}

std::string vowel_class_share_csv(const DistributionReport& report) {
  return share_csv(report.vowel_class_shares);
}

std::string consonant_class_share_csv(const DistributionReport& report) {
  return share_csv(report.consonant_class_shares);
}

std::string report_json(const Corpus& corpus, CountingMode mode,
                        const DistributionReport& distribution,
                        const SyllableFrequencyTable& table,
                        const std::vector<Bucket>& buckets,
                        const ScanReport& skips) {
  using json = nlohmann::ordered_json;

  const auto shares_of = [](const auto& counts, const auto& shares) {
    json obj = json::object();
    json counts_obj = json::object();
    for (const auto& [key, share] : shares) obj[std::string(to_string(key))] = round2(share);
    for (const auto& [key, n] : counts) counts_obj[std::string(to_string(key))] = n;
    return json::object({{"shares", obj}, {"counts", counts_obj}});
  };

  json doc = json::object();
  doc["counting_mode"] = std::string(to_string(mode));
  doc["corpus"] = {
      {"types", corpus.total_types()},
      {"tokens", corpus.total_tokens},
      {"utf8_replacements", corpus.utf8_replacements},
  };
  doc["phonemes"] = shares_of(distribution.category_counts, distribution.phoneme_shares);
  doc["phonemes"]["total"] = distribution.total_phonemes;
  doc["vowel_classes"] = shares_of(distribution.vowel_class_counts, distribution.vowel_class_shares);
  doc["consonant_classes"] =
      shares_of(distribution.consonant_class_counts, distribution.consonant_class_shares);

  json bucket_rows = json::array();
  for (const Bucket& b : buckets)
    bucket_rows.push_back(json::object({{"range", b.label()}, {"count", b.count}}));
  doc["syllables"] = {
      {"total_distinct", table.total_distinct()},
      {"total_occurrences", table.total_occurrences()},
      {"buckets", bucket_rows},
  };
  doc["skipped"] = {
      {"no_vowel", skips.no_vowel},
      {"unparseable", skips.unparseable},
  };
  return doc.dump(2) + "\n";
}

}  // namespace telsyl::corpus
