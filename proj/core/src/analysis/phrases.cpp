/* Copyright 2026 The Newsprint Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "newsprint/analysis/phrases.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <regex>
#include <sstream>

#include "newsprint/util/strings.hpp"

namespace newsprint::analysis {
namespace {

std::u32string folded(std::string_view s) {
  std::u32string out = utf8_decode(s);
  for (char32_t& c : out) c = fold_lower(c);
  return out;
}

// Months since year 0, or nullopt for a malformed date.
std::optional<int> month_index(const std::string& date) {
  static const std::regex kDate(R"(^(\d{4})-(\d{2})-(\d{2})$)");
  std::smatch m;
  if (!std::regex_match(date, m, kDate)) return std::nullopt;
  const int year = std::stoi(m[1]);
  const int month = std::stoi(m[2]);
  const int day = std::stoi(m[3]);
  if (month < 1 || month > 12 || day < 1 || day > 31) return std::nullopt;
  return year * 12 + (month - 1);
}

std::string month_label(int index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d", index / 12, index % 12 + 1);
  return buf;
}

}  // namespace

PhraseSeries phrase_series(const std::vector<PhraseEntry>& entries,
                           const std::vector<std::string>& phrases) {
  PhraseSeries series;
  series.phrases = phrases;
  std::vector<std::u32string> needles;
  for (const auto& p : phrases) needles.push_back(folded(p));

  std::map<std::string, std::pair<int, int>> range;
  std::map<std::pair<std::string, int>, std::size_t> hits;
  std::size_t skipped = 0;
  for (const auto& e : entries) {
    const auto month = month_index(e.issue_date);
    if (!month) {
      ++skipped;
      continue;
    }
    auto [it, fresh] = range.try_emplace(e.periodical, *month, *month);
    if (!fresh) {
      it->second.first = std::min(it->second.first, *month);
      it->second.second = std::max(it->second.second, *month);
    }
    const auto hay = folded(e.text);
    const bool match = std::any_of(
        needles.begin(), needles.end(), [&](const std::u32string& n) {
          return !n.empty() && hay.find(n) != std::u32string::npos;
        });
    if (match) ++hits[{e.periodical, *month}];
  }
  if (skipped > 0) {
    spdlog::warn("phrase series: {} entries with unparseable dates skipped",
                 skipped);
  }
  for (const auto& [periodical, span] : range) {
    for (int m = span.first; m <= span.second; ++m) {
      const auto it = hits.find({periodical, m});
      series.counts[{periodical, month_label(m)}] =
          it == hits.end() ? 0 : it->second;
    }
  }
  return series;
}

std::string phrase_series_csv(const PhraseSeries& series) {
  std::ostringstream os;
  os << "periodical,month,count\n";
  for (const auto& [key, count] : series.counts) {
    os << key.first << ',' << key.second << ',' << count << '\n';
  }
  return os.str();
}

}  // namespace newsprint::analysis
