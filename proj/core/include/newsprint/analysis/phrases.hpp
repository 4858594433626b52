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

#ifndef NEWSPRINT_ANALYSIS_PHRASES_HPP_
#define NEWSPRINT_ANALYSIS_PHRASES_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace newsprint::analysis {

struct PhraseEntry {
  std::string periodical;
  std::string issue_date;  // YYYY-MM-DD
  std::string text;
};

struct PhraseSeries {
  std::vector<std::string> phrases;
  // (periodical, YYYY-MM) -> entries mentioning any phrase. Every month
  // between a periodical's first and last dated entry is present.
  std::map<std::pair<std::string, std::string>, std::size_t> counts;
};

// Case-insensitive substring match; an entry counts once however many
// phrases or mentions it holds. Entries with unparseable dates are skipped
// with a warning.
PhraseSeries phrase_series(const std::vector<PhraseEntry>& entries,
                           const std::vector<std::string>& phrases);

// periodical,month,count
std::string phrase_series_csv(const PhraseSeries& series);

}  // namespace newsprint::analysis

#endif  // NEWSPRINT_ANALYSIS_PHRASES_HPP_
