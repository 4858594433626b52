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

#ifndef NEWSPRINT_ANALYSIS_READABILITY_HPP_
#define NEWSPRINT_ANALYSIS_READABILITY_HPP_

#include <cstddef>
#include <string_view>

namespace newsprint::analysis {

struct TextCounts {
  std::size_t sentences = 0;
  std::size_t words = 0;
  std::size_t syllables = 0;
};

// Vowel groups (a, e, i, o, u, y) in the letters of `word`, less a trailing
// silent e (not after consonant + l), never below 1.
std::size_t count_syllables(std::string_view word);

// Words are whitespace-separated tokens containing a letter. Sentences are
// the stretches between runs of . ! ? that contain a word.
TextCounts count_text(std::string_view text);

// 206.835 - 1.015 (words / sentences) - 84.6 (syllables / words).
// Throws std::invalid_argument when there are no words.
double flesch_reading_ease(const TextCounts& counts);
double flesch_reading_ease(std::string_view text);

}  // namespace newsprint::analysis

#endif  // NEWSPRINT_ANALYSIS_READABILITY_HPP_
