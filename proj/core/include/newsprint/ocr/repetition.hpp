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

#ifndef NEWSPRINT_OCR_REPETITION_HPP_
#define NEWSPRINT_OCR_REPETITION_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

namespace newsprint::ocr {

struct RepetitionConfig {
  // Shortest repeating unit, in code points. Shorter periods are ignored so
  // rules of dashes or dotted leaders do not trigger.
  std::size_t min_unit = 8;
  // Consecutive copies of the unit required.
  std::size_t min_repeats = 5;
};

struct RepetitionHit {
  std::size_t start = 0;   // code point offset
  std::size_t period = 0;  // unit length in code points
  std::size_t length = 0;  // code points covered by the repeated run
};

// Finds a substring made of at least min_repeats back-to-back copies of a
// unit of min_unit or more code points; returns the earliest such run with
// the smallest period.
std::optional<RepetitionHit> find_repetition(std::string_view text,
                                             const RepetitionConfig& cfg = {});

inline bool has_repetition(std::string_view text,
                           const RepetitionConfig& cfg = {}) {
  return find_repetition(text, cfg).has_value();
}

}  // namespace newsprint::ocr

#endif  // NEWSPRINT_OCR_REPETITION_HPP_
