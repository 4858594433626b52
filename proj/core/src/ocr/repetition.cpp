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

#include "newsprint/ocr/repetition.hpp"

#include "newsprint/util/strings.hpp"

namespace newsprint::ocr {

// A run of k copies of a period-p unit starting at i is exactly a stretch
// where s[j] == s[j + p] for (k - 1) * p consecutive j. One linear scan per
// period finds every such stretch.
std::optional<RepetitionHit> find_repetition(std::string_view text,
                                             const RepetitionConfig& cfg) {
  if (cfg.min_unit == 0 || cfg.min_repeats < 2) return std::nullopt;
  const std::u32string s = utf8_decode(text);
  const std::size_t n = s.size();
  std::optional<RepetitionHit> best;
  for (std::size_t p = cfg.min_unit; p * cfg.min_repeats <= n; ++p) {
    const std::size_t need = (cfg.min_repeats - 1) * p;
    std::size_t run = 0;
    for (std::size_t j = 0; j + p < n; ++j) {
      run = s[j] == s[j + p] ? run + 1 : 0;
      if (run == need) {
        const std::size_t start = j + 1 - run;
        if (!best || start < best->start) {
          // Extend to the full stretch for reporting.
          std::size_t end = j + 1;
          while (end + p < n && s[end] == s[end + p]) ++end;
          best = RepetitionHit{start, p, end - start + p};
        }
        break;
      }
    }
  }
  return best;
}

}  // namespace newsprint::ocr
