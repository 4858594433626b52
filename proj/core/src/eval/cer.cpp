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

#include "newsprint/eval/cer.hpp"

#include <vector>

#include "newsprint/util/strings.hpp"

namespace newsprint::eval {

std::string normalize_text(std::string_view s) {
  std::u32string out;
  bool pending_space = false;
  for (char32_t c : utf8_decode(s)) {
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(fold_lower(c));
  }
  return utf8_encode(out);
}

namespace {

struct Cell {
  std::size_t cost = 0;
  EditCounts counts;
};

}  // namespace

EditCounts align(std::u32string_view ref, std::u32string_view hyp) {
  // One row of cells over the hypothesis, each carrying the counts of the
  // chosen alignment so no traceback is needed.
  std::vector<Cell> row(hyp.size() + 1);
  for (std::size_t j = 1; j <= hyp.size(); ++j) {
    row[j].cost = j;
    row[j].counts.insertions = j;
  }
  for (std::size_t i = 1; i <= ref.size(); ++i) {
    Cell diag = row[0];
    row[0].cost = i;
    row[0].counts = EditCounts{0, i, 0, 0};
    for (std::size_t j = 1; j <= hyp.size(); ++j) {
      const Cell up = row[j];
      const bool same = ref[i - 1] == hyp[j - 1];
      Cell best = diag;
      best.cost += same ? 0 : 1;
      if (same) {
        ++best.counts.correct;
      } else {
        ++best.counts.substitutions;
      }
      if (up.cost + 1 < best.cost) {
        best = up;
        ++best.cost;
        ++best.counts.deletions;
      }
      if (row[j - 1].cost + 1 < best.cost) {
        best = row[j - 1];
        ++best.cost;
        ++best.counts.insertions;
      }
      diag = up;
      row[j] = best;
    }
  }
  return row[hyp.size()].counts;
}

CerResult cer(std::string_view reference, std::string_view hypothesis) {
  const auto ref = utf8_decode(normalize_text(reference));
  const auto hyp = utf8_decode(normalize_text(hypothesis));
  if (ref.empty() && !hyp.empty()) {
    throw DegenerateReference("empty reference with non-empty hypothesis");
  }
  CerResult r;
  r.counts = align(ref, hyp);
  const std::size_t denom = r.counts.reference_length();
  r.cer = denom == 0 ? 0.0
                     : static_cast<double>(r.counts.errors()) /
                           static_cast<double>(denom);
  return r;
}

}  // namespace newsprint::eval
