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

#ifndef NEWSPRINT_EVAL_CER_HPP_
#define NEWSPRINT_EVAL_CER_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace newsprint::eval {

// Lower-cases (ASCII and Latin-1), collapses every whitespace run including
// line breaks to one space, and trims. Punctuation is kept.
std::string normalize_text(std::string_view s);

struct EditCounts {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t correct = 0;

  std::size_t errors() const { return substitutions + deletions + insertions; }
  std::size_t reference_length() const {
    return substitutions + deletions + correct;
  }
  bool operator==(const EditCounts&) const = default;
};

struct CerResult {
  EditCounts counts;
  double cer = 0.0;
};

// Empty normalised reference with a non-empty hypothesis.
class DegenerateReference : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Unit-cost Levenshtein alignment over code points, no normalisation. Among
// minimal alignments, the one preferring match/substitution, then deletion,
// then insertion at each cell is reported.
EditCounts align(std::u32string_view reference, std::u32string_view hypothesis);

// (S + D + I) / (S + D + C) on normalised texts. Two empty texts give 0.
CerResult cer(std::string_view reference, std::string_view hypothesis);

}  // namespace newsprint::eval

#endif  // NEWSPRINT_EVAL_CER_HPP_
