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

#include "newsprint/analysis/readability.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace newsprint::analysis {
namespace {

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_vowel(char c) {
  switch (c) {
    case 'a': case 'e': case 'i': case 'o': case 'u': case 'y':
      return true;
    default:
      return false;
  }
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

}  // namespace

std::size_t count_syllables(std::string_view word) {
  std::string letters;
  for (char c : word) {
    if (is_alpha(c)) letters += static_cast<char>(c | 0x20);
  }
  std::size_t groups = 0;
  bool in_group = false;
  for (char c : letters) {
    const bool v = is_vowel(c);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  const std::size_t n = letters.size();
  // Final e after a consonant is silent, except in consonant + "le"
  // ("people", "table").
  const bool consonant_le = n >= 3 && letters[n - 2] == 'l' && !is_vowel(letters[n - 3]);
  if (groups > 1 && n >= 2 && letters.back() == 'e' && !is_vowel(letters[n - 2]) &&
      !consonant_le) {
    --groups;
  }
  return std::max<std::size_t>(groups, 1);
}

TextCounts count_text(std::string_view text) {
  TextCounts c;
  bool sentence_has_word = false;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_ws(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_ws(text[j])) ++j;
    const std::string_view token = text.substr(i, j - i);
    if (std::any_of(token.begin(), token.end(), is_alpha)) {
      ++c.words;
      c.syllables += count_syllables(token);
    }
    for (char ch : token) {
      if (is_alpha(ch)) {
        sentence_has_word = true;
      } else if (is_terminator(ch) && sentence_has_word) {
        ++c.sentences;
        sentence_has_word = false;
      }
    }
    i = j;
  }
  if (sentence_has_word) ++c.sentences;
  return c;
}

double flesch_reading_ease(const TextCounts& counts) {
  if (counts.words == 0 || counts.sentences == 0) {
    throw std::invalid_argument("readability of text without words");
  }
  const double w = static_cast<double>(counts.words);
  return 206.835 - 1.015 * (w / static_cast<double>(counts.sentences)) -
         84.6 * (static_cast<double>(counts.syllables) / w);
}

double flesch_reading_ease(std::string_view text) {
  return flesch_reading_ease(count_text(text));
}

}  // namespace newsprint::analysis
