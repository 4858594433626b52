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

#ifndef NEWSPRINT_TEXT_POST_HPP_
#define NEWSPRINT_TEXT_POST_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "newsprint/ocr/transcribe.hpp"

namespace newsprint::text {

enum class UnitClass { kText, kTitle, kFigure, kTable };

std::string_view unit_class_name(UnitClass c);
// Accepts the four names above; throws std::invalid_argument otherwise.
UnitClass parse_unit_class(std::string_view name);

struct TextUnit {
  std::string page_id;
  std::string box_id;
  // Boxes whose text ended up in this unit; more than one after title
  // merging.
  std::vector<std::string> source_box_ids;
  UnitClass cls = UnitClass::kText;
  // One line each.
  std::vector<std::string> paragraphs;
  int reading_order = 0;
  // Position among the units split out of the same box.
  int sub_order = 0;

  bool operator==(const TextUnit&) const = default;
};

struct LightPostConfig {
  // Characters stripped from both ends of a transcript.
  std::string strip_chars = "`'\" \t\r\n\v\f";
  // Titles longer than this many characters are demoted to text.
  std::size_t max_title_length = 50;
};

// Splits text into paragraphs at blank lines; each paragraph's lines are
// trimmed and joined with a single space. Empty paragraphs are dropped.
std::vector<std::string> paragraphs_of(std::string_view text);

std::string strip_symbols(std::string_view text, std::string_view chars);

// First cleanup pass over one OCR record. Tables keep one paragraph per
// row; other classes are split with paragraphs_of. Throws
// std::invalid_argument for classes that never reach text processing.
TextUnit light_post(const ocr::OcrRecord& record,
                    const LightPostConfig& cfg = {});

// True iff s is unchanged by upper-casing, has at least five letters and at
// least two of A, E, I, O, U.
bool is_title(std::string_view s);

// Tests every paragraph of every text unit with is_title, splitting units
// around title paragraphs, then merges runs of adjacent titles (within a
// page) into a single title unit. Paragraph order and content are
// preserved.
std::vector<TextUnit> split_embedded_titles(const std::vector<TextUnit>& units);

}  // namespace newsprint::text

#endif  // NEWSPRINT_TEXT_POST_HPP_
