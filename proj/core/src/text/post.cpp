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

#include "newsprint/text/post.hpp"

#include <stdexcept>

#include "newsprint/util/strings.hpp"

namespace newsprint::text {
namespace {

bool is_letter(char32_t c) {
  return (c >= U'A' && c <= U'Z') || (c >= U'a' && c <= U'z') ||
         (c >= 0xC0 && c <= 0xFF && c != 0xD7 && c != 0xF7);
}

// Characters that change under upper-casing (ASCII and Latin-1).
bool is_lower(char32_t c) {
  return (c >= U'a' && c <= U'z') || c == 0xB5 ||
         (c >= 0xDF && c <= 0xFF && c != 0xF7);
}

}  // namespace

std::string_view unit_class_name(UnitClass c) {
  switch (c) {
    case UnitClass::kText:
      return "text";
    case UnitClass::kTitle:
      return "title";
    case UnitClass::kFigure:
      return "figure";
    case UnitClass::kTable:
      return "table";
  }
  return "text";
}

UnitClass parse_unit_class(std::string_view name) {
  if (name == "text") return UnitClass::kText;
  if (name == "title") return UnitClass::kTitle;
  if (name == "figure") return UnitClass::kFigure;
  if (name == "table") return UnitClass::kTable;
  throw std::invalid_argument("not a text unit class: " + std::string(name));
}

std::vector<std::string> paragraphs_of(std::string_view text) {
  std::vector<std::string> paragraphs;
  std::vector<std::string> current;
  auto flush = [&] {
    if (!current.empty()) paragraphs.push_back(join(current, " "));
    current.clear();
  };
  for (const auto& line : split_lines(text)) {
    const auto t = trim(line);
    if (t.empty()) {
      flush();
    } else {
      current.emplace_back(t);
    }
  }
  flush();
  return paragraphs;
}

std::string strip_symbols(std::string_view text, std::string_view chars) {
  const auto b = text.find_first_not_of(chars);
  if (b == std::string_view::npos) return {};
  const auto e = text.find_last_not_of(chars);
  return std::string(text.substr(b, e - b + 1));
}

TextUnit light_post(const ocr::OcrRecord& record, const LightPostConfig& cfg) {
  TextUnit unit;
  unit.page_id = record.page_id;
  unit.box_id = record.box_id;
  unit.source_box_ids = {record.box_id};
  unit.cls = parse_unit_class(record.box_class);
  unit.reading_order = record.reading_order;
  const std::string body = strip_symbols(record.merged_text, cfg.strip_chars);
  if (unit.cls == UnitClass::kTitle &&
      utf8_length(body) > cfg.max_title_length) {
    unit.cls = UnitClass::kText;
  }
  if (unit.cls == UnitClass::kTable) {
    // Rows of a tab-separated table stay on their own lines. Tabs are kept
    // so empty edge cells survive.
    for (const auto& line : split_lines(body)) {
      auto row = strip_symbols(line, " \r\v\f");
      if (!trim(row).empty()) unit.paragraphs.push_back(std::move(row));
    }
  } else {
    unit.paragraphs = paragraphs_of(body);
  }
  return unit;
}

namespace {

template <typename Range>
bool title_test(const Range& code_points) {
  std::size_t letters = 0;
  std::size_t vowels = 0;
  for (char32_t c : code_points) {
    if (is_lower(c)) return false;
    if (is_letter(c)) ++letters;
    if (c == U'A' || c == U'E' || c == U'I' || c == U'O' || c == U'U') {
      ++vowels;
    }
  }
  return letters >= 5 && vowels >= 2;
}

}  // namespace

bool is_title(std::string_view s) {
  // Plain ASCII needs no decoding.
  bool ascii = true;
  for (char c : s) ascii = ascii && static_cast<unsigned char>(c) < 0x80;
  if (ascii) return title_test(s);
  return title_test(utf8_decode(s));
}

std::vector<TextUnit> split_embedded_titles(const std::vector<TextUnit>& units) {
  std::vector<TextUnit> pieces;
  for (const auto& unit : units) {
    if (unit.cls != UnitClass::kText) {
      pieces.push_back(unit);
      continue;
    }
    int sub = 0;
    auto start_piece = [&](UnitClass cls) {
      TextUnit p;
      p.page_id = unit.page_id;
      p.box_id = unit.box_id;
      p.source_box_ids = unit.source_box_ids;
      p.cls = cls;
      p.reading_order = unit.reading_order;
      p.sub_order = sub++;
      pieces.push_back(std::move(p));
    };
    bool open = false;
    for (const auto& para : unit.paragraphs) {
      const UnitClass cls = is_title(para) ? UnitClass::kTitle : UnitClass::kText;
      if (!open || pieces.back().cls != cls || cls == UnitClass::kTitle) {
        start_piece(cls);
        open = true;
      }
      pieces.back().paragraphs.push_back(para);
    }
    if (!open) start_piece(UnitClass::kText);
  }

  std::vector<TextUnit> out;
  for (auto& p : pieces) {
    if (p.cls == UnitClass::kTitle && !out.empty() &&
        out.back().cls == UnitClass::kTitle && out.back().page_id == p.page_id) {
      auto& title = out.back();
      title.paragraphs.insert(title.paragraphs.end(), p.paragraphs.begin(),
                              p.paragraphs.end());
      for (auto& id : p.source_box_ids) {
        if (title.source_box_ids.back() != id) title.source_box_ids.push_back(id);
      }
      continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace newsprint::text
