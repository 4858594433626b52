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

#include "newsprint/layout/layout_io.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "../util/jsonl.hpp"

namespace newsprint::layout {

using nlohmann::json;

namespace {

int get_int(const json& j, const char* key) {
  if (!j.contains(key)) throw FormatError(std::string("missing field ") + key);
  const auto& v = j.at(key);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_number()) return static_cast<int>(std::lround(v.get<double>()));
  throw FormatError(std::string("field ") + key + " is not a number");
}

BoundingBox parse_box(const json& j, const std::string& page_id,
                      std::size_t index) {
  BoundingBox b;
  b.x1 = get_int(j, "x1");
  b.y1 = get_int(j, "y1");
  b.x2 = get_int(j, "x2");
  b.y2 = get_int(j, "y2");
  if (!j.contains("class") || !j.at("class").is_string()) {
    throw FormatError("box without string field class");
  }
  b.cls = BoxClass::parse(j.at("class").get<std::string>());
  b.confidence = j.value("confidence", 0.0);
  if (j.contains("id") && j.at("id").is_string()) {
    b.id = j.at("id").get<std::string>();
  } else {
    b.id = page_id + "_d" + std::to_string(index);
  }
  if (j.contains("column") && j.at("column").is_number_integer()) {
    b.column = j.at("column").get<int>();
  }
  if (j.contains("reading_order") && j.at("reading_order").is_number_integer()) {
    b.reading_order = j.at("reading_order").get<int>();
  }
  b.full_width = j.value("full_width", false);
  b.synthetic = j.value("synthetic", false);
  if (j.contains("tiles")) {
    for (const auto& t : j.at("tiles")) {
      b.tiles.push_back({get_int(t, "y_offset"), get_int(t, "height")});
    }
  }
  return b;
}

}  // namespace

PageLayout parse_layout(std::string_view json_line) {
  json j;
  try {
    j = json::parse(json_line);
  } catch (const json::parse_error& e) {
    throw FormatError(e.what());
  }
  if (!j.is_object()) throw FormatError("layout line is not an object");
  PageLayout layout;
  try {
    layout.page_id = j.at("page_id").get<std::string>();
    layout.image = j.value("image", std::string());
    layout.width = get_int(j, "width");
    layout.height = get_int(j, "height");
    if (layout.width <= 0 || layout.height <= 0) {
      throw FormatError("page dimensions must be positive");
    }
    if (j.contains("print_area")) {
      const auto& a = j.at("print_area");
      layout.print_area = {a.at(0).get<int>(), a.at(1).get<int>(),
                           a.at(2).get<int>(), a.at(3).get<int>()};
    }
    if (j.contains("columns")) {
      for (const auto& c : j.at("columns")) {
        layout.columns.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
      }
    }
    std::size_t index = 0;
    for (const auto& b : j.at("boxes")) {
      layout.boxes.push_back(parse_box(b, layout.page_id, index++));
    }
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
  return layout;
}

std::string serialize_layout(const PageLayout& layout) {
  json boxes = json::array();
  for (const auto& b : layout.boxes) {
    json jb = {{"id", b.id},
               {"x1", b.x1},
               {"y1", b.y1},
               {"x2", b.x2},
               {"y2", b.y2},
               {"class", b.cls.name()},
               {"confidence", b.confidence},
               {"column", b.column ? json(*b.column) : json(nullptr)},
               {"full_width", b.full_width},
               {"reading_order",
                b.reading_order ? json(*b.reading_order) : json(nullptr)},
               {"synthetic", b.synthetic}};
    if (!b.tiles.empty()) {
      json tiles = json::array();
      for (const auto& t : b.tiles) {
        tiles.push_back({{"y_offset", t.y_offset}, {"height", t.height}});
      }
      jb["tiles"] = std::move(tiles);
    }
    boxes.push_back(std::move(jb));
  }
  json columns = json::array();
  for (const auto& c : layout.columns) columns.push_back({c.x1, c.x2});
  const auto& a = layout.print_area;
  json j = {{"page_id", layout.page_id},
            {"image", layout.image},
            {"width", layout.width},
            {"height", layout.height},
            {"print_area", {a.x1, a.y1, a.x2, a.y2}},
            {"columns", std::move(columns)},
            {"boxes", std::move(boxes)}};
  return j.dump();
}

std::vector<PageLayout> read_layouts(const std::filesystem::path& path) {
  std::vector<PageLayout> out;
  internal::for_each_line(path, [&](const std::string& line, std::size_t n) {
    try {
      out.push_back(parse_layout(line));
    } catch (const FormatError& e) {
      throw FormatError(path.string() + ":" + std::to_string(n) + ": " +
                        e.what());
    }
  });
  return out;
}

void write_layouts(const std::filesystem::path& path,
                   const std::vector<PageLayout>& layouts) {
  std::string text;
  for (const auto& l : layouts) {
    text += serialize_layout(l);
    text += '\n';
  }
  internal::write_file_atomic(path, text);
}

}  // namespace newsprint::layout
