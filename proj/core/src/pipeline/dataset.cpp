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

#include "newsprint/pipeline/dataset.hpp"

#include <nlohmann/json.hpp>

#include "../util/jsonl.hpp"
#include "newsprint/util/strings.hpp"

namespace newsprint::pipeline {

using ojson = nlohmann::ordered_json;

namespace {

ojson optional_string(const std::optional<std::string>& s) {
  return s ? ojson(*s) : ojson(nullptr);
}

std::optional<std::string> read_optional(const nlohmann::json& j,
                                         const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<std::string>();
}

}  // namespace

std::string serialize_row(const DatasetRow& row) {
  ojson j;
  j["periodical"] = row.periodical;
  j["issue_date"] = row.issue_date;
  j["page"] = row.page;
  j["page_id"] = row.page_id;
  j["box_id"] = row.box_id;
  j["reading_order"] = row.reading_order;
  j["class"] = row.cls;
  j["text_type"] = optional_string(row.text_type);
  j["topic"] = optional_string(row.topic);
  j["text"] = row.text;
  return j.dump();
}

DatasetRow parse_row(const std::string& line) {
  try {
    const auto j = nlohmann::json::parse(line);
    DatasetRow r;
    r.periodical = j.value("periodical", "");
    r.issue_date = j.value("issue_date", "");
    r.page = j.value("page", 0);
    r.page_id = j.at("page_id").get<std::string>();
    r.box_id = j.at("box_id").get<std::string>();
    r.reading_order = j.value("reading_order", 0);
    r.cls = j.value("class", "text");
    r.text_type = read_optional(j, "text_type");
    r.topic = read_optional(j, "topic");
    r.text = j.at("text").get<std::string>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("bad dataset row: ") + e.what());
  }
}

std::vector<DatasetRow> read_dataset(const std::filesystem::path& path) {
  std::vector<DatasetRow> rows;
  internal::for_each_line(path, [&](const std::string& line, std::size_t n) {
    try {
      rows.push_back(parse_row(line));
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(n) + ": " +
                               e.what());
    }
  });
  return rows;
}

void write_dataset(const std::filesystem::path& path,
                   const std::vector<DatasetRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += serialize_row(r);
    out += '\n';
  }
  internal::write_file_atomic(path, out);
}

DatasetRow make_row(const text::TextUnit& unit, const std::string& periodical,
                    const std::string& issue_date, int page) {
  DatasetRow r;
  r.periodical = periodical;
  r.issue_date = issue_date;
  r.page = page;
  r.page_id = unit.page_id;
  r.box_id = unit.box_id;
  r.reading_order = unit.reading_order;
  r.cls = std::string(text::unit_class_name(unit.cls));
  r.text = join(unit.paragraphs, "\n");
  return r;
}

}  // namespace newsprint::pipeline
