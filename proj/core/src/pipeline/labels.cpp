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

#include "newsprint/pipeline/labels.hpp"

#include <spdlog/spdlog.h>

#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <set>

#include "../util/jsonl.hpp"
#include "newsprint/analysis/topics.hpp"

namespace newsprint::pipeline {

LabelError::LabelError(const std::filesystem::path& path, std::size_t line,
                       const std::string& what)
    : std::runtime_error(path.string() + ":" + std::to_string(line) + ": " +
                         what),
      line_(line) {}

LabelReport ingest_labels(std::vector<DatasetRow>& rows,
                          const std::filesystem::path& labels_file) {
  std::map<std::string, std::vector<std::size_t>> by_id;
  for (std::size_t i = 0; i < rows.size(); ++i) by_id[rows[i].box_id].push_back(i);

  LabelReport report;
  std::set<std::string> seen;
  internal::for_each_line(labels_file, [&](const std::string& line,
                                           std::size_t n) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw LabelError(labels_file, n, std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("box_id") || !j["box_id"].is_string()) {
      throw LabelError(labels_file, n, "missing string box_id");
    }
    const auto id = j["box_id"].get<std::string>();
    if (!seen.insert(id).second) {
      throw LabelError(labels_file, n, "duplicate box_id " + id);
    }
    auto label = [&](const char* key) -> std::optional<std::string> {
      if (!j.contains(key) || j[key].is_null()) return std::nullopt;
      if (!j[key].is_string()) {
        throw LabelError(labels_file, n, std::string(key) + " must be a string");
      }
      return j[key].get<std::string>();
    };
    const auto type = label("text_type");
    const auto topic = label("topic");
    if (type && !analysis::is_text_type(*type)) {
      throw LabelError(labels_file, n, "invalid text_type '" + *type + "'");
    }
    if (topic && !analysis::topic_index(*topic)) {
      throw LabelError(labels_file, n, "invalid topic '" + *topic + "'");
    }
    const auto it = by_id.find(id);
    if (it == by_id.end()) {
      report.unknown_ids.push_back(id);
      return;
    }
    for (std::size_t i : it->second) {
      if (type) rows[i].text_type = type;
      if (topic) rows[i].topic = topic;
    }
  });

  for (const auto& r : rows) {
    if (r.text_type || r.topic) {
      ++report.labeled;
    } else {
      ++report.unlabeled;
    }
  }
  if (!report.unknown_ids.empty()) {
    spdlog::warn("{}: {} labels for unknown box ids", labels_file.string(),
                 report.unknown_ids.size());
  }
  if (report.unlabeled > 0) {
    spdlog::warn("{} of {} rows have no labels", report.unlabeled, rows.size());
  }
  return report;
}

}  // namespace newsprint::pipeline
