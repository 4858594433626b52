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

#ifndef NEWSPRINT_PIPELINE_DATASET_HPP_
#define NEWSPRINT_PIPELINE_DATASET_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "newsprint/text/post.hpp"

namespace newsprint::pipeline {

struct DatasetRow {
  std::string periodical;
  std::string issue_date;
  int page = 0;
  std::string page_id;
  std::string box_id;
  int reading_order = 0;
  std::string cls;
  std::optional<std::string> text_type;
  std::optional<std::string> topic;
  std::string text;

  bool operator==(const DatasetRow&) const = default;
};

// {"periodical", "issue_date", "page", "page_id", "box_id", "reading_order",
//  "class", "text_type", "topic", "text"}; unset labels are null.
std::string serialize_row(const DatasetRow& row);
DatasetRow parse_row(const std::string& line);

std::vector<DatasetRow> read_dataset(const std::filesystem::path& path);
void write_dataset(const std::filesystem::path& path,
                   const std::vector<DatasetRow>& rows);

// Row for one light-processed unit; paragraphs become lines of `text`.
DatasetRow make_row(const text::TextUnit& unit, const std::string& periodical,
                    const std::string& issue_date, int page);

}  // namespace newsprint::pipeline

#endif  // NEWSPRINT_PIPELINE_DATASET_HPP_
