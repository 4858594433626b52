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

#ifndef NEWSPRINT_PIPELINE_LABELS_HPP_
#define NEWSPRINT_PIPELINE_LABELS_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "newsprint/pipeline/dataset.hpp"

namespace newsprint::pipeline {

struct LabelReport {
  std::size_t labeled = 0;
  std::size_t unlabeled = 0;
  // Label lines whose box_id matches no row, in file order.
  std::vector<std::string> unknown_ids;
};

// Thrown for malformed lines, out-of-set values and duplicate ids.
class LabelError : public std::runtime_error {
 public:
  LabelError(const std::filesystem::path& path, std::size_t line,
             const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Joins {"box_id", "text_type", "topic"} lines onto rows by box_id. Either
// label may be absent or null. Values must come from the closed text-type
// and topic sets. Unknown ids are reported; rows left without labels are
// counted and logged as a warning.
LabelReport ingest_labels(std::vector<DatasetRow>& rows,
                          const std::filesystem::path& labels_file);

}  // namespace newsprint::pipeline

#endif  // NEWSPRINT_PIPELINE_LABELS_HPP_
