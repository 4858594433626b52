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

#ifndef NEWSPRINT_PIPELINE_RUN_HPP_
#define NEWSPRINT_PIPELINE_RUN_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "newsprint/layout/box.hpp"
#include "newsprint/ocr/backend.hpp"
#include "newsprint/pipeline/config.hpp"
#include "newsprint/pipeline/labels.hpp"
#include "newsprint/pipeline/manifest.hpp"

namespace newsprint::pipeline {

// Per-page stages in execution order. Each writes
// <work_dir>/<stage>/<page_id>.<ext> from the previous stage's file.
inline constexpr std::array<std::string_view, 5> kStages = {
    "convert", "postprocess", "plan", "ocr", "text"};

struct RunOptions {
  std::optional<int> workers;
  std::optional<std::uint64_t> seed;
  // Report what would execute without writing anything.
  bool dry_run = false;
  // Replaces the configured backend (tests).
  std::shared_ptr<ocr::Backend> backend;
};

struct RunResult {
  RunManifest manifest;
  // Pages each stage executed for (or would execute for, in a dry run).
  std::map<std::string, std::size_t> executed;
  std::size_t ocr_errors = 0;
  std::optional<LabelReport> labels;
  std::filesystem::path dataset;
  std::filesystem::path articles;
  std::filesystem::path ocr_records;

  bool ok() const { return manifest.failures.empty(); }
};

// Builds the configured OCR backend. Throws std::invalid_argument when it
// cannot be constructed.
std::shared_ptr<ocr::Backend> make_backend(const ocr::BackendConfig& cfg);

// Scales a layout detected on a width x height raster onto a
// new_width x new_height one, rounding edges to the nearest pixel.
layout::PageLayout scale_layout(layout::PageLayout layout, int new_width,
                                int new_height);

// Runs every stage for every page of the detections file, skipping stages
// whose completion marker matches, then writes dataset.jsonl, articles.jsonl
// and ocr.jsonl to the output directory. Page failures are recorded in the
// manifest; AuthError and configuration errors propagate.
RunResult run_pipeline(const PipelineConfig& cfg, const RunOptions& opts = {});

std::string failure_summary(const RunResult& result);

}  // namespace newsprint::pipeline

#endif  // NEWSPRINT_PIPELINE_RUN_HPP_
