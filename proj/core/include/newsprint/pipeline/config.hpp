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

#ifndef NEWSPRINT_PIPELINE_CONFIG_HPP_
#define NEWSPRINT_PIPELINE_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "newsprint/image/config.hpp"
#include "newsprint/layout/box.hpp"
#include "newsprint/ocr/backend.hpp"
#include "newsprint/ocr/repetition.hpp"
#include "newsprint/text/post.hpp"

namespace newsprint::pipeline {

enum class PostprocessMode { kNone, kSimple, kFill };

std::string_view mode_name(PostprocessMode m);
PostprocessMode parse_mode(std::string_view name);

struct PeriodicalOverride {
  std::optional<PostprocessMode> mode;
  std::optional<double> dpi;
};

struct PipelineConfig {
  // Relative paths below are resolved against this directory.
  std::filesystem::path base_dir;

  std::string run_id = "run";
  std::filesystem::path work_dir = "work";
  std::filesystem::path output_dir = "out";
  int workers = 1;
  std::uint64_t seed = 0;
  std::string page_id_pattern = R"(^(.+?)_(\d{4}-\d{2}-\d{2})_page_(\d+)$)";

  std::filesystem::path detections;
  // Where page images are looked up; empty means next to the detections.
  std::filesystem::path image_dir;
  std::filesystem::path labels;  // optional

  PostprocessMode mode = PostprocessMode::kSimple;
  layout::PostprocessConfig postprocess;
  image::ImagePrepConfig image;
  ocr::BackendConfig backend;
  ocr::RepetitionConfig repetition;
  double cost_per_million_tokens = 0.075;
  text::LightPostConfig text;
  std::map<std::string, PeriodicalOverride> periodicals;

  // Throws std::invalid_argument naming the offending key.
  void validate() const;

  std::filesystem::path resolve(const std::filesystem::path& p) const;

  PostprocessMode mode_for(const std::string& periodical) const;
  layout::PostprocessConfig postprocess_for(const std::string& periodical) const;
  image::ImagePrepConfig image_for(const std::string& periodical) const;

  // Canonical text of every setting that affects outputs; workers, run id
  // and output locations are excluded.
  std::string canonical() const;
  std::string hash() const;
};

// Throws std::invalid_argument (bad values) or std::runtime_error (bad
// YAML), both naming the key or position.
PipelineConfig parse_config(const std::string& yaml,
                            const std::filesystem::path& base_dir);
PipelineConfig load_config(const std::filesystem::path& path);

struct PageKey {
  std::string periodical;
  std::string issue_date;
  int page = 0;
  bool matched = false;
};

PageKey parse_page_id(const std::string& page_id, const std::string& pattern);

}  // namespace newsprint::pipeline

#endif  // NEWSPRINT_PIPELINE_CONFIG_HPP_
