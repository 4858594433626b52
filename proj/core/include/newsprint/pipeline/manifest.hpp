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

#ifndef NEWSPRINT_PIPELINE_MANIFEST_HPP_
#define NEWSPRINT_PIPELINE_MANIFEST_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace newsprint::pipeline {

struct RunManifest {
  std::string run_id;
  std::string config_hash;
  // page_id -> stage -> completion marker.
  std::map<std::string, std::map<std::string, std::string>> markers;
  // page_id -> "stage: message" for pages that did not complete.
  std::map<std::string, std::string> failures;
  std::size_t pages = 0;
  std::size_t boxes = 0;
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
  double cost = 0.0;

  std::int64_t total_tokens() const { return prompt_tokens + completion_tokens; }
};

// Marker recorded when `stage` finishes for inputs hashing to input_hash
// under the given configuration.
std::string stage_marker(std::string_view config_hash, std::string_view stage,
                         std::string_view input_hash);

// A missing file yields an empty manifest.
RunManifest load_manifest(const std::filesystem::path& path);
void save_manifest(const std::filesystem::path& path, const RunManifest& m);

}  // namespace newsprint::pipeline

#endif  // NEWSPRINT_PIPELINE_MANIFEST_HPP_
