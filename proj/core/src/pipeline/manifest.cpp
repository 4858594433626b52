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

#include "newsprint/pipeline/manifest.hpp"

#include <nlohmann/json.hpp>

#include "../util/jsonl.hpp"
#include "newsprint/util/hash.hpp"

namespace newsprint::pipeline {

std::string stage_marker(std::string_view config_hash, std::string_view stage,
                         std::string_view input_hash) {
  std::string key;
  key.append(config_hash).append("\n").append(stage).append("\n").append(
      input_hash);
  return sha256_hex(key);
}

RunManifest load_manifest(const std::filesystem::path& path) {
  RunManifest m;
  if (!std::filesystem::exists(path)) return m;
  try {
    const auto j = nlohmann::json::parse(internal::read_file(path));
    m.run_id = j.value("run_id", "");
    m.config_hash = j.value("config_hash", "");
    if (j.contains("markers")) {
      m.markers = j["markers"]
                      .get<std::map<std::string,
                                    std::map<std::string, std::string>>>();
    }
    if (j.contains("failures")) {
      m.failures = j["failures"].get<std::map<std::string, std::string>>();
    }
    const auto& c = j.value("counts", nlohmann::json::object());
    m.pages = c.value("pages", std::size_t{0});
    m.boxes = c.value("boxes", std::size_t{0});
    m.prompt_tokens = c.value("prompt_tokens", std::int64_t{0});
    m.completion_tokens = c.value("completion_tokens", std::int64_t{0});
    m.cost = c.value("cost", 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
  return m;
}

void save_manifest(const std::filesystem::path& path, const RunManifest& m) {
  nlohmann::ordered_json j;
  j["run_id"] = m.run_id;
  j["config_hash"] = m.config_hash;
  j["counts"] = {{"pages", m.pages},
                 {"boxes", m.boxes},
                 {"prompt_tokens", m.prompt_tokens},
                 {"completion_tokens", m.completion_tokens},
                 {"total_tokens", m.total_tokens()},
                 {"cost", m.cost}};
  j["markers"] = m.markers;
  j["failures"] = m.failures;
  internal::write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace newsprint::pipeline
