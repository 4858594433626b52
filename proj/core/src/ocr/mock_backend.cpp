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

#include "newsprint/ocr/mock_backend.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace newsprint::ocr {
namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

MockBackend::MockBackend(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!std::filesystem::is_directory(dir_)) {
    throw std::invalid_argument("mock response directory not found: " +
                                dir_.string());
  }
}

BackendResponse MockBackend::send(const BackendRequest& request) {
  std::string stem = request.box_id;
  if (request.pass > 0) stem += ".retry" + std::to_string(request.pass);
  stem += ".t" + std::to_string(request.tile_index);

  const auto json_path = dir_ / (stem + ".json");
  if (std::filesystem::exists(json_path)) {
    try {
      const auto j = nlohmann::json::parse(slurp(json_path));
      BackendResponse r;
      r.text = j.at("text").get<std::string>();
      r.prompt_tokens = j.value("prompt_tokens", std::int64_t{0});
      r.completion_tokens = j.value("completion_tokens", std::int64_t{0});
      r.truncated = j.value("finish_reason", "stop") == "length";
      return r;
    } catch (const nlohmann::json::exception& e) {
      throw TransportError(json_path.string() + ": " + e.what());
    }
  }
  const auto txt_path = dir_ / (stem + ".txt");
  if (std::filesystem::exists(txt_path)) {
    BackendResponse r;
    r.text = slurp(txt_path);
    r.prompt_tokens = static_cast<std::int64_t>(request.prompt.size() / 4 +
                                                request.image_png.size() / 64);
    r.completion_tokens = static_cast<std::int64_t>((r.text.size() + 3) / 4);
    return r;
  }
  throw TransportError("no mock response for " + stem);
}

}  // namespace newsprint::ocr
