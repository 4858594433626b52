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

#include "newsprint/eval/testset.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <stdexcept>

#include "../util/jsonl.hpp"

namespace newsprint::eval {

std::vector<TestItem> load_test_set(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) {
    throw std::runtime_error("test set directory not found: " + dir.string());
  }
  std::vector<TestItem> items;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const auto& p = entry.path();
    if (p.extension() == ".txt") {
      auto png = p;
      png.replace_extension(".png");
      if (!fs::exists(png)) {
        spdlog::warn("{}: no matching image, skipped", p.string());
        continue;
      }
      items.push_back({p.stem().string(), p, png, internal::read_file(p)});
    } else if (p.extension() == ".png") {
      auto txt = p;
      txt.replace_extension(".txt");
      if (!fs::exists(txt)) {
        spdlog::warn("{}: no matching transcript, skipped", p.string());
      }
    }
  }
  std::sort(items.begin(), items.end(),
            [](const TestItem& a, const TestItem& b) { return a.id < b.id; });
  return items;
}

}  // namespace newsprint::eval
