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

#ifndef NEWSPRINT_EVAL_TESTSET_HPP_
#define NEWSPRINT_EVAL_TESTSET_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace newsprint::eval {

struct TestItem {
  std::string id;
  std::filesystem::path text_path;
  std::filesystem::path image_path;
  std::string reference;
};

// Reads a directory of <id>.txt ground truth files paired with <id>.png
// crops, sorted by id. Unpaired files are skipped with a warning. Throws if
// the directory does not exist.
std::vector<TestItem> load_test_set(const std::filesystem::path& dir);

}  // namespace newsprint::eval

#endif  // NEWSPRINT_EVAL_TESTSET_HPP_
