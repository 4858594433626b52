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

#ifndef NEWSPRINT_TOOLS_COMMANDS_HPP_
#define NEWSPRINT_TOOLS_COMMANDS_HPP_

#include <CLI11.hpp>

#include <filesystem>
#include <string>

namespace newsprint::cli {

// Each register_* adds a subcommand whose callback stores its exit code in
// `status`.
void register_convert(CLI::App& app, int& status);
void register_postprocess(CLI::App& app, int& status);
void register_score(CLI::App& app, int& status);
void register_plan(CLI::App& app, int& status);
void register_ocr(CLI::App& app, int& status);
void register_assemble(CLI::App& app, int& status);
void register_evaluate(CLI::App& app, int& status);
void register_analyze(CLI::App& app, int& status);
void register_run(CLI::App& app, int& status);

// Writes to `path`, or stdout when path is empty or "-".
void emit(const std::filesystem::path& path, const std::string& contents);

}  // namespace newsprint::cli

#endif  // NEWSPRINT_TOOLS_COMMANDS_HPP_
