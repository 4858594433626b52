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

#include <spdlog/spdlog.h>

#include <fstream>
#include <iostream>

#include "commands.hpp"

namespace newsprint::cli {

void emit(const std::filesystem::path& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    return;
  }
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

}  // namespace newsprint::cli

int main(int argc, char** argv) {
  CLI::App app{"Layout, OCR and dataset tools for digitised newspapers"};
  app.require_subcommand(1);
  app.add_flag_callback(
      "-v,--verbose", [] { spdlog::set_level(spdlog::level::debug); },
      "Debug logging");

  int status = 0;
  using namespace newsprint::cli;
  register_convert(app, status);
  register_postprocess(app, status);
  register_score(app, status);
  register_plan(app, status);
  register_ocr(app, status);
  register_assemble(app, status);
  register_evaluate(app, status);
  register_analyze(app, status);
  register_run(app, status);

  spdlog::set_pattern("%^%l%$: %v");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return status;
}
