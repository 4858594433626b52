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

#include <iostream>

#include "commands.hpp"
#include "newsprint/pipeline/config.hpp"
#include "newsprint/pipeline/run.hpp"

namespace newsprint::cli {

void register_run(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand("run", "Run the whole pipeline from a config");
  struct Args {
    std::filesystem::path config;
    int workers = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    bool dry_run = false;
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("-c,--config", args->config, "YAML config")->required();
  cmd->add_option("-j,--workers", args->workers, "Override run.workers");
  auto* seed = cmd->add_option("--seed", args->seed, "Override run.seed");
  cmd->add_flag("--dry-run", args->dry_run,
                "Show which stages would run without writing anything");
  cmd->callback([args, seed, &status] {
    const auto cfg = pipeline::load_config(args->config);
    pipeline::RunOptions opts;
    if (args->workers > 0) opts.workers = args->workers;
    if (seed->count() > 0) opts.seed = args->seed;
    opts.dry_run = args->dry_run;
    const auto result = pipeline::run_pipeline(cfg, opts);

    for (const auto stage : pipeline::kStages) {
      const auto it = result.executed.find(std::string(stage));
      const std::size_t n = it == result.executed.end() ? 0 : it->second;
      std::cout << (args->dry_run ? "would run " : "ran ") << stage << ": " << n
                << " page(s)\n";
    }
    if (args->dry_run) {
      status = 0;
      return;
    }
    const auto& m = result.manifest;
    std::cout << "pages: " << m.pages << ", rows: " << m.boxes
              << ", tokens: " << m.prompt_tokens << " prompt + "
              << m.completion_tokens << " completion = " << m.total_tokens()
              << ", estimated cost: $" << m.cost << '\n';
    if (result.ocr_errors > 0) {
      spdlog::warn("{} boxes failed OCR and have empty text", result.ocr_errors);
    }
    if (!result.ok()) {
      std::cerr << pipeline::failure_summary(result) << '\n';
      status = 1;
      return;
    }
    std::cout << "dataset: " << result.dataset.string() << '\n';
    status = 0;
  });
}

}  // namespace newsprint::cli
