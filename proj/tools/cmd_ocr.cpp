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

#include <map>

#include "commands.hpp"
#include "newsprint/image/image.hpp"
#include "newsprint/image/tiles.hpp"
#include "newsprint/layout/layout_io.hpp"
#include "newsprint/ocr/rate_limiter.hpp"
#include "newsprint/ocr/record_io.hpp"
#include "newsprint/ocr/transcribe.hpp"
#include "newsprint/pipeline/config.hpp"
#include "newsprint/pipeline/dataset.hpp"
#include "newsprint/pipeline/run.hpp"
#include "newsprint/text/articles.hpp"

namespace newsprint::cli {
namespace fs = std::filesystem;

void register_ocr(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand(
      "ocr", "Transcribe every box of planned layouts through a backend");
  struct Args {
    fs::path input;
    fs::path output;
    fs::path image_dir;
    ocr::BackendConfig backend;
    ocr::RepetitionConfig repetition;
    std::string crop_ratio = "1.5";
    image::ImagePrepConfig image;
    int workers = 1;
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("-i,--input", args->input, "Layout JSONL")->required();
  cmd->add_option("-o,--output", args->output, "OCR record JSONL")->required();
  cmd->add_option("--image-dir", args->image_dir,
                  "Directory for relative image paths (default: input's)");
  cmd->add_option("--backend", args->backend.kind, "mock or http")
      ->capture_default_str()
      ->check(CLI::IsMember({"mock", "http"}));
  cmd->add_option("--mock-dir", args->backend.mock_dir,
                  "Canned responses for the mock backend");
  cmd->add_option("--endpoint", args->backend.endpoint,
                  "Chat-completions URL")->capture_default_str();
  cmd->add_option("--model", args->backend.model)->capture_default_str();
  cmd->add_option("--api-key-env", args->backend.api_key_env,
                  "Environment variable holding the API key")
      ->capture_default_str();
  cmd->add_option("--rpm", args->backend.requests_per_minute,
                  "Requests per minute")->capture_default_str();
  cmd->add_option("--max-in-flight", args->backend.max_in_flight)
      ->capture_default_str();
  cmd->add_option("--max-retries", args->backend.max_retries)
      ->capture_default_str();
  cmd->add_option("--timeout", args->backend.timeout_seconds, "Seconds")
      ->capture_default_str();
  cmd->add_option("--token-limit", args->backend.token_limit)
      ->capture_default_str();
  cmd->add_option("--crop-ratio", args->crop_ratio,
                  "For boxes without tiles; number or inf")
      ->capture_default_str();
  cmd->add_option("--overlap", args->image.overlap_fraction)
      ->capture_default_str();
  cmd->add_option("--bit-depth", args->image.bit_depth,
                  "Bit depth of the PNG sent per tile")->capture_default_str();
  cmd->add_flag("--deskew", args->image.deskew, "Deskew each tile");
  cmd->add_option("-j,--workers", args->workers)->capture_default_str();
  cmd->callback([args, &status] {
    args->image.crop_ratio = args->crop_ratio == "inf"
                                 ? image::kNoCrop
                                 : std::stod(args->crop_ratio);
    args->image.validate();
    auto backend = pipeline::make_backend(args->backend);
    ocr::RateLimiter limiter(args->backend.requests_per_minute);
    ocr::TranscribeOptions opts;
    opts.image = args->image;
    opts.token_limit = args->backend.token_limit;
    opts.retry.max_retries = args->backend.max_retries;
    opts.retry.backoff_seconds = args->backend.retry_backoff_seconds;
    opts.repetition = args->repetition;
    opts.limiter = &limiter;

    const fs::path base = args->image_dir.empty() ? args->input.parent_path()
                                                  : args->image_dir;
    std::vector<ocr::OcrRecord> all;
    std::size_t errors = 0;
    for (auto& l : layout::read_layouts(args->input)) {
      const fs::path img_path =
          fs::path(l.image).is_absolute() ? fs::path(l.image) : base / l.image;
      const auto img = image::read_png(img_path);
      if (l.width > 0 && (img.width != l.width || img.height != l.height)) {
        l = pipeline::scale_layout(std::move(l), img.width, img.height);
      }
      std::vector<ocr::OcrJob> jobs;
      for (auto& b : l.boxes) {
        const auto kind = b.cls.kind();
        if (kind == layout::BoxKind::kAbandoned ||
            kind == layout::BoxKind::kInvalid) {
          continue;
        }
        image::TilePlan plan = image::plan_tiles(b, args->image);
        if (!b.tiles.empty()) plan.tiles = b.tiles;
        jobs.push_back({l.page_id, &b, std::move(plan), &img});
      }
      auto records = ocr::transcribe_all(
          jobs, *backend, opts,
          std::min(args->workers, args->backend.max_in_flight));
      for (auto& r : records) {
        if (r.flags.error) ++errors;
        all.push_back(std::move(r));
      }
    }
    ocr::write_records(args->output, all);
    std::int64_t prompt = 0, completion = 0;
    for (const auto& r : all) {
      prompt += r.prompt_tokens;
      completion += r.completion_tokens;
    }
    spdlog::info("{} boxes, {} errors, {} prompt + {} completion tokens",
                 all.size(), errors, prompt, completion);
    status = errors > 0 ? 1 : 0;
  });
}

void register_assemble(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand(
      "assemble", "Clean OCR text, split embedded titles and build articles");
  struct Args {
    fs::path input;
    fs::path articles;
    fs::path rows;
    std::string pattern = R"(^(.+?)_(\d{4}-\d{2}-\d{2})_page_(\d+)$)";
    text::LightPostConfig text;
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("-i,--input", args->input, "OCR record JSONL")->required();
  cmd->add_option("-o,--articles", args->articles, "Article JSONL")->required();
  cmd->add_option("--rows", args->rows, "Also write per-box dataset rows");
  cmd->add_option("--page-id-pattern", args->pattern)->capture_default_str();
  cmd->add_option("--strip-chars", args->text.strip_chars,
                  "Characters trimmed from both ends of each transcript");
  cmd->add_option("--max-title-length", args->text.max_title_length)
      ->capture_default_str();
  cmd->callback([args, &status] {
    // Records grouped by page, each page in reading order.
    std::map<std::string, std::vector<ocr::OcrRecord>> pages;
    for (auto& r : ocr::read_records(args->input)) {
      pages[r.page_id].push_back(std::move(r));
    }
    std::vector<text::TextUnit> units;
    std::vector<pipeline::DatasetRow> rows;
    for (auto& [page_id, records] : pages) {
      std::stable_sort(records.begin(), records.end(),
                       [](const auto& a, const auto& b) {
                         return a.reading_order < b.reading_order;
                       });
      const auto key = pipeline::parse_page_id(page_id, args->pattern);
      for (const auto& r : records) {
        units.push_back(text::light_post(r, args->text));
        rows.push_back(pipeline::make_row(units.back(), key.periodical,
                                          key.issue_date, key.page));
      }
    }
    text::write_articles(args->articles, text::assemble_articles(
                                             text::split_embedded_titles(units)));
    if (!args->rows.empty()) pipeline::write_dataset(args->rows, rows);
    status = 0;
  });
}

}  // namespace newsprint::cli
