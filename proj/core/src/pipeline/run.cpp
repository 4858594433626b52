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

#include "newsprint/pipeline/run.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

#include "../util/jsonl.hpp"
#include "newsprint/image/convert.hpp"
#include "newsprint/image/image.hpp"
#include "newsprint/image/tiles.hpp"
#include "newsprint/layout/layout_io.hpp"
#include "newsprint/layout/postprocess.hpp"
#include "newsprint/ocr/http_backend.hpp"
#include "newsprint/ocr/mock_backend.hpp"
#include "newsprint/ocr/rate_limiter.hpp"
#include "newsprint/ocr/record_io.hpp"
#include "newsprint/ocr/transcribe.hpp"
#include "newsprint/pipeline/dataset.hpp"
#include "newsprint/text/articles.hpp"
#include "newsprint/util/hash.hpp"
#include "newsprint/util/parallel.hpp"

namespace newsprint::pipeline {
namespace fs = std::filesystem;

namespace {

struct Page {
  layout::PageLayout detected;
  std::string detection_line;
  PageKey key;
  fs::path image;
  bool failed = false;
};

struct StageFiles {
  fs::path convert, postprocess, plan, ocr, text, articles;
};

StageFiles files_for(const fs::path& work, const std::string& page_id) {
  return {work / "convert" / (page_id + ".png"),
          work / "postprocess" / (page_id + ".jsonl"),
          work / "plan" / (page_id + ".jsonl"),
          work / "ocr" / (page_id + ".jsonl"),
          work / "text" / (page_id + ".jsonl"),
          work / "articles" / (page_id + ".jsonl")};
}

std::string hash_file(const fs::path& p) {
  return sha256_hex(internal::read_file(p));
}

bool is_ocr_class(const layout::BoxClass& c) {
  switch (c.kind()) {
    case layout::BoxKind::kText:
    case layout::BoxKind::kTitle:
    case layout::BoxKind::kFigure:
    case layout::BoxKind::kTable:
      return true;
    default:
      return false;
  }
}

int scale_edge(int v, double s) {
  return static_cast<int>(std::lround(static_cast<double>(v) * s));
}

}  // namespace

std::shared_ptr<ocr::Backend> make_backend(const ocr::BackendConfig& cfg) {
  cfg.validate();
  if (cfg.kind == "mock") return std::make_shared<ocr::MockBackend>(cfg.mock_dir);
  return std::make_shared<ocr::HttpBackend>(ocr::HttpBackend::from_config(cfg));
}

layout::PageLayout scale_layout(layout::PageLayout layout, int new_width,
                                int new_height) {
  if (layout.width <= 0 || layout.height <= 0 ||
      (layout.width == new_width && layout.height == new_height)) {
    layout.width = new_width;
    layout.height = new_height;
    return layout;
  }
  const double sx = static_cast<double>(new_width) / layout.width;
  const double sy = static_cast<double>(new_height) / layout.height;
  auto fix = [&](int& x1, int& y1, int& x2, int& y2) {
    x1 = std::clamp(scale_edge(x1, sx), 0, new_width);
    x2 = std::clamp(scale_edge(x2, sx), 0, new_width);
    y1 = std::clamp(scale_edge(y1, sy), 0, new_height);
    y2 = std::clamp(scale_edge(y2, sy), 0, new_height);
  };
  for (auto& b : layout.boxes) fix(b.x1, b.y1, b.x2, b.y2);
  auto& pa = layout.print_area;
  fix(pa.x1, pa.y1, pa.x2, pa.y2);
  for (auto& c : layout.columns) {
    c.x1 = std::clamp(scale_edge(c.x1, sx), 0, new_width);
    c.x2 = std::clamp(scale_edge(c.x2, sx), 0, new_width);
  }
  layout.width = new_width;
  layout.height = new_height;
  return layout;
}

RunResult run_pipeline(const PipelineConfig& cfg_in, const RunOptions& opts) {
  PipelineConfig cfg = cfg_in;
  if (opts.workers) cfg.workers = *opts.workers;
  if (opts.seed) cfg.seed = *opts.seed;
  cfg.validate();

  const fs::path work = cfg.resolve(cfg.work_dir);
  const fs::path out_dir = cfg.resolve(cfg.output_dir);
  const fs::path detections = cfg.resolve(cfg.detections);
  const fs::path image_dir =
      cfg.image_dir.empty() ? detections.parent_path() : cfg.resolve(cfg.image_dir);
  const std::string config_hash = cfg.hash();

  // Pages in page_id order regardless of input order.
  std::vector<Page> pages;
  internal::for_each_line(detections, [&](const std::string& line,
                                          std::size_t n) {
    Page p;
    try {
      p.detected = layout::parse_layout(line);
    } catch (const std::exception& e) {
      throw std::runtime_error(detections.string() + ":" + std::to_string(n) +
                               ": " + e.what());
    }
    p.detection_line = line;
    p.key = parse_page_id(p.detected.page_id, cfg.page_id_pattern);
    if (!p.key.matched) {
      spdlog::warn("page id '{}' does not match the page id pattern",
                   p.detected.page_id);
    }
    const fs::path img = p.detected.image.empty()
                             ? fs::path(p.detected.page_id + ".png")
                             : fs::path(p.detected.image);
    p.image = img.is_absolute() ? img : image_dir / img;
    pages.push_back(std::move(p));
  });
  std::sort(pages.begin(), pages.end(), [](const Page& a, const Page& b) {
    return a.detected.page_id < b.detected.page_id;
  });
  for (std::size_t i = 1; i < pages.size(); ++i) {
    if (pages[i].detected.page_id == pages[i - 1].detected.page_id) {
      throw std::runtime_error("duplicate page id " + pages[i].detected.page_id);
    }
  }

  RunResult result;
  RunManifest previous = load_manifest(work / "manifest.json");
  RunManifest& manifest = result.manifest;
  manifest.run_id = cfg.run_id;
  manifest.config_hash = config_hash;
  for (auto s : kStages) result.executed[std::string(s)] = 0;
  std::mutex mu;

  auto fail = [&](Page& p, std::string_view stage, const std::string& what) {
    std::lock_guard<std::mutex> lock(mu);
    p.failed = true;
    manifest.failures[p.detected.page_id] = std::string(stage) + ": " + what;
    spdlog::error("{} [{}]: {}", p.detected.page_id, stage, what);
  };
  // Whether `stage` must run for a page, given the hash of its inputs and
  // whether an upstream stage already ran (dry runs cannot hash outputs
  // that were never written).
  auto needs_run = [&](const std::string& page_id, std::string_view stage,
                       const std::string& input_hash,
                       const std::vector<fs::path>& outputs) {
    const std::string marker = stage_marker(config_hash, stage, input_hash);
    bool fresh = true;
    {
      std::lock_guard<std::mutex> lock(mu);
      const auto pit = previous.markers.find(page_id);
      fresh = pit == previous.markers.end() ||
              pit->second.count(std::string(stage)) == 0 ||
              pit->second.at(std::string(stage)) != marker;
    }
    for (const auto& o : outputs) fresh = fresh || !fs::exists(o);
    return std::pair{fresh, marker};
  };
  auto record = [&](const Page& p, std::string_view stage,
                    const std::string& marker, bool ran) {
    std::lock_guard<std::mutex> lock(mu);
    manifest.markers[p.detected.page_id][std::string(stage)] = marker;
    if (ran) ++result.executed[std::string(stage)];
  };

  // Dry run: upstream work invalidates everything after it.
  std::vector<char> dirty(pages.size(), 0);

  auto run_stage = [&](std::string_view stage, auto&& body) {
    parallel_for(pages.size(), cfg.workers, [&](std::size_t i) {
      Page& p = pages[i];
      if (p.failed) return;
      try {
        body(i, p);
      } catch (const ocr::AuthError&) {
        throw;
      } catch (const std::exception& e) {
        fail(p, stage, e.what());
      }
    });
  };

  auto step = [&](std::size_t i, Page& p, std::string_view stage,
                  const std::vector<fs::path>& inputs_for_hash,
                  const std::string& extra_input,
                  const std::vector<fs::path>& outputs, auto&& produce) {
    if (opts.dry_run && dirty[i]) {
      std::lock_guard<std::mutex> lock(mu);
      ++result.executed[std::string(stage)];
      return;
    }
    std::string input_hash = sha256_hex(extra_input);
    for (const auto& in : inputs_for_hash) input_hash += hash_file(in);
    auto [run, marker] = needs_run(p.detected.page_id, stage,
                                   sha256_hex(input_hash), outputs);
    if (run && opts.dry_run) {
      std::lock_guard<std::mutex> lock(mu);
      dirty[i] = 1;
      ++result.executed[std::string(stage)];
      return;
    }
    if (run) produce();
    record(p, stage, marker, run);
  };

  // convert
  run_stage("convert", [&](std::size_t i, Page& p) {
    const auto f = files_for(work, p.detected.page_id);
    const auto icfg = cfg.image_for(p.key.periodical);
    if (!fs::exists(p.image)) {
      throw std::runtime_error("page image not found: " + p.image.string());
    }
    step(i, p, "convert", {p.image}, "", {f.convert}, [&] {
      const auto r = image::convert_bitonal(p.image, f.convert, icfg);
      for (const auto& w : r.warnings) {
        spdlog::warn("{}: {}", p.detected.page_id, w);
      }
    });
  });

  // postprocess
  run_stage("postprocess", [&](std::size_t i, Page& p) {
    const auto f = files_for(work, p.detected.page_id);
    step(i, p, "postprocess", {}, p.detection_line, {f.postprocess}, [&] {
      layout::PageLayout l = p.detected;
      const PostprocessMode mode = cfg.mode_for(p.key.periodical);
      if (mode == PostprocessMode::kNone) {
        l = layout::reclass_invalid_only(std::move(l));
        // Detector order stands in for reading order.
        for (std::size_t k = 0; k < l.boxes.size(); ++k) {
          l.boxes[k].reading_order = static_cast<int>(k);
        }
      } else {
        l = layout::postprocess_bboxes(std::move(l),
                                       cfg.postprocess_for(p.key.periodical));
      }
      internal::write_file_atomic(f.postprocess,
                                  layout::serialize_layout(l) + "\n");
    });
  });

  // plan: move boxes onto the converted raster and tile them.
  run_stage("plan", [&](std::size_t i, Page& p) {
    const auto f = files_for(work, p.detected.page_id);
    const auto icfg = cfg.image_for(p.key.periodical);
    std::vector<fs::path> inputs;
    if (!(opts.dry_run && dirty[i])) inputs = {f.postprocess, f.convert};
    step(i, p, "plan", inputs, "", {f.plan}, [&] {
      const auto layouts = layout::read_layouts(f.postprocess);
      if (layouts.size() != 1) throw std::runtime_error("expected one layout");
      const auto img = image::read_png(f.convert);
      layout::PageLayout l = scale_layout(layouts[0], img.width, img.height);
      l.image = f.convert.string();
      for (auto& b : l.boxes) {
        b.tiles.clear();
        if (is_ocr_class(b.cls)) b.tiles = image::plan_tiles(b, icfg).tiles;
      }
      internal::write_file_atomic(f.plan, layout::serialize_layout(l) + "\n");
    });
  });

  // ocr: pages one after another, boxes of a page in parallel.
  std::shared_ptr<ocr::Backend> backend = opts.backend;
  if (!backend && !opts.dry_run) backend = make_backend(cfg.backend);
  ocr::RateLimiter limiter(cfg.backend.requests_per_minute);
  ocr::TranscribeOptions topts;
  topts.token_limit = cfg.backend.token_limit;
  topts.retry.max_retries = cfg.backend.max_retries;
  topts.retry.backoff_seconds = cfg.backend.retry_backoff_seconds;
  topts.repetition = cfg.repetition;
  topts.limiter = &limiter;
  const int ocr_workers = std::min(cfg.workers, cfg.backend.max_in_flight);
  for (std::size_t i = 0; i < pages.size(); ++i) {
    Page& p = pages[i];
    if (p.failed) continue;
    const auto f = files_for(work, p.detected.page_id);
    std::vector<fs::path> inputs;
    if (!(opts.dry_run && dirty[i])) inputs = {f.plan, f.convert};
    try {
      step(i, p, "ocr", inputs, "", {f.ocr}, [&] {
        const auto layouts = layout::read_layouts(f.plan);
        if (layouts.size() != 1) throw std::runtime_error("expected one layout");
        const auto& l = layouts[0];
        const auto img = image::read_png(f.convert);
        topts.image = cfg.image_for(p.key.periodical);
        std::vector<ocr::OcrJob> jobs;
        for (const auto& b : l.boxes) {
          if (!is_ocr_class(b.cls) || b.tiles.empty()) continue;
          image::TilePlan plan{b.id, b.tiles, topts.image.crop_ratio,
                               topts.image.overlap_fraction};
          jobs.push_back({l.page_id, &b, std::move(plan), &img});
        }
        const auto records =
            ocr::transcribe_all(jobs, *backend, topts, ocr_workers);
        ocr::write_records(f.ocr, records);
      });
    } catch (const ocr::AuthError&) {
      throw;
    } catch (const std::exception& e) {
      fail(p, "ocr", e.what());
    }
  }

  // text
  run_stage("text", [&](std::size_t i, Page& p) {
    const auto f = files_for(work, p.detected.page_id);
    std::vector<fs::path> inputs;
    if (!(opts.dry_run && dirty[i])) inputs = {f.ocr};
    step(i, p, "text", inputs, "", {f.text, f.articles}, [&] {
      std::vector<text::TextUnit> units;
      std::string rows;
      for (const auto& rec : ocr::read_records(f.ocr)) {
        units.push_back(text::light_post(rec, cfg.text));
        rows += serialize_row(make_row(units.back(), p.key.periodical,
                                       p.key.issue_date, p.key.page));
        rows += '\n';
      }
      internal::write_file_atomic(f.text, rows);
      text::write_articles(f.articles, text::assemble_articles(
                                           text::split_embedded_titles(units)));
    });
  });

  if (opts.dry_run) return result;

  // Final outputs, in page order.
  std::vector<DatasetRow> rows;
  std::string articles;
  std::vector<ocr::OcrRecord> records;
  for (const auto& p : pages) {
    if (p.failed) continue;
    const auto f = files_for(work, p.detected.page_id);
    auto page_rows = read_dataset(f.text);
    rows.insert(rows.end(), page_rows.begin(), page_rows.end());
    articles += internal::read_file(f.articles);
    auto page_records = ocr::read_records(f.ocr);
    records.insert(records.end(), page_records.begin(), page_records.end());
  }
  if (!cfg.labels.empty()) {
    result.labels = ingest_labels(rows, cfg.resolve(cfg.labels));
  }
  for (const auto& r : records) {
    manifest.prompt_tokens += r.prompt_tokens;
    manifest.completion_tokens += r.completion_tokens;
    if (r.flags.error) ++result.ocr_errors;
  }
  manifest.pages = pages.size();
  manifest.boxes = rows.size();
  manifest.cost = static_cast<double>(manifest.total_tokens()) *
                  cfg.cost_per_million_tokens / 1e6;

  result.dataset = out_dir / "dataset.jsonl";
  result.articles = out_dir / "articles.jsonl";
  result.ocr_records = out_dir / "ocr.jsonl";
  write_dataset(result.dataset, rows);
  internal::write_file_atomic(result.articles, articles);
  ocr::write_records(result.ocr_records, records);
  save_manifest(work / "manifest.json", manifest);
  return result;
}

std::string failure_summary(const RunResult& result) {
  std::ostringstream os;
  os << result.manifest.failures.size() << " of " << result.manifest.pages
     << " pages failed";
  for (const auto& [page, what] : result.manifest.failures) {
    os << "\n  " << page << ": " << what;
  }
  return os.str();
}

}  // namespace newsprint::pipeline
