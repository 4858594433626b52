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

#include <algorithm>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "newsprint/eval/report.hpp"
#include "newsprint/image/convert.hpp"
#include "newsprint/image/tiles.hpp"
#include "newsprint/layout/layout_io.hpp"
#include "newsprint/layout/postprocess.hpp"
#include "newsprint/metrics/score.hpp"
#include "newsprint/pipeline/config.hpp"
#include "newsprint/util/parallel.hpp"

namespace newsprint::cli {
namespace fs = std::filesystem;

void register_convert(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand(
      "convert", "Resample page scans to a target dpi and reduce bit depth");
  struct Args {
    std::vector<fs::path> inputs;
    fs::path out_dir = "converted";
    image::ImagePrepConfig cfg;
    int workers = 1;
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("inputs", args->inputs, "PNG page images")->required();
  cmd->add_option("-o,--out-dir", args->out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--dpi", args->cfg.dpi, "Target resolution")->capture_default_str();
  cmd->add_option("--bit-depth", args->cfg.bit_depth, "1, 2, 4 or 8")->capture_default_str();
  cmd->add_option("-j,--workers", args->workers, "Parallel pages")->capture_default_str();
  cmd->callback([args, &status] {
    args->cfg.validate();
    std::vector<int> failed(args->inputs.size(), 0);
    parallel_for(args->inputs.size(), args->workers, [&](std::size_t i) {
      const auto& in = args->inputs[i];
      try {
        const auto r = image::convert_bitonal(
            in, args->out_dir / in.filename(), args->cfg);
        for (const auto& w : r.warnings) spdlog::warn("{}: {}", in.string(), w);
      } catch (const std::exception& e) {
        spdlog::error("{}", e.what());
        failed[i] = 1;
      }
    });
    status = std::count(failed.begin(), failed.end(), 1) > 0 ? 1 : 0;
  });
}

void register_postprocess(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand(
      "postprocess", "Clean detected boxes, find columns and reading order");
  struct Args {
    fs::path input;
    fs::path output;
    std::string mode = "simple";
    layout::PostprocessConfig cfg;
    int workers = 1;
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("-i,--input", args->input, "Detections JSONL")->required();
  cmd->add_option("-o,--output", args->output, "Layout JSONL (default stdout)");
  cmd->add_option("--mode", args->mode, "none, simple or fill")->capture_default_str()
      ->check(CLI::IsMember({"none", "simple", "fill"}));
  cmd->add_option("--min-height", args->cfg.minimum_height_threshold,
                  "Drop boxes shorter than this many pixels")->capture_default_str();
  cmd->add_option("--merge-ratio", args->cfg.merge_height_ratio,
                  "Merge consecutive boxes up to this height/width ratio")->capture_default_str();
  cmd->add_option("--band", args->cfg.abandoned_band_fraction,
                  "Top/bottom page fraction treated as margin")->capture_default_str();
  cmd->add_option("-j,--workers", args->workers, "Parallel pages")->capture_default_str();
  cmd->callback([args, &status] {
    auto layouts = layout::read_layouts(args->input);
    const auto mode = pipeline::parse_mode(args->mode);
    args->cfg.fill_columns = mode == pipeline::PostprocessMode::kFill;
    parallel_for(layouts.size(), args->workers, [&](std::size_t i) {
      layouts[i] = mode == pipeline::PostprocessMode::kNone
                       ? layout::reclass_invalid_only(std::move(layouts[i]))
                       : layout::postprocess_bboxes(std::move(layouts[i]),
                                                    args->cfg);
    });
    std::string out;
    for (const auto& l : layouts) out += layout::serialize_layout(l) + "\n";
    emit(args->output, out);
    status = 0;
  });
}

void register_score(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand(
      "score", "Coverage and overlap per page with per-periodical summaries");
  struct Args {
    fs::path input;
    fs::path output;
    bool print_area = false;
    std::string pattern = R"(^(.+?)_(\d{4}-\d{2}-\d{2})_page_(\d+)$)";
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("-i,--input", args->input, "Layout JSONL")->required();
  cmd->add_option("-o,--output", args->output, "CSV (default stdout)");
  cmd->add_flag("--print-area", args->print_area,
                "Measure against the print area instead of the whole page");
  cmd->add_option("--page-id-pattern", args->pattern,
                  "Regex whose first group is the periodical code")->capture_default_str();
  cmd->callback([args, &status] {
    const auto layouts = layout::read_layouts(args->input);
    std::ostringstream os;
    os.precision(10);
    os << "page_id,coverage,overlap\n";
    std::map<std::string, std::pair<std::vector<double>, std::vector<double>>>
        groups;
    for (const auto& l : layouts) {
      const auto s = args->print_area ? metrics::score_print_area(l)
                                      : metrics::score_layout(l);
      os << l.page_id << ',' << s.coverage << ',' << s.overlap << '\n';
      const auto key = pipeline::parse_page_id(l.page_id, args->pattern);
      auto& g = groups[key.matched ? key.periodical : std::string("unknown")];
      g.first.push_back(s.coverage);
      g.second.push_back(s.overlap);
    }
    auto mean = [](const std::vector<double>& v) {
      double t = 0;
      for (double x : v) t += x;
      return t / static_cast<double>(v.size());
    };
    for (const auto& [name, g] : groups) {
      os << name << ":mean," << mean(g.first) << ',' << mean(g.second) << '\n';
      os << name << ":median," << eval::median_of(g.first) << ','
         << eval::median_of(g.second) << '\n';
    }
    emit(args->output, os.str());
    status = 0;
  });
}

void register_plan(CLI::App& app, int& status) {
  auto* cmd =
      app.add_subcommand("plan", "Attach overlapping crop tiles to each box");
  struct Args {
    fs::path input;
    fs::path output;
    std::string crop_ratio = "1.5";
    double overlap = 0.2;
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("-i,--input", args->input, "Layout JSONL")->required();
  cmd->add_option("-o,--output", args->output, "Layout JSONL (default stdout)");
  cmd->add_option("--crop-ratio", args->crop_ratio,
                  "Tile height as a multiple of box width, or inf")->capture_default_str();
  cmd->add_option("--overlap", args->overlap, "Overlap fraction")->capture_default_str();
  cmd->callback([args, &status] {
    image::ImagePrepConfig cfg;
    cfg.crop_ratio = args->crop_ratio == "inf" ? image::kNoCrop
                                               : std::stod(args->crop_ratio);
    cfg.overlap_fraction = args->overlap;
    cfg.validate();
    auto layouts = layout::read_layouts(args->input);
    std::string out;
    for (auto& l : layouts) {
      for (auto& b : l.boxes) b.tiles = image::plan_tiles(b, cfg).tiles;
      out += layout::serialize_layout(l) + "\n";
    }
    emit(args->output, out);
    status = 0;
  });
}

}  // namespace newsprint::cli
