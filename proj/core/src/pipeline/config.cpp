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

#include "newsprint/pipeline/config.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "../util/jsonl.hpp"
#include "newsprint/util/hash.hpp"

namespace newsprint::pipeline {
namespace {

template <typename T>
void read(const YAML::Node& node, const char* key, T& out,
          const std::string& section) {
  const YAML::Node v = node[key];
  if (!v || v.IsNull()) return;
  try {
    out = v.as<T>();
  } catch (const YAML::Exception&) {
    throw std::invalid_argument(section + "." + key + ": wrong type");
  }
}

void read_path(const YAML::Node& node, const char* key,
               std::filesystem::path& out, const std::string& section) {
  std::string s;
  read(node, key, s, section);
  if (!s.empty()) out = s;
}

// Accepts numbers and "inf" for an uncropped box.
void read_ratio(const YAML::Node& node, const char* key, double& out,
                const std::string& section) {
  const YAML::Node v = node[key];
  if (!v || v.IsNull()) return;
  const auto s = v.as<std::string>();
  if (s == "inf" || s == "Inf" || s == ".inf" || s == "none") {
    out = image::kNoCrop;
    return;
  }
  read(node, key, out, section);
}

void check_keys(const YAML::Node& node, const std::string& section,
                std::initializer_list<std::string_view> allowed) {
  if (!node) return;
  if (!node.IsMap()) throw std::invalid_argument(section + ": expected a map");
  for (const auto& kv : node) {
    const auto key = kv.first.as<std::string>();
    bool ok = false;
    for (auto a : allowed) ok = ok || a == key;
    if (!ok) throw std::invalid_argument(section + ": unknown key '" + key + "'");
  }
}

std::string fmt_double(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string_view mode_name(PostprocessMode m) {
  switch (m) {
    case PostprocessMode::kNone:
      return "none";
    case PostprocessMode::kSimple:
      return "simple";
    case PostprocessMode::kFill:
      return "fill";
  }
  return "simple";
}

PostprocessMode parse_mode(std::string_view name) {
  if (name == "none") return PostprocessMode::kNone;
  if (name == "simple") return PostprocessMode::kSimple;
  if (name == "fill") return PostprocessMode::kFill;
  throw std::invalid_argument("postprocess mode must be none, simple or fill");
}

void PipelineConfig::validate() const {
  if (workers < 1) throw std::invalid_argument("run.workers must be >= 1");
  if (detections.empty()) {
    throw std::invalid_argument("inputs.detections is required");
  }
  try {
    std::regex re(page_id_pattern);
  } catch (const std::regex_error&) {
    throw std::invalid_argument("run.page_id_pattern is not a valid regex");
  }
  postprocess.validate();
  image.validate();
  backend.validate();
  if (backend.kind == "mock" && backend.mock_dir.empty()) {
    throw std::invalid_argument("ocr.mock_dir is required for the mock backend");
  }
  if (repetition.min_unit < 1 || repetition.min_repeats < 2) {
    throw std::invalid_argument("ocr repetition settings out of range");
  }
  if (!(cost_per_million_tokens >= 0)) {
    throw std::invalid_argument("ocr.cost_per_million_tokens must be >= 0");
  }
  for (const auto& [name, o] : periodicals) {
    if (o.dpi && !(*o.dpi > 0)) {
      throw std::invalid_argument("periodicals." + name + ".dpi must be > 0");
    }
  }
}

std::filesystem::path PipelineConfig::resolve(
    const std::filesystem::path& p) const {
  if (p.empty() || p.is_absolute()) return p;
  return base_dir / p;
}

PostprocessMode PipelineConfig::mode_for(const std::string& periodical) const {
  const auto it = periodicals.find(periodical);
  if (it != periodicals.end() && it->second.mode) return *it->second.mode;
  return mode;
}

layout::PostprocessConfig PipelineConfig::postprocess_for(
    const std::string& periodical) const {
  layout::PostprocessConfig c = postprocess;
  c.fill_columns = mode_for(periodical) == PostprocessMode::kFill;
  return c;
}

image::ImagePrepConfig PipelineConfig::image_for(
    const std::string& periodical) const {
  image::ImagePrepConfig c = image;
  const auto it = periodicals.find(periodical);
  if (it != periodicals.end() && it->second.dpi) c.dpi = *it->second.dpi;
  return c;
}

std::string PipelineConfig::canonical() const {
  std::ostringstream os;
  os << "page_id_pattern=" << page_id_pattern << '\n'
     << "mode=" << mode_name(mode) << '\n'
     << "minimum_height_threshold=" << postprocess.minimum_height_threshold
     << '\n'
     << "merge_height_ratio=" << fmt_double(postprocess.merge_height_ratio)
     << '\n'
     << "abandoned_band_fraction="
     << fmt_double(postprocess.abandoned_band_fraction) << '\n'
     << "dpi=" << fmt_double(image.dpi) << '\n'
     << "bit_depth=" << image.bit_depth << '\n'
     << "crop_ratio=" << fmt_double(image.crop_ratio) << '\n'
     << "overlap_fraction=" << fmt_double(image.overlap_fraction) << '\n'
     << "deskew=" << image.deskew << '\n'
     << "deskew_range=" << fmt_double(image.deskew_range) << '\n'
     << "deskew_step=" << fmt_double(image.deskew_step) << '\n'
     << "backend=" << backend.kind << '\n'
     << "endpoint=" << backend.endpoint << '\n'
     << "model=" << backend.model << '\n'
     << "mock_dir=" << backend.mock_dir << '\n'
     << "token_limit=" << backend.token_limit << '\n'
     << "repetition_min_unit=" << repetition.min_unit << '\n'
     << "repetition_min_repeats=" << repetition.min_repeats << '\n'
     << "strip_chars=" << text.strip_chars << '\n'
     << "max_title_length=" << text.max_title_length << '\n';
  for (const auto& [name, o] : periodicals) {
    os << "periodical." << name << ".mode="
       << (o.mode ? std::string(mode_name(*o.mode)) : "-") << '\n'
       << "periodical." << name << ".dpi=" << (o.dpi ? fmt_double(*o.dpi) : "-")
       << '\n';
  }
  return os.str();
}

std::string PipelineConfig::hash() const { return sha256_hex(canonical()); }

PipelineConfig parse_config(const std::string& yaml,
                            const std::filesystem::path& base_dir) {
  YAML::Node root;
  try {
    root = YAML::Load(yaml);
  } catch (const YAML::Exception& e) {
    throw std::runtime_error(std::string("config: ") + e.what());
  }
  PipelineConfig c;
  c.base_dir = base_dir;
  if (!root || root.IsNull()) throw std::invalid_argument("config is empty");
  check_keys(root, "config",
             {"run", "inputs", "postprocess", "image", "ocr", "text",
              "periodicals"});

  if (const auto n = root["run"]) {
    check_keys(n, "run",
               {"id", "work_dir", "output_dir", "workers", "seed",
                "page_id_pattern"});
    read(n, "id", c.run_id, "run");
    read_path(n, "work_dir", c.work_dir, "run");
    read_path(n, "output_dir", c.output_dir, "run");
    read(n, "workers", c.workers, "run");
    read(n, "seed", c.seed, "run");
    read(n, "page_id_pattern", c.page_id_pattern, "run");
  }
  if (const auto n = root["inputs"]) {
    check_keys(n, "inputs", {"detections", "image_dir", "labels"});
    read_path(n, "detections", c.detections, "inputs");
    read_path(n, "image_dir", c.image_dir, "inputs");
    read_path(n, "labels", c.labels, "inputs");
  }
  if (const auto n = root["postprocess"]) {
    check_keys(n, "postprocess",
               {"mode", "minimum_height_threshold", "merge_height_ratio",
                "abandoned_band_fraction"});
    std::string mode;
    read(n, "mode", mode, "postprocess");
    if (!mode.empty()) c.mode = parse_mode(mode);
    read(n, "minimum_height_threshold", c.postprocess.minimum_height_threshold,
         "postprocess");
    read(n, "merge_height_ratio", c.postprocess.merge_height_ratio,
         "postprocess");
    read(n, "abandoned_band_fraction", c.postprocess.abandoned_band_fraction,
         "postprocess");
  }
  if (const auto n = root["image"]) {
    check_keys(n, "image",
               {"dpi", "bit_depth", "crop_ratio", "overlap_fraction", "deskew",
                "deskew_range", "deskew_step"});
    read(n, "dpi", c.image.dpi, "image");
    read(n, "bit_depth", c.image.bit_depth, "image");
    read_ratio(n, "crop_ratio", c.image.crop_ratio, "image");
    read(n, "overlap_fraction", c.image.overlap_fraction, "image");
    read(n, "deskew", c.image.deskew, "image");
    read(n, "deskew_range", c.image.deskew_range, "image");
    read(n, "deskew_step", c.image.deskew_step, "image");
  }
  if (const auto n = root["ocr"]) {
    check_keys(n, "ocr",
               {"backend", "mock_dir", "endpoint", "model", "api_key_env",
                "max_in_flight", "requests_per_minute", "max_retries",
                "timeout_seconds", "token_limit", "retry_backoff_seconds",
                "repetition_min_unit", "repetition_min_repeats",
                "cost_per_million_tokens"});
    read(n, "backend", c.backend.kind, "ocr");
    read(n, "mock_dir", c.backend.mock_dir, "ocr");
    read(n, "endpoint", c.backend.endpoint, "ocr");
    read(n, "model", c.backend.model, "ocr");
    read(n, "api_key_env", c.backend.api_key_env, "ocr");
    read(n, "max_in_flight", c.backend.max_in_flight, "ocr");
    read(n, "requests_per_minute", c.backend.requests_per_minute, "ocr");
    read(n, "max_retries", c.backend.max_retries, "ocr");
    read(n, "timeout_seconds", c.backend.timeout_seconds, "ocr");
    read(n, "token_limit", c.backend.token_limit, "ocr");
    read(n, "retry_backoff_seconds", c.backend.retry_backoff_seconds, "ocr");
    read(n, "repetition_min_unit", c.repetition.min_unit, "ocr");
    read(n, "repetition_min_repeats", c.repetition.min_repeats, "ocr");
    read(n, "cost_per_million_tokens", c.cost_per_million_tokens, "ocr");
  }
  if (const auto n = root["text"]) {
    check_keys(n, "text", {"strip_chars", "max_title_length"});
    read(n, "strip_chars", c.text.strip_chars, "text");
    read(n, "max_title_length", c.text.max_title_length, "text");
  }
  if (const auto n = root["periodicals"]) {
    if (!n.IsMap()) throw std::invalid_argument("periodicals: expected a map");
    for (const auto& kv : n) {
      const auto name = kv.first.as<std::string>();
      const std::string section = "periodicals." + name;
      check_keys(kv.second, section, {"mode", "fill_columns", "dpi"});
      PeriodicalOverride o;
      std::string mode;
      read(kv.second, "mode", mode, section);
      if (!mode.empty()) o.mode = parse_mode(mode);
      if (kv.second["fill_columns"]) {
        bool fill = false;
        read(kv.second, "fill_columns", fill, section);
        if (fill) {
          o.mode = PostprocessMode::kFill;
        } else if (!o.mode) {
          o.mode = PostprocessMode::kSimple;
        }
      }
      if (kv.second["dpi"]) {
        double dpi = 0;
        read(kv.second, "dpi", dpi, section);
        o.dpi = dpi;
      }
      c.periodicals[name] = o;
    }
  }
  // Pipeline-relative mock directory.
  if (!c.backend.mock_dir.empty()) {
    c.backend.mock_dir = c.resolve(c.backend.mock_dir).string();
  }
  c.validate();
  return c;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  const std::string yaml = internal::read_file(path);
  return parse_config(yaml, std::filesystem::absolute(path).parent_path());
}

PageKey parse_page_id(const std::string& page_id, const std::string& pattern) {
  const std::regex re(pattern);
  std::smatch m;
  PageKey k;
  if (!std::regex_match(page_id, m, re) || m.size() < 3) return k;
  k.periodical = m[1];
  k.issue_date = m[2];
  if (m.size() > 3 && m[3].matched) k.page = std::stoi(m[3]);
  k.matched = true;
  return k;
}

}  // namespace newsprint::pipeline
