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

#include "newsprint/image/convert.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newsprint::image {
namespace {

// Weights of source samples [first, first + weights.size()) for one output
// sample of an area-averaging resampler.
struct Footprint {
  int first = 0;
  std::vector<double> weights;
};

std::vector<Footprint> footprints(int in_size, int out_size) {
  std::vector<Footprint> out(static_cast<std::size_t>(out_size));
  const double scale = static_cast<double>(in_size) / out_size;
  for (int o = 0; o < out_size; ++o) {
    const double lo = o * scale;
    const double hi = (o + 1) * scale;
    const int first = static_cast<int>(std::floor(lo));
    const int last = std::min(in_size - 1, static_cast<int>(std::ceil(hi)) - 1);
    Footprint f;
    f.first = first;
    double total = 0.0;
    for (int i = first; i <= last; ++i) {
      const double w = std::min(hi, i + 1.0) - std::max(lo, static_cast<double>(i));
      f.weights.push_back(std::max(0.0, w));
      total += f.weights.back();
    }
    for (double& w : f.weights) w /= total;
    out[o] = std::move(f);
  }
  return out;
}

}  // namespace

void ImagePrepConfig::validate() const {
  if (!(dpi > 0)) throw std::invalid_argument("dpi must be positive");
  if (bit_depth != 1 && bit_depth != 2 && bit_depth != 4 && bit_depth != 8) {
    throw std::invalid_argument("bit_depth must be 1, 2, 4 or 8");
  }
  if (!(crop_ratio > 0)) throw std::invalid_argument("crop_ratio must be > 0");
  if (!(overlap_fraction >= 0 && overlap_fraction < 1)) {
    throw std::invalid_argument("overlap_fraction must be in [0, 1)");
  }
  if (!(deskew_range >= 0)) {
    throw std::invalid_argument("deskew_range must be >= 0");
  }
  if (!(deskew_step > 0)) throw std::invalid_argument("deskew_step must be > 0");
}

GrayImage resample(const GrayImage& img, int out_width, int out_height) {
  if (out_width <= 0 || out_height <= 0) {
    throw ImageError("resample target must be positive");
  }
  if (out_width == img.width && out_height == img.height) return img;
  const auto fx = footprints(img.width, out_width);
  const auto fy = footprints(img.height, out_height);

  std::vector<double> horiz(static_cast<std::size_t>(out_width) * img.height);
  for (int y = 0; y < img.height; ++y) {
    const auto* row = &img.pixels[static_cast<std::size_t>(y) * img.width];
    for (int x = 0; x < out_width; ++x) {
      const auto& f = fx[x];
      double acc = 0.0;
      for (std::size_t k = 0; k < f.weights.size(); ++k) {
        acc += f.weights[k] * row[f.first + static_cast<int>(k)];
      }
      horiz[static_cast<std::size_t>(y) * out_width + x] = acc;
    }
  }
  GrayImage out(out_width, out_height);
  out.dpi = img.dpi;
  for (int y = 0; y < out_height; ++y) {
    const auto& f = fy[y];
    for (int x = 0; x < out_width; ++x) {
      double acc = 0.0;
      for (std::size_t k = 0; k < f.weights.size(); ++k) {
        acc += f.weights[k] *
               horiz[static_cast<std::size_t>(f.first + static_cast<int>(k)) *
                         out_width +
                     x];
      }
      out.at(x, y) = static_cast<std::uint8_t>(
          std::clamp(std::lround(acc), 0L, 255L));
    }
  }
  return out;
}

GrayImage quantize(const GrayImage& img, int bit_depth) {
  const int levels = 1 << bit_depth;
  GrayImage out = img;
  for (auto& v : out.pixels) {
    const int q = std::min(levels - 1, v * levels / 256);
    v = static_cast<std::uint8_t>(q * 255 / (levels - 1));
  }
  return out;
}

GrayImage to_bitonal(const GrayImage& img, const ImagePrepConfig& cfg,
                     std::vector<std::string>* warnings) {
  cfg.validate();
  GrayImage work = img;
  if (!img.dpi || !(*img.dpi > 0)) {
    if (warnings) {
      warnings->push_back(
          "no physical resolution metadata; converting bit depth only");
    }
  } else if (std::abs(*img.dpi - cfg.dpi) >= 0.5) {
    const double inches_w = img.width / *img.dpi;
    const double inches_h = img.height / *img.dpi;
    const int w = std::max(1, static_cast<int>(std::lround(inches_w * cfg.dpi)));
    const int h = std::max(1, static_cast<int>(std::lround(inches_h * cfg.dpi)));
    work = resample(img, w, h);
  }
  if (img.dpi) work.dpi = cfg.dpi;
  return quantize(work, cfg.bit_depth);
}

ConvertResult convert_bitonal(const std::filesystem::path& input,
                              const std::filesystem::path& output,
                              const ImagePrepConfig& cfg) {
  const GrayImage src = read_png(input);
  ConvertResult result;
  GrayImage out = to_bitonal(src, cfg, &result.warnings);
  for (const auto& w : result.warnings) {
    spdlog::warn("{}: {}", input.string(), w);
  }
  result.resampled = out.width != src.width || out.height != src.height;
  result.width = out.width;
  result.height = out.height;
  write_png(output, out, cfg.bit_depth);
  result.output = output;
  return result;
}

}  // namespace newsprint::image
