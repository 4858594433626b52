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

#include "newsprint/image/deskew.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace newsprint::image {
namespace {

constexpr std::uint8_t kDarkThreshold = 128;
// Best profile score must beat the median over all angles by this factor;
// noise and blank pages stay below it.
constexpr double kMinPeakRatio = 1.05;

}  // namespace

SkewEstimate estimate_skew(const GrayImage& img, double range, double step) {
  SkewEstimate result;
  std::vector<std::pair<double, double>> dark;  // centred coordinates
  const double cx = 0.5 * (img.width - 1);
  const double cy = 0.5 * (img.height - 1);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      if (img.at(x, y) < kDarkThreshold) dark.emplace_back(x - cx, y - cy);
    }
  }
  const std::size_t total = static_cast<std::size_t>(img.width) * img.height;
  if (dark.empty() || dark.size() == total) {
    result.warning = "blank image; skew assumed 0";
    spdlog::warn(result.warning);
    return result;
  }

  const double half_diag =
      0.5 * std::hypot(static_cast<double>(img.width), img.height) + 1.0;
  const int bins = static_cast<int>(std::ceil(2 * half_diag)) + 1;
  const int steps = static_cast<int>(std::floor(range / step + 1e-9));
  std::vector<double> scores;
  std::vector<double> angles;
  std::vector<std::int64_t> profile(static_cast<std::size_t>(bins));
  for (int k = -steps; k <= steps; ++k) {
    const double a = k * step;
    const double rad = a * std::numbers::pi / 180.0;
    const double s = std::sin(rad);
    const double c = std::cos(rad);
    std::fill(profile.begin(), profile.end(), 0);
    for (const auto& [dx, dy] : dark) {
      const double yr = s * dx + c * dy + half_diag;
      ++profile[static_cast<std::size_t>(yr)];
    }
    double sum_sq = 0.0;
    for (auto v : profile) sum_sq += static_cast<double>(v) * v;
    scores.push_back(sum_sq);
    angles.push_back(a);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < scores.size(); ++i) {
    if (scores[i] > scores[best] ||
        (scores[i] == scores[best] &&
         std::abs(angles[i]) < std::abs(angles[best]))) {
      best = i;
    }
  }
  std::vector<double> sorted = scores;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2,
                   sorted.end());
  const double median = sorted[sorted.size() / 2];
  if (scores.size() > 1 && scores[best] < kMinPeakRatio * median) {
    result.warning = "no dominant text-line direction; skew assumed 0";
    spdlog::warn(result.warning);
    return result;
  }
  result.degrees = angles[best];
  result.reliable = true;
  return result;
}

SkewEstimate estimate_skew(const GrayImage& img, const ImagePrepConfig& cfg) {
  return estimate_skew(img, cfg.deskew_range, cfg.deskew_step);
}

GrayImage deskew(const GrayImage& img, const ImagePrepConfig& cfg) {
  const auto est = estimate_skew(img, cfg);
  if (!est.reliable || est.degrees == 0.0) return img;
  return rotate(img, -est.degrees);
}

}  // namespace newsprint::image
