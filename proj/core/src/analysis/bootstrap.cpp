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

#include "newsprint/analysis/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace newsprint::analysis {
namespace {

double median_sorted(const std::vector<double>& v) {
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

}  // namespace

double percentile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("percentile of empty set");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

ReadabilityEstimate bootstrap_median(const std::vector<double>& values,
                                     std::size_t resamples,
                                     std::uint64_t seed) {
  if (values.empty()) throw std::invalid_argument("bootstrap of empty data");
  if (resamples == 0) throw std::invalid_argument("zero bootstrap resamples");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  std::vector<double> medians;
  medians.reserve(resamples);
  std::vector<double> sample(values.size());
  for (std::size_t b = 0; b < resamples; ++b) {
    for (double& x : sample) x = values[pick(rng)];
    std::sort(sample.begin(), sample.end());
    medians.push_back(median_sorted(sample));
  }
  std::sort(medians.begin(), medians.end());
  ReadabilityEstimate e;
  e.median = median_sorted(medians);
  e.ci_low = percentile(medians, 0.025);
  e.ci_high = percentile(medians, 0.975);
  e.bootstrap_samples = resamples;
  return e;
}

}  // namespace newsprint::analysis
