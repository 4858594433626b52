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

#ifndef NEWSPRINT_ANALYSIS_BOOTSTRAP_HPP_
#define NEWSPRINT_ANALYSIS_BOOTSTRAP_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace newsprint::analysis {

struct ReadabilityEstimate {
  std::string periodical;
  double median = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t bootstrap_samples = 0;
};

// Percentile of sorted data with linear interpolation between closest
// ranks (q in [0, 1]).
double percentile(const std::vector<double>& sorted, double q);

// Draws `resamples` samples with replacement from a generator seeded with
// `seed`; the estimate is the median of the resample medians and the
// interval spans their 2.5th and 97.5th percentiles. Throws
// std::invalid_argument for empty input or zero resamples.
ReadabilityEstimate bootstrap_median(const std::vector<double>& values,
                                     std::size_t resamples, std::uint64_t seed);

}  // namespace newsprint::analysis

#endif  // NEWSPRINT_ANALYSIS_BOOTSTRAP_HPP_
