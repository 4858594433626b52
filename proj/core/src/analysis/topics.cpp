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

#include "newsprint/analysis/topics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace newsprint::analysis {

std::optional<std::size_t> topic_index(std::string_view topic) {
  const auto it = std::find(kTopics.begin(), kTopics.end(), topic);
  if (it == kTopics.end()) return std::nullopt;
  return static_cast<std::size_t>(it - kTopics.begin());
}

bool is_text_type(std::string_view type) {
  return std::find(kTextTypes.begin(), kTextTypes.end(), type) !=
         kTextTypes.end();
}

TopicDistribution topic_distribution(std::string periodical,
                                     const std::vector<std::string>& topics) {
  if (topics.empty()) {
    throw std::invalid_argument("no topic labels for " + periodical);
  }
  TopicDistribution d{std::move(periodical),
                      std::vector<double>(kTopics.size(), 0.0)};
  for (const auto& t : topics) {
    const auto i = topic_index(t);
    if (!i) throw std::invalid_argument("unknown topic: " + t);
    d.probs[*i] += 1.0;
  }
  for (double& p : d.probs) p /= static_cast<double>(topics.size());
  return d;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("cosine similarity of unequal dimensions");
  }
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) {
    throw std::invalid_argument("cosine similarity of a zero vector");
  }
  // Rounding can push identical vectors a hair past 1.
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

}  // namespace newsprint::analysis
