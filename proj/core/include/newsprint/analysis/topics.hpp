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

#ifndef NEWSPRINT_ANALYSIS_TOPICS_HPP_
#define NEWSPRINT_ANALYSIS_TOPICS_HPP_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace newsprint::analysis {

// IPTC media topic Tier-1 subjects.
inline constexpr std::array<std::string_view, 17> kTopics = {
    "arts, culture, entertainment and media",
    "crime, law and justice",
    "disaster accident and emergency incident",
    "economy, business and finance",
    "education",
    "environment",
    "health",
    "human interest",
    "labour",
    "lifestyle and leisure",
    "politics",
    "religion",
    "science and technology",
    "society",
    "sport",
    "conflict, war and peace",
    "weather",
};

inline constexpr std::array<std::string_view, 4> kTextTypes = {
    "article", "advert", "poem/song/story", "other"};

std::optional<std::size_t> topic_index(std::string_view topic);
bool is_text_type(std::string_view type);

struct TopicDistribution {
  std::string periodical;
  std::vector<double> probs;  // kTopics.size() entries summing to 1
};

// Relative frequency of each topic among `topics`. Throws
// std::invalid_argument on an unknown topic or an empty list.
TopicDistribution topic_distribution(std::string periodical,
                                     const std::vector<std::string>& topics);

// dot(a, b) / (|a| |b|). Throws std::invalid_argument on a dimension
// mismatch or a zero vector.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

}  // namespace newsprint::analysis

#endif  // NEWSPRINT_ANALYSIS_TOPICS_HPP_
