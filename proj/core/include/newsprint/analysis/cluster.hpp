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

#ifndef NEWSPRINT_ANALYSIS_CLUSTER_HPP_
#define NEWSPRINT_ANALYSIS_CLUSTER_HPP_

#include <string>
#include <vector>

#include "newsprint/analysis/topics.hpp"

namespace newsprint::analysis {

// Node numbering follows SciPy's linkage matrix: 0..n-1 are the leaves,
// n + k is the cluster formed by merge k.
struct Merge {
  int left = 0;
  int right = 0;
  double height = 0.0;
  int size = 0;
};

struct MergeTree {
  std::vector<std::string> labels;
  std::vector<Merge> merges;
};

// Distances closer than this are treated as tied.
inline constexpr double kTieTolerance = 1e-12;

// Average-linkage agglomeration over a symmetric distance matrix. Ties go to
// the pair whose members' smallest labels sort first; within a merge the
// cluster with the smaller label is `left`. Throws std::invalid_argument for
// fewer than two items, duplicate labels or a malformed matrix.
MergeTree average_linkage(const std::vector<std::string>& labels,
                          const std::vector<std::vector<double>>& distance);

// Distance 1 - cosine similarity between topic distributions.
std::vector<std::vector<double>> cosine_distances(
    const std::vector<TopicDistribution>& items);

MergeTree hcluster(const std::vector<TopicDistribution>& items);

// step,left,right,left_members,right_members,height,size
std::string merge_tree_csv(const MergeTree& tree);
// Square matrix with a header row and column of labels.
std::string similarity_matrix_csv(const std::vector<TopicDistribution>& items);

}  // namespace newsprint::analysis

#endif  // NEWSPRINT_ANALYSIS_CLUSTER_HPP_
