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

#ifndef NEWSPRINT_EVAL_REPORT_HPP_
#define NEWSPRINT_EVAL_REPORT_HPP_

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "newsprint/eval/cer.hpp"

namespace newsprint::eval {

inline constexpr double kDegenerateCer =
    std::numeric_limits<double>::infinity();

struct EvalPair {
  std::string id;
  std::string group;
  std::string reference;
  std::string hypothesis;
  EditCounts counts;
  // kDegenerateCer for an empty reference with a non-empty hypothesis.
  double cer = 0.0;

  bool degenerate() const { return cer == kDegenerateCer; }
};

// Never throws for degenerate pairs; they carry the sentinel instead.
EvalPair evaluate_pair(std::string id, std::string group, std::string reference,
                       std::string hypothesis);

struct GroupReport {
  std::string group;
  std::size_t pairs = 0;       // finite pairs
  std::size_t degenerate = 0;  // excluded sentinel pairs
  double median = 0.0;
  double mean = 0.0;
  double fraction_zero = 0.0;
  double fraction_below_0_1 = 0.0;
};

// Groups pairs by `group`, in name order. Degenerate pairs are counted but
// excluded from the statistics; groups left empty are skipped with a
// warning.
std::vector<GroupReport> aggregate_report(const std::vector<EvalPair>& pairs);

double median_of(std::vector<double> values);

// group,pairs,degenerate,median_cer,mean_cer,fraction_zero,fraction_below_0_1
std::string report_csv(const std::vector<GroupReport>& groups);
// id,group,cer,substitutions,deletions,insertions,correct
std::string pairs_csv(const std::vector<EvalPair>& pairs);

}  // namespace newsprint::eval

#endif  // NEWSPRINT_EVAL_REPORT_HPP_
