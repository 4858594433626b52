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

#ifndef NEWSPRINT_EVAL_F1_HPP_
#define NEWSPRINT_EVAL_F1_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace newsprint::eval {

struct ClassScore {
  std::string label;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  // 0/0 is taken as 0.
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct LabelEval {
  std::vector<ClassScore> classes;  // in declared order
  double micro_precision = 0.0;
  double micro_recall = 0.0;
  double micro_f1 = 0.0;
  // Unweighted mean over every declared class, including absent ones.
  double macro_f1 = 0.0;
  double accuracy = 0.0;
  std::size_t samples = 0;
};

// Single-label, mutually exclusive classes. Throws std::invalid_argument on
// a length mismatch, an empty or duplicated class set, or a label outside
// it.
LabelEval f1_scores(const std::vector<std::string>& gold,
                    const std::vector<std::string>& predicted,
                    const std::vector<std::string>& classes);

// label,tp,fp,fn,precision,recall,f1 followed by micro and macro rows.
std::string f1_csv(const LabelEval& eval);

}  // namespace newsprint::eval

#endif  // NEWSPRINT_EVAL_F1_HPP_
