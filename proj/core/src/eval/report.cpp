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

#include "newsprint/eval/report.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "newsprint/util/strings.hpp"

namespace newsprint::eval {

EvalPair evaluate_pair(std::string id, std::string group, std::string reference,
                       std::string hypothesis) {
  EvalPair p{std::move(id), std::move(group), std::move(reference),
             std::move(hypothesis), {}, 0.0};
  try {
    const CerResult r = cer(p.reference, p.hypothesis);
    p.counts = r.counts;
    p.cer = r.cer;
  } catch (const DegenerateReference&) {
    p.counts.insertions = utf8_length(normalize_text(p.hypothesis));
    p.cer = kDegenerateCer;
  }
  return p;
}

double median_of(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty set");
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::vector<GroupReport> aggregate_report(const std::vector<EvalPair>& pairs) {
  std::map<std::string, std::vector<const EvalPair*>> groups;
  for (const auto& p : pairs) groups[p.group].push_back(&p);

  std::vector<GroupReport> out;
  for (const auto& [name, members] : groups) {
    GroupReport g;
    g.group = name;
    std::vector<double> values;
    for (const EvalPair* p : members) {
      if (p->degenerate()) {
        ++g.degenerate;
      } else {
        values.push_back(p->cer);
      }
    }
    if (values.empty()) {
      spdlog::warn("group '{}' has no scorable pairs ({} degenerate); skipped",
                   name, g.degenerate);
      continue;
    }
    const double n = static_cast<double>(values.size());
    g.pairs = values.size();
    g.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    g.fraction_zero =
        static_cast<double>(std::count(values.begin(), values.end(), 0.0)) / n;
    g.fraction_below_0_1 =
        static_cast<double>(std::count_if(values.begin(), values.end(),
                                          [](double v) { return v < 0.1; })) /
        n;
    g.median = median_of(std::move(values));
    out.push_back(g);
  }
  return out;
}

std::string report_csv(const std::vector<GroupReport>& groups) {
  std::ostringstream os;
  os.precision(10);
  os << "group,pairs,degenerate,median_cer,mean_cer,fraction_zero,"
        "fraction_below_0_1\n";
  for (const auto& g : groups) {
    os << g.group << ',' << g.pairs << ',' << g.degenerate << ',' << g.median
       << ',' << g.mean << ',' << g.fraction_zero << ',' << g.fraction_below_0_1
       << '\n';
  }
  return os.str();
}

std::string pairs_csv(const std::vector<EvalPair>& pairs) {
  std::ostringstream os;
  os.precision(10);
  os << "id,group,cer,substitutions,deletions,insertions,correct\n";
  for (const auto& p : pairs) {
    os << p.id << ',' << p.group << ',';
    if (p.degenerate()) {
      os << "inf";
    } else {
      os << p.cer;
    }
    os << ',' << p.counts.substitutions << ',' << p.counts.deletions << ','
       << p.counts.insertions << ',' << p.counts.correct << '\n';
  }
  return os.str();
}

}  // namespace newsprint::eval
