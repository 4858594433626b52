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

#include "newsprint/eval/f1.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace newsprint::eval {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double harmonic(double p, double r) {
  // Equal inputs return exactly; 2pp / 2p can be off by an ulp.
  if (p == r) return p;
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

}  // namespace

LabelEval f1_scores(const std::vector<std::string>& gold,
                    const std::vector<std::string>& predicted,
                    const std::vector<std::string>& classes) {
  if (gold.size() != predicted.size()) {
    throw std::invalid_argument("gold and predicted lengths differ");
  }
  if (classes.empty()) throw std::invalid_argument("empty class set");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!index.emplace(classes[i], i).second) {
      throw std::invalid_argument("duplicate class: " + classes[i]);
    }
  }
  auto lookup = [&](const std::string& label) {
    const auto it = index.find(label);
    if (it == index.end()) {
      throw std::invalid_argument("label outside class set: " + label);
    }
    return it->second;
  };

  LabelEval out;
  out.samples = gold.size();
  out.classes.resize(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out.classes[i].label = classes[i];
  }
  std::size_t hits = 0;
  for (std::size_t k = 0; k < gold.size(); ++k) {
    const std::size_t g = lookup(gold[k]);
    const std::size_t p = lookup(predicted[k]);
    if (g == p) {
      ++out.classes[g].true_positives;
      ++hits;
    } else {
      ++out.classes[p].false_positives;
      ++out.classes[g].false_negatives;
    }
  }

  std::size_t tp = 0, fp = 0, fn = 0;
  double f1_sum = 0.0;
  for (auto& c : out.classes) {
    c.precision = ratio(c.true_positives, c.true_positives + c.false_positives);
    c.recall = ratio(c.true_positives, c.true_positives + c.false_negatives);
    c.f1 = harmonic(c.precision, c.recall);
    f1_sum += c.f1;
    tp += c.true_positives;
    fp += c.false_positives;
    fn += c.false_negatives;
  }
  out.micro_precision = ratio(tp, tp + fp);
  out.micro_recall = ratio(tp, tp + fn);
  out.micro_f1 = harmonic(out.micro_precision, out.micro_recall);
  out.macro_f1 = f1_sum / static_cast<double>(classes.size());
  out.accuracy = ratio(hits, gold.size());
  return out;
}

std::string f1_csv(const LabelEval& eval) {
  std::ostringstream os;
  os.precision(10);
  os << "label,tp,fp,fn,precision,recall,f1\n";
  for (const auto& c : eval.classes) {
    os << c.label << ',' << c.true_positives << ',' << c.false_positives << ','
       << c.false_negatives << ',' << c.precision << ',' << c.recall << ','
       << c.f1 << '\n';
  }
  os << "micro,,,," << eval.micro_precision << ',' << eval.micro_recall << ','
     << eval.micro_f1 << '\n';
  os << "macro,,,,,," << eval.macro_f1 << '\n';
  return os.str();
}

}  // namespace newsprint::eval
