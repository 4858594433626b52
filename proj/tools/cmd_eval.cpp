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

#include <spdlog/spdlog.h>

#include <fstream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"
#include "newsprint/analysis/bootstrap.hpp"
#include "newsprint/analysis/cluster.hpp"
#include "newsprint/analysis/phrases.hpp"
#include "newsprint/analysis/readability.hpp"
#include "newsprint/analysis/topics.hpp"
#include "newsprint/eval/f1.hpp"
#include "newsprint/eval/report.hpp"
#include "newsprint/eval/testset.hpp"
#include "newsprint/ocr/record_io.hpp"
#include "newsprint/pipeline/dataset.hpp"

namespace newsprint::cli {
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// id -> text from a directory of <id>.txt files or an OCR record JSONL.
std::map<std::string, std::string> load_hypotheses(const fs::path& source) {
  std::map<std::string, std::string> out;
  if (fs::is_directory(source)) {
    for (const auto& e : fs::directory_iterator(source)) {
      if (e.path().extension() == ".txt") {
        out[e.path().stem().string()] = slurp(e.path());
      }
    }
    return out;
  }
  for (const auto& r : ocr::read_records(source)) out[r.box_id] = r.merged_text;
  return out;
}

// box_id -> label from JSONL lines {"box_id", <field>}.
std::map<std::string, std::string> load_labels(const fs::path& path,
                                               const std::string& field) {
  std::map<std::string, std::string> out;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (j.contains(field) && j[field].is_string()) {
        out[j.at("box_id").get<std::string>()] = j[field].get<std::string>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(n) + ": " +
                               e.what());
    }
  }
  return out;
}

}  // namespace

void register_evaluate(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand("evaluate", "OCR and classification metrics");
  cmd->require_subcommand(1);

  struct CerArgs {
    fs::path test_set;
    std::vector<fs::path> hypotheses;
    fs::path output;
    fs::path pairs;
  };
  auto cer_args = std::make_shared<CerArgs>();
  auto* cer = cmd->add_subcommand(
      "cer", "Character error rate against a <id>.txt/<id>.png test set");
  cer->add_option("--test-set", cer_args->test_set, "Test set directory")
      ->required();
  cer->add_option("--hypotheses", cer_args->hypotheses,
                  "OCR record JSONL or directory of <id>.txt; one group each")
      ->required();
  cer->add_option("-o,--output", cer_args->output, "Summary CSV (stdout)");
  cer->add_option("--pairs", cer_args->pairs, "Per-item CSV");
  cer->callback([cer_args, &status] {
    const auto items = eval::load_test_set(cer_args->test_set);
    std::vector<eval::EvalPair> pairs;
    std::size_t missing = 0;
    for (const auto& source : cer_args->hypotheses) {
      const auto hyps = load_hypotheses(source);
      const std::string group = source.stem().string();
      for (const auto& item : items) {
        const auto it = hyps.find(item.id);
        if (it == hyps.end()) {
          ++missing;
          continue;
        }
        pairs.push_back(
            eval::evaluate_pair(item.id, group, item.reference, it->second));
      }
    }
    if (missing > 0) {
      spdlog::warn("{} test items had no hypothesis and were skipped", missing);
    }
    emit(cer_args->output, eval::report_csv(eval::aggregate_report(pairs)));
    if (!cer_args->pairs.empty()) emit(cer_args->pairs, eval::pairs_csv(pairs));
    status = 0;
  });

  struct F1Args {
    fs::path gold;
    fs::path predicted;
    std::string field = "text_type";
    fs::path output;
  };
  auto f1_args = std::make_shared<F1Args>();
  auto* f1 = cmd->add_subcommand("f1", "Per-class, micro and macro F1");
  f1->add_option("--gold", f1_args->gold, "Gold label JSONL")->required();
  f1->add_option("--predicted", f1_args->predicted, "Predicted label JSONL")
      ->required();
  f1->add_option("--field", f1_args->field, "text_type or topic")
      ->capture_default_str()
      ->check(CLI::IsMember({"text_type", "topic"}));
  f1->add_option("-o,--output", f1_args->output, "CSV (stdout)");
  f1->callback([f1_args, &status] {
    const auto gold = load_labels(f1_args->gold, f1_args->field);
    const auto pred = load_labels(f1_args->predicted, f1_args->field);
    std::vector<std::string> g, p;
    for (const auto& [id, label] : gold) {
      const auto it = pred.find(id);
      if (it == pred.end()) continue;
      g.push_back(label);
      p.push_back(it->second);
    }
    if (g.size() < gold.size()) {
      spdlog::warn("{} gold items have no prediction", gold.size() - g.size());
    }
    std::vector<std::string> classes;
    if (f1_args->field == "topic") {
      classes.assign(analysis::kTopics.begin(), analysis::kTopics.end());
    } else {
      classes.assign(analysis::kTextTypes.begin(), analysis::kTextTypes.end());
    }
    emit(f1_args->output, eval::f1_csv(eval::f1_scores(g, p, classes)));
    status = 0;
  });
}

void register_analyze(CLI::App& app, int& status) {
  auto* cmd = app.add_subcommand(
      "analyze", "Topic similarity, readability and phrase series CSVs");
  struct Args {
    fs::path input;
    fs::path out_dir = "analysis";
    std::vector<std::string> phrases = {"Crystal Palace", "Great Exhibition"};
    std::size_t resamples = 2000;
    std::uint64_t seed = 0;
    std::string text_type;
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("-i,--input", args->input, "Dataset JSONL")->required();
  cmd->add_option("-o,--out-dir", args->out_dir)->capture_default_str();
  cmd->add_option("--phrase", args->phrases, "Phrase to track (repeatable)")
      ->capture_default_str();
  cmd->add_option("--resamples", args->resamples, "Bootstrap resamples")
      ->capture_default_str();
  cmd->add_option("--seed", args->seed)->capture_default_str();
  cmd->add_option("--text-type", args->text_type,
                  "Restrict topic and readability analysis to this type");
  cmd->callback([args, &status] {
    const auto rows = pipeline::read_dataset(args->input);
    std::map<std::string, std::vector<std::string>> topics;
    std::map<std::string, std::vector<double>> scores;
    std::vector<analysis::PhraseEntry> entries;
    for (const auto& r : rows) {
      entries.push_back({r.periodical, r.issue_date, r.text});
      if (!args->text_type.empty() && r.text_type != args->text_type) continue;
      if (r.topic) topics[r.periodical].push_back(*r.topic);
      const auto counts = analysis::count_text(r.text);
      if (counts.words > 0) {
        scores[r.periodical].push_back(analysis::flesch_reading_ease(counts));
      }
    }

    std::vector<analysis::TopicDistribution> dists;
    for (const auto& [name, t] : topics) {
      dists.push_back(analysis::topic_distribution(name, t));
    }
    if (!dists.empty()) {
      emit(args->out_dir / "similarity.csv",
           analysis::similarity_matrix_csv(dists));
    }
    if (dists.size() >= 2) {
      emit(args->out_dir / "merge_tree.csv",
           analysis::merge_tree_csv(analysis::hcluster(dists)));
    } else {
      spdlog::warn("fewer than two periodicals with topic labels; no tree");
    }

    std::ostringstream rd;
    rd.precision(10);
    rd << "periodical,entries,median,ci_low,ci_high,bootstrap_samples\n";
    for (const auto& [name, v] : scores) {
      const auto e = analysis::bootstrap_median(v, args->resamples, args->seed);
      rd << name << ',' << v.size() << ',' << e.median << ',' << e.ci_low << ','
         << e.ci_high << ',' << e.bootstrap_samples << '\n';
    }
    emit(args->out_dir / "readability.csv", rd.str());
    emit(args->out_dir / "phrases.csv",
         analysis::phrase_series_csv(
             analysis::phrase_series(entries, args->phrases)));
    status = 0;
  });
}

}  // namespace newsprint::cli
