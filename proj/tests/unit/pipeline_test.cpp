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

#include <filesystem>
#include <set>

#include <gtest/gtest.h>

#include "newsprint/layout/layout_io.hpp"
#include "newsprint/pipeline/config.hpp"
#include "newsprint/pipeline/dataset.hpp"
#include "newsprint/pipeline/labels.hpp"
#include "newsprint/pipeline/manifest.hpp"
#include "newsprint/ocr/record_io.hpp"
#include "newsprint/pipeline/run.hpp"
#include "temp_dir.hpp"

namespace newsprint::pipeline {
namespace {

namespace fs = std::filesystem;

const fs::path kGolden = fs::path(NEWSPRINT_FIXTURE_DIR) / "golden";

// Copies the fixture inputs (not the expected outputs) into dir.
void copy_fixture(const fs::path& dir) {
  for (const char* name : {"config.yaml", "detections.jsonl", "labels.jsonl"}) {
    fs::copy_file(kGolden / name, dir / name);
  }
  fs::copy(kGolden / "pages", dir / "pages", fs::copy_options::recursive);
  fs::copy(kGolden / "mock", dir / "mock", fs::copy_options::recursive);
}

TEST(Config, DefaultsAndOverrides) {
  const auto cfg = parse_config(R"(
inputs:
  detections: det.jsonl
ocr:
  mock_dir: replies
periodicals:
  NS2:
    mode: fill
    dpi: 200
)",
                                "/base");
  EXPECT_EQ(cfg.image.crop_ratio, 1.5);
  EXPECT_EQ(cfg.image.overlap_fraction, 0.2);
  EXPECT_EQ(cfg.image.dpi, 120.0);
  EXPECT_FALSE(cfg.image.deskew);
  EXPECT_EQ(cfg.postprocess.merge_height_ratio, 1.5);
  EXPECT_EQ(cfg.mode_for("Leader"), PostprocessMode::kSimple);
  EXPECT_EQ(cfg.mode_for("NS2"), PostprocessMode::kFill);
  EXPECT_TRUE(cfg.postprocess_for("NS2").fill_columns);
  EXPECT_EQ(cfg.image_for("NS2").dpi, 200.0);
  EXPECT_EQ(cfg.resolve(cfg.detections), fs::path("/base/det.jsonl"));
}

TEST(Config, CropRatioInfinity) {
  const auto cfg = parse_config("inputs: {detections: d}\nocr: {mock_dir: m}\nimage: {crop_ratio: .inf}\n", "/b");
  EXPECT_TRUE(std::isinf(cfg.image.crop_ratio));
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  EXPECT_THROW(parse_config("inputs: {detections: d}\nocr: {mock_dir: m}\nimage: {crop: 2}\n", "/b"),
               std::invalid_argument);
  EXPECT_THROW(parse_config("inputs: {detections: d}\nocr: {mock_dir: m}\nimage: {overlap_fraction: 1.2}\n", "/b"),
               std::invalid_argument);
  EXPECT_THROW(parse_config("ocr: {mock_dir: m}\n", "/b"), std::invalid_argument);
  EXPECT_ANY_THROW(parse_config("inputs: [", "/b"));
}

TEST(Config, HashIgnoresWorkersButNotSettings) {
  auto a = parse_config("inputs: {detections: d}\nocr: {mock_dir: m}\n", "/b");
  auto b = a;
  b.workers = 8;
  EXPECT_EQ(a.hash(), b.hash());
  b.image.overlap_fraction = 0.25;
  EXPECT_NE(a.hash(), b.hash());
}

TEST(Config, ExampleFileStatesTheDefaults) {
  const fs::path example = fs::path(NEWSPRINT_FIXTURE_DIR) / ".." / ".." / "config" / "example.yaml";
  const auto cfg = load_config(example);
  const auto minimal = parse_config(
      "inputs: {detections: detections.jsonl, image_dir: pages}\n"
      "ocr: {mock_dir: mock}\n"
      "periodicals: {NS2: {mode: fill}, Oversize: {dpi: 200}}\n",
      cfg.base_dir);
  EXPECT_EQ(cfg.canonical(), minimal.canonical());
}

TEST(Config, PageIdPattern) {
  const auto key = parse_page_id("NS2_1843-04-01_page_4", PipelineConfig{}.page_id_pattern);
  EXPECT_TRUE(key.matched);
  EXPECT_EQ(key.periodical, "NS2");
  EXPECT_EQ(key.issue_date, "1843-04-01");
  EXPECT_EQ(key.page, 4);
  EXPECT_FALSE(parse_page_id("scan0001", PipelineConfig{}.page_id_pattern).matched);
}

DatasetRow row(std::string box) {
  DatasetRow r;
  r.periodical = "NS2";
  r.issue_date = "1843-04-01";
  r.page = 1;
  r.page_id = "NS2_1843-04-01_page_1";
  r.box_id = std::move(box);
  r.cls = "text";
  r.text = "line one\nline two";
  return r;
}

TEST(Dataset, RoundTripAndFieldOrder) {
  auto r = row("b1");
  r.topic = "weather";
  const auto line = serialize_row(r);
  EXPECT_EQ(line.rfind(R"({"periodical":"NS2","issue_date":"1843-04-01","page":1,)", 0), 0u);
  EXPECT_NE(line.find(R"("text_type":null,"topic":"weather")"), std::string::npos);
  EXPECT_EQ(parse_row(line), r);
}

TEST(Labels, FullPartialAndUnknown) {
  testing::TempDir dir;
  std::vector<DatasetRow> rows = {row("a"), row("b"), row("c")};
  testing::spit(dir / "l.jsonl",
                R"({"box_id":"a","text_type":"article","topic":"politics"})"
                "\n"
                R"({"box_id":"b","text_type":"advert","topic":null})"
                "\n\n"
                R"({"box_id":"zzz","text_type":"other"})"
                "\n");
  const auto rep = ingest_labels(rows, dir / "l.jsonl");
  EXPECT_EQ(rep.labeled, 2u);
  EXPECT_EQ(rep.unlabeled, 1u);
  EXPECT_EQ(rep.unknown_ids, std::vector<std::string>{"zzz"});
  EXPECT_EQ(rows[0].topic, "politics");
  EXPECT_EQ(rows[1].text_type, "advert");
  EXPECT_FALSE(rows[1].topic.has_value());
  EXPECT_FALSE(rows[2].text_type.has_value());
}

TEST(Labels, RejectsBadValuesWithLineNumbers) {
  testing::TempDir dir;
  std::vector<DatasetRow> rows = {row("a")};
  testing::spit(dir / "bad.jsonl", R"({"box_id":"a","text_type":"article"})"
                                   "\n"
                                   R"({"box_id":"a","text_type":"equation"})"
                                   "\n");
  try {
    ingest_labels(rows, dir / "bad.jsonl");
    FAIL();
  } catch (const LabelError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  testing::spit(dir / "broken.jsonl", "{not json\n");
  EXPECT_THROW(ingest_labels(rows, dir / "broken.jsonl"), LabelError);
  testing::spit(dir / "dup.jsonl", R"({"box_id":"a"})" "\n" R"({"box_id":"a"})" "\n");
  EXPECT_THROW(ingest_labels(rows, dir / "dup.jsonl"), LabelError);
  testing::spit(dir / "topic.jsonl", R"({"box_id":"a","topic":"gardening"})" "\n");
  EXPECT_THROW(ingest_labels(rows, dir / "topic.jsonl"), LabelError);
}

TEST(Manifest, RoundTripAndMissingFile) {
  testing::TempDir dir;
  EXPECT_TRUE(load_manifest(dir / "none.json").markers.empty());
  RunManifest m;
  m.run_id = "r";
  m.config_hash = "abc";
  m.markers["p"]["ocr"] = stage_marker("abc", "ocr", "in");
  m.failures["q"] = "convert: unreadable";
  m.pages = 2;
  m.prompt_tokens = 10;
  m.completion_tokens = 5;
  m.cost = 1e-6;
  save_manifest(dir / "m.json", m);
  const auto back = load_manifest(dir / "m.json");
  EXPECT_EQ(back.markers, m.markers);
  EXPECT_EQ(back.failures, m.failures);
  EXPECT_EQ(back.total_tokens(), 15);
  EXPECT_NE(stage_marker("abc", "ocr", "in"), stage_marker("abd", "ocr", "in"));
}

TEST(ScaleLayout, HalvesCoordinates) {
  layout::PageLayout p;
  p.width = 1200;
  p.height = 1600;
  layout::BoundingBox b;
  b.x1 = 61;
  b.y1 = 100;
  b.x2 = 399;
  b.y2 = 701;
  p.boxes = {b};
  const auto s = scale_layout(p, 600, 800);
  EXPECT_EQ(s.width, 600);
  EXPECT_EQ(s.boxes[0].x1, 31);
  EXPECT_EQ(s.boxes[0].y2, 351);
}

class GoldenRun : public ::testing::Test {
 protected:
  void SetUp() override { copy_fixture(dir_.path()); }
  PipelineConfig config() const { return load_config(dir_ / "config.yaml"); }
  RunResult run(RunOptions opts = {}) const { return run_pipeline(config(), opts); }
  testing::TempDir dir_;
};

TEST_F(GoldenRun, MatchesExpectedOutput) {
  const auto r = run();
  ASSERT_TRUE(r.ok()) << failure_summary(r);
  EXPECT_EQ(r.ocr_errors, 0u);
  for (const char* name : {"dataset.jsonl", "articles.jsonl", "ocr.jsonl"}) {
    EXPECT_EQ(testing::slurp(dir_ / "out" / name),
              testing::slurp(kGolden / "expected" / name))
        << name;
  }
  ASSERT_TRUE(r.labels.has_value());
  EXPECT_EQ(r.labels->unknown_ids.size(), 1u);
}

TEST_F(GoldenRun, EveryBoxBecomesOneRow) {
  run();
  std::multiset<std::string> plan_ids;
  for (const auto& e : fs::directory_iterator(dir_ / "work" / "plan")) {
    for (const auto& page : layout::read_layouts(e.path())) {
      for (const auto& b : page.boxes) plan_ids.insert(b.id);
    }
  }
  std::multiset<std::string> row_ids;
  for (const auto& r : read_dataset(dir_ / "out" / "dataset.jsonl")) row_ids.insert(r.box_id);
  EXPECT_EQ(plan_ids, row_ids);
}

TEST_F(GoldenRun, RerunSkipsEverything) {
  run();
  const auto again = run();
  for (const auto& [stage, n] : again.executed) EXPECT_EQ(n, 0u) << stage;
  EXPECT_EQ(testing::slurp(dir_ / "out" / "dataset.jsonl"),
            testing::slurp(kGolden / "expected" / "dataset.jsonl"));
}

TEST_F(GoldenRun, DeletedStageOutputRecomputesOnlyThatStage) {
  run();
  fs::remove(dir_ / "work" / "ocr" / "NS2_1843-04-01_page_2.jsonl");
  const auto r = run();
  for (const auto& [stage, n] : r.executed) {
    EXPECT_EQ(n, stage == "ocr" ? 1u : 0u) << stage;
  }
  EXPECT_EQ(testing::slurp(dir_ / "out" / "dataset.jsonl"),
            testing::slurp(kGolden / "expected" / "dataset.jsonl"));
}

TEST_F(GoldenRun, ConfigChangeRecomputesEverything) {
  run();
  auto cfg = config();
  cfg.text.max_title_length = 60;
  const auto r = run_pipeline(cfg);
  for (const auto stage : kStages) EXPECT_EQ(r.executed.at(std::string(stage)), 3u) << stage;
}

TEST_F(GoldenRun, DryRunWritesNothing) {
  RunOptions opts;
  opts.dry_run = true;
  const auto plan = run(opts);
  for (const auto stage : kStages) EXPECT_EQ(plan.executed.at(std::string(stage)), 3u);
  EXPECT_FALSE(fs::exists(dir_ / "work"));
  EXPECT_FALSE(fs::exists(dir_ / "out"));

  run();
  fs::remove(dir_ / "work" / "plan" / "Leader_1851-05-03_page_1.jsonl");
  const auto partial = run(opts);
  EXPECT_EQ(partial.executed.at("convert"), 0u);
  EXPECT_EQ(partial.executed.at("plan"), 1u);
  EXPECT_FALSE(fs::exists(dir_ / "work" / "plan" / "Leader_1851-05-03_page_1.jsonl"));
}

TEST_F(GoldenRun, MissingImageIsAPageFailure) {
  fs::remove(dir_ / "pages" / "NS2_1843-04-01_page_2.png");
  const auto r = run();
  EXPECT_FALSE(r.ok());
  ASSERT_EQ(r.manifest.failures.size(), 1u);
  EXPECT_EQ(r.manifest.failures.begin()->first, "NS2_1843-04-01_page_2");
  EXPECT_NE(failure_summary(r).find("NS2_1843-04-01_page_2"), std::string::npos);
}

TEST_F(GoldenRun, TokenTotalsAndCost) {
  const auto r = run();
  std::int64_t prompt = 0, completion = 0;
  for (const auto& rec : ocr::read_records(dir_ / "out" / "ocr.jsonl")) {
    prompt += rec.prompt_tokens;
    completion += rec.completion_tokens;
  }
  EXPECT_EQ(r.manifest.prompt_tokens, prompt);
  EXPECT_EQ(r.manifest.completion_tokens, completion);
  EXPECT_DOUBLE_EQ(r.manifest.cost, static_cast<double>(prompt + completion) * 0.075 / 1e6);
}

}  // namespace
}  // namespace newsprint::pipeline
