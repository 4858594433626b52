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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each check stops at its first counterexample and reports
// it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "generators.hpp"
#include "newsprint/analysis/bootstrap.hpp"
#include "newsprint/analysis/cluster.hpp"
#include "newsprint/analysis/readability.hpp"
#include "newsprint/analysis/topics.hpp"
#include "newsprint/eval/cer.hpp"
#include "newsprint/eval/f1.hpp"
#include "newsprint/image/tiles.hpp"
#include "newsprint/layout/postprocess.hpp"
#include "newsprint/metrics/score.hpp"
#include "newsprint/ocr/merge.hpp"
#include "newsprint/ocr/repetition.hpp"
#include "newsprint/pipeline/config.hpp"
#include "newsprint/pipeline/run.hpp"
#include "newsprint/text/post.hpp"
#include "newsprint/util/strings.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

namespace {

namespace fs = std::filesystem;
using namespace newsprint;
using testing::Rng;
using testing::uniform;

// Thrown by expect() with a description of the counterexample.
struct Counterexample : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename... Parts>
void expect(bool ok, const Parts&... parts) {
  if (ok) return;
  std::ostringstream os;
  (os << ... << parts);
  throw Counterexample(os.str());
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0: no runtime bound
  std::function<std::string()> check;  // returns a short summary
};

// --- 1 ------------------------------------------------------------------

// Every string over {a,b,c} of length <= n, shortest first.
std::vector<std::string> all_strings(int n) {
  std::vector<std::string> out = {""};
  std::size_t begin = 0;
  for (int len = 1; len <= n; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : {'a', 'b', 'c'}) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

void check_cer_pair(const std::string& ref, const std::string& hyp) {
  const auto d = testing::brute_edit_distance(utf8_decode(ref), utf8_decode(hyp));
  if (ref.empty()) {
    if (hyp.empty()) {
      expect(eval::cer(ref, hyp).cer == 0.0, "empty pair");
    } else {
      bool thrown = false;
      try {
        eval::cer(ref, hyp);
      } catch (const eval::DegenerateReference&) {
        thrown = true;
      }
      expect(thrown, "empty reference accepted for hyp=", hyp);
    }
    return;
  }
  const auto r = eval::cer(ref, hyp);
  expect(r.counts.errors() == d, "distance ref=", ref, " hyp=", hyp, " got ",
         r.counts.errors(), " want ", d);
  expect(r.counts.reference_length() == ref.size(), "S+D+C != |ref| for ", ref, "/", hyp);
  expect(r.cer == static_cast<double>(d) / static_cast<double>(ref.size()),
         "cer value ref=", ref, " hyp=", hyp);
}

std::string criterion_cer() {
  expect(eval::cer("ab", "ababab").cer == 2.0, "cer(ab, ababab) != 2");
  // Every pair with both sides of length <= 6.
  const auto small = all_strings(6);
  std::size_t pairs = 0;
  for (const auto& ref : small) {
    for (const auto& hyp : small) {
      check_cer_pair(ref, hyp);
      ++pairs;
    }
  }
  // Every reference of length <= 12 against hypotheses of every length
  // 0..12.
  const auto all = all_strings(12);
  Rng rng(101);
  for (const auto& ref : all) {
    std::string hyp;
    for (int len = 0; len <= 12; len += 3) {
      hyp.clear();
      for (int i = 0; i < len; ++i) hyp.push_back("abc"[uniform(rng, 0, 2)]);
      check_cer_pair(ref, hyp);
      ++pairs;
    }
  }
  return std::to_string(pairs) + " pairs";
}

// --- 2 ------------------------------------------------------------------

std::string criterion_coverage() {
  Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const auto boxes = testing::random_boxes(rng, 64, 64, uniform(rng, 0, 12));
    const auto want = testing::brute_mask(64, 64, boxes);
    const auto got = metrics::count_pixels({0, 0, 64, 64}, boxes);
    expect(got.covered == want.covered && got.overlapped == want.overlapped,
           "sweep mismatch in trial ", trial);
    const auto mask = metrics::CoverageMask::from_boxes(64, 64, boxes);
    expect(mask.pixels_at_least(1) == want.covered &&
               mask.pixels_at_least(2) == want.overlapped,
           "mask mismatch in trial ", trial);
    layout::PageLayout page;
    page.width = 64;
    page.height = 64;
    page.boxes = boxes;
    const auto s = metrics::score_layout(page);
    expect(s.coverage == static_cast<double>(want.covered) / 4096.0 &&
               s.overlap == static_cast<double>(want.overlapped) / 4096.0,
           "score mismatch in trial ", trial);
  }
  return "200 sets";
}

// --- 3 ------------------------------------------------------------------

void check_postprocess_invariants(const layout::PageLayout& in,
                                  const layout::PageLayout& out, bool fill,
                                  int trial) {
  for (std::size_t i = 0; i < out.boxes.size(); ++i) {
    const auto& a = out.boxes[i];
    for (std::size_t j = i + 1; j < out.boxes.size(); ++j) {
      const auto& b = out.boxes[j];
      const bool same = a.full_width || b.full_width || a.column == b.column;
      const bool x_overlap = std::max(a.x1, b.x1) < std::min(a.x2, b.x2);
      expect(!same || !x_overlap || std::min(a.y2, b.y2) <= std::max(a.y1, b.y1),
             "page ", trial, ": ", a.id, " overlaps ", b.id);
    }
  }
  expect(metrics::score_layout(out).coverage >= metrics::score_layout(in).coverage,
         "page ", trial, ": coverage decreased (fill=", fill, ")");
  if (!fill) return;
  for (int c = 0; c < static_cast<int>(out.columns.size()); ++c) {
    std::vector<std::pair<int, int>> spans;
    for (const auto& b : out.boxes) {
      if (b.full_width || b.column == c) spans.push_back({b.y1, b.y2});
    }
    std::sort(spans.begin(), spans.end());
    int reach = out.print_area.y1;
    for (const auto& [y1, y2] : spans) {
      expect(y1 <= reach, "page ", trial, ": void in column ", c, " at ", reach);
      reach = std::max(reach, y2);
    }
    expect(reach >= out.print_area.y2, "page ", trial, ": column ", c,
           " stops short at ", reach);
  }
}

std::string criterion_postprocess() {
  Rng rng(103);
  double gain = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto in = testing::random_newspaper(rng);
    layout::PostprocessConfig simple_cfg, fill_cfg;
    fill_cfg.fill_columns = true;
    const auto none = layout::reclass_invalid_only(in);
    const auto simple = layout::postprocess_bboxes(in, simple_cfg);
    const auto fill = layout::postprocess_bboxes(in, fill_cfg);
    check_postprocess_invariants(in, simple, false, trial);
    check_postprocess_invariants(in, fill, true, trial);
    expect(layout::postprocess_bboxes(simple, simple_cfg) == simple, "page ", trial,
           ": not idempotent");
    expect(layout::postprocess_bboxes(fill, fill_cfg) == fill, "page ", trial,
           ": not idempotent with fill");
    const double c_none = metrics::score_layout(none).coverage;
    const double c_simple = metrics::score_layout(simple).coverage;
    const double c_fill = metrics::score_layout(fill).coverage;
    expect(c_fill >= c_simple && c_simple >= c_none, "page ", trial,
           ": coverage order none=", c_none, " simple=", c_simple, " fill=", c_fill);
    gain += c_fill - c_none;
  }
  std::ostringstream os;
  os << "100 pages, mean coverage gain " << gain / 100;
  return os.str();
}

// --- 4 ------------------------------------------------------------------

std::string criterion_tiling() {
  layout::BoundingBox box;
  box.x2 = 100;
  box.y2 = 390;
  const auto plan = image::plan_tiles(box, 1.5, 0.2);
  const std::vector<layout::TileSpan> want = {{0, 150}, {120, 150}, {240, 150}};
  expect(plan.tiles == want, "w=100 h=390 tiles differ");
  Rng rng(104);
  for (int trial = 0; trial < 1000; ++trial) {
    const int w = uniform(rng, 1, 600);
    const int h = uniform(rng, 1, 6000);
    box.x2 = w;
    box.y2 = h;
    const auto tiles = image::plan_tiles(box, 1.5, 0.2).tiles;
    expect(!tiles.empty() && tiles.front().y_offset == 0, "w=", w, " h=", h, ": bad start");
    expect(tiles.back().y_offset + tiles.back().height == h, "w=", w, " h=", h,
           ": last tile not anchored at the bottom");
    for (std::size_t i = 0; i + 1 < tiles.size(); ++i) {
      const int end = tiles[i].y_offset + tiles[i].height;
      expect(tiles[i + 1].y_offset <= end, "w=", w, " h=", h, ": gap after tile ", i);
      expect(end - tiles[i + 1].y_offset >= 0.2 * tiles[i].height - 1e-9, "w=", w, " h=", h,
             ": overlap below 0.2 t after tile ", i);
    }
  }
  return "example + 1000 boxes";
}

// --- 5 ------------------------------------------------------------------

std::string criterion_titles() {
  expect(text::is_title("ACCRINGTON."), "ACCRINGTON.");
  expect(!text::is_title("IV."), "IV.");
  expect(!text::is_title("HMPH GRRK"), "HMPH GRRK");
  expect(!text::is_title("The Great Exhibition"), "The Great Exhibition");
  static constexpr char kAlphabet[] = {'A', 'a', 'E', '.', ' '};
  std::size_t checked = 0;
  std::string s;
  for (int len = 0; len <= 12; ++len) {
    std::vector<int> digits(len, 0);
    s.assign(len, kAlphabet[0]);
    while (true) {
      expect(text::is_title(s) == testing::reference_is_title(s), "disagree on \"", s, "\"");
      ++checked;
      int k = len - 1;
      while (k >= 0 && digits[k] == 4) {
        digits[k] = 0;
        s[k] = kAlphabet[0];
        --k;
      }
      if (k < 0) break;
      s[k] = kAlphabet[++digits[k]];
    }
  }
  return std::to_string(checked) + " strings";
}

// --- 6 ------------------------------------------------------------------

std::string criterion_split_merge() {
  Rng rng(106);
  for (int trial = 0; trial < 500; ++trial) {
    const auto original = testing::random_lines(rng, uniform(rng, 1, 60));
    const int per_tile = uniform(rng, 3, 20);
    const auto tiles = ocr::split_text_overlapping(original, per_tile, 0.2);
    expect(ocr::merge_tile_texts(tiles, 0.2) == original, "trial ", trial, " (",
           tiles.size(), " tiles of ", per_tile, " lines)");
  }
  return "500 texts";
}

// --- 7 ------------------------------------------------------------------

// Longest run of back-to-back copies of any unit of >= min_unit code points.
std::size_t max_consecutive_repeats(const std::u32string& s, std::size_t min_unit) {
  std::size_t best = s.empty() ? 0 : 1;
  for (std::size_t p = min_unit; p <= s.size() / 2; ++p) {
    for (std::size_t start = 0; start + 2 * p <= s.size(); ++start) {
      std::size_t copies = 1;
      while (start + (copies + 1) * p <= s.size() &&
             s.compare(start + copies * p, p, s, start, p) == 0) {
        ++copies;
      }
      best = std::max(best, copies);
    }
  }
  return best;
}

std::string criterion_repetition() {
  const ocr::RepetitionConfig cfg;
  const std::string phrase = "the honourable member for the borough of";
  expect(utf8_length(phrase) == 40, "phrase length");
  for (std::size_t copies = 5; copies <= 12; ++copies) {
    std::string s = "Mr. Speaker said that ";
    for (std::size_t k = 0; k < copies; ++k) s += phrase;
    expect(ocr::has_repetition(s, cfg), copies, " copies not flagged");
  }
  {
    std::string four;
    for (int k = 0; k < 4; ++k) four += phrase;
    expect(!ocr::has_repetition(four, cfg), "4 copies flagged");
  }
  Rng rng(107);
  std::size_t negatives = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string s;
    const int len = uniform(rng, 0, 200);
    const int alpha = uniform(rng, 1, 4);
    while (static_cast<int>(s.size()) < len) {
      if (uniform(rng, 0, 3) == 0) {
        std::string unit;
        for (int i = uniform(rng, 1, 40); i > 0; --i) unit += static_cast<char>('a' + uniform(rng, 0, alpha));
        for (int k = uniform(rng, 2, 6); k > 0; --k) s += unit;
      } else {
        s += static_cast<char>('a' + uniform(rng, 0, alpha));
      }
    }
    s.resize(std::min<std::size_t>(s.size(), 200));
    const auto u = utf8_decode(s);
    const bool flagged = ocr::has_repetition(s, cfg);
    const std::size_t run = max_consecutive_repeats(u, cfg.min_unit);
    expect(flagged == (run >= cfg.min_repeats), "\"", s, "\" flagged=", flagged,
           " max run=", run);
    expect(flagged == testing::brute_repetition(u, cfg.min_unit, cfg.min_repeats),
           "oracle disagrees on \"", s, "\"");
    if (!flagged) ++negatives;
  }
  return "3000 texts, " + std::to_string(negatives) + " below threshold";
}

// --- 8 ------------------------------------------------------------------

std::string criterion_f1() {
  Rng rng(108);
  const std::vector<std::string> classes = {"article", "advert", "poem/song/story", "other"};
  for (int trial = 0; trial < 1000; ++trial) {
    const int k = uniform(rng, 1, 4);
    const std::vector<std::string> used(classes.begin(), classes.begin() + k);
    std::vector<std::string> gold, pred;
    for (int i = uniform(rng, 1, 200); i > 0; --i) {
      gold.push_back(used[uniform(rng, 0, k - 1)]);
      pred.push_back(uniform(rng, 0, 2) == 0 ? gold.back() : used[uniform(rng, 0, k - 1)]);
    }
    const auto e = eval::f1_scores(gold, pred, used);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < gold.size(); ++i) hits += gold[i] == pred[i];
    const double accuracy = static_cast<double>(hits) / static_cast<double>(gold.size());
    expect(e.micro_f1 == accuracy && e.accuracy == accuracy, "trial ", trial,
           ": micro F1 ", e.micro_f1, " accuracy ", accuracy);
  }
  // a: tp2 fp0 fn1, b: tp1 fp1 fn1, c: tp1 fp1 fn0, d declared but absent.
  const auto e = eval::f1_scores({"a", "a", "a", "b", "b", "c"}, {"a", "a", "b", "b", "c", "c"},
                                 {"a", "b", "c", "d"});
  const double fa = 0.8, fb = 0.5, fc = 2.0 / 3.0;
  expect(std::abs(e.classes[0].f1 - fa) <= 1e-12 && std::abs(e.classes[1].f1 - fb) <= 1e-12 &&
             std::abs(e.classes[2].f1 - fc) <= 1e-12 && e.classes[3].f1 == 0.0,
         "per-class F1");
  expect(std::abs(e.macro_f1 - (fa + fb + fc) / 4.0) <= 1e-12, "macro F1 ", e.macro_f1);
  expect(std::abs(e.micro_f1 - 4.0 / 6.0) <= 1e-12, "micro F1 ", e.micro_f1);
  return "1000 datasets + hand example";
}

// --- 9 ------------------------------------------------------------------

std::vector<double> random_probs(Rng& rng) {
  std::vector<double> v(analysis::kTopics.size());
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double total = 0;
  for (auto& x : v) total += (x = u(rng));
  for (auto& x : v) x /= total;
  return v;
}

std::vector<std::string> members_of(const analysis::MergeTree& tree, int node) {
  const int n = static_cast<int>(tree.labels.size());
  if (node < n) return {tree.labels[node]};
  const auto& m = tree.merges[node - n];
  auto out = members_of(tree, m.left);
  const auto right = members_of(tree, m.right);
  out.insert(out.end(), right.begin(), right.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string criterion_analysis() {
  Rng rng(109);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<analysis::TopicDistribution> items;
    for (int i = uniform(rng, 3, 9); i > 0; --i) {
      items.push_back({"P" + std::to_string(items.size()), random_probs(rng)});
    }
    const auto tree = analysis::hcluster(items);
    const auto naive =
        testing::naive_average_linkage(tree.labels, analysis::cosine_distances(items));
    expect(tree.merges.size() == naive.size(), "distribution ", trial, ": merge count");
    for (std::size_t k = 0; k < naive.size(); ++k) {
      expect(members_of(tree, tree.merges[k].left) == naive[k].left_members &&
                 members_of(tree, tree.merges[k].right) == naive[k].right_members,
             "distribution ", trial, ": merge ", k, " joins different clusters");
      expect(std::abs(tree.merges[k].height - naive[k].height) <= 1e-12, "distribution ",
             trial, ": merge ", k, " height");
    }
  }
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<double> a(uniform(rng, 1, 17)), b(a.size());
    for (auto& x : a) x = u(rng);
    for (auto& x : b) x = u(rng);
    const double s = analysis::cosine_similarity(a, b);
    expect(s >= -1.0 && s <= 1.0, "cosine out of bounds: ", s);
    expect(s == analysis::cosine_similarity(b, a), "cosine not symmetric");
    expect(analysis::cosine_similarity(a, a) <= 1.0 &&
               std::abs(analysis::cosine_similarity(a, a) - 1.0) <= 1e-12,
           "self similarity");
  }
  const double flesch = analysis::flesch_reading_ease("The cat sat.");
  expect(std::abs(flesch - 119.19) <= 1e-9, "flesch(The cat sat.) = ", flesch);
  std::vector<double> scores;
  for (int i = 0; i < 300; ++i) scores.push_back(u(rng) * 50 + 40);
  const auto b1 = analysis::bootstrap_median(scores, 1000, 7);
  const auto b2 = analysis::bootstrap_median(scores, 1000, 7);
  expect(b1.median == b2.median && b1.ci_low == b2.ci_low && b1.ci_high == b2.ci_high,
         "bootstrap not deterministic");
  return "6 trees, 10000 cosine pairs";
}

// --- 10, 11 -------------------------------------------------------------

const fs::path kGolden = fs::path(NEWSPRINT_FIXTURE_DIR) / "golden";

void copy_fixture(const fs::path& dir) {
  for (const char* name : {"config.yaml", "detections.jsonl", "labels.jsonl"}) {
    fs::copy_file(kGolden / name, dir / name);
  }
  fs::copy(kGolden / "pages", dir / "pages", fs::copy_options::recursive);
  fs::copy(kGolden / "mock", dir / "mock", fs::copy_options::recursive);
}

pipeline::RunResult golden_run(const fs::path& dir, int workers) {
  pipeline::RunOptions opts;
  opts.workers = workers;
  auto result = pipeline::run_pipeline(pipeline::load_config(dir / "config.yaml"), opts);
  expect(result.ok(), pipeline::failure_summary(result));
  return result;
}

std::string criterion_golden() {
  const auto expected = testing::slurp(kGolden / "expected" / "dataset.jsonl");
  std::size_t runs = 0;
  for (int workers : {1, 1, 4, 8}) {
    testing::TempDir dir;
    copy_fixture(dir.path());
    golden_run(dir.path(), workers);
    const auto got = testing::slurp(dir / "out" / "dataset.jsonl");
    expect(got == expected, "dataset differs with ", workers, " workers");
    ++runs;
    // A resumed run rewrites the outputs from the stage files.
    golden_run(dir.path(), workers);
    expect(testing::slurp(dir / "out" / "dataset.jsonl") == expected,
           "resumed dataset differs with ", workers, " workers");
  }
  return std::to_string(runs) + " fresh runs, 1/4/8 workers";
}

std::string criterion_tokens() {
  std::int64_t scripted = 0;
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(kGolden / "mock")) {
    if (e.path().extension() != ".json") continue;
    const auto j = nlohmann::json::parse(testing::slurp(e.path()));
    scripted += j.at("prompt_tokens").get<std::int64_t>() +
                j.at("completion_tokens").get<std::int64_t>();
    ++files;
  }
  testing::TempDir dir;
  copy_fixture(dir.path());
  const auto r = golden_run(dir.path(), 2);
  const auto& m = r.manifest;
  expect(m.total_tokens() == scripted, "reported ", m.total_tokens(), " tokens, scripted ",
         scripted);
  const double cost = static_cast<double>(scripted) * 0.075 / 1e6;
  expect(m.cost == cost, "cost ", m.cost, " want ", cost);
  std::ostringstream os;
  os << scripted << " tokens over " << files << " replies, cost $" << m.cost;
  return os.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "CER matches brute-force edit distance", 60, criterion_cer},
      {2, "coverage/overlap match per-pixel count", 30, criterion_coverage},
      {3, "postprocess invariants and coverage order", 0, criterion_postprocess},
      {4, "tiling geometry", 5, criterion_tiling},
      {5, "title test truth table", 60, criterion_titles},
      {6, "split/merge round trip", 0, criterion_split_merge},
      {7, "repetition detector", 0, criterion_repetition},
      {8, "micro F1 equals accuracy", 0, criterion_f1},
      {9, "clustering, cosine, readability, bootstrap", 0, criterion_analysis},
      {10, "golden run is byte-identical", 120, criterion_golden},
      {11, "token and cost accounting", 0, criterion_tokens},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.check();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_seconds > 0 && secs > c.budget_seconds) {
      ok = false;
      detail += " (over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget)";
    }
    failures += !ok;
    std::printf("%s  %2d  %-44s %7.2fs  %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
