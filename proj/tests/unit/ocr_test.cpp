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

#include <httplib.h>

#include <atomic>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "newsprint/image/tiles.hpp"
#include "newsprint/ocr/http_backend.hpp"
#include "newsprint/ocr/merge.hpp"
#include "newsprint/ocr/mock_backend.hpp"
#include "newsprint/ocr/prompts.hpp"
#include "newsprint/ocr/rate_limiter.hpp"
#include "newsprint/ocr/record_io.hpp"
#include "newsprint/ocr/repetition.hpp"
#include "newsprint/ocr/transcribe.hpp"
#include "newsprint/util/hash.hpp"
#include "newsprint/util/strings.hpp"
#include "oracles.hpp"
#include "temp_dir.hpp"

namespace newsprint::ocr {
namespace {

using layout::BoxClass;
using layout::BoxKind;

TEST(Prompts, ClassSelection) {
  EXPECT_EQ(select_prompt(BoxClass(BoxKind::kTitle)).kind, PromptKind::kText);
  EXPECT_NE(select_prompt(BoxClass(BoxKind::kText)).text.find(
                "transcribe the text including linebreaks"),
            std::string_view::npos);
  EXPECT_NE(select_prompt(BoxClass(BoxKind::kTable)).text.find("tab separated values (tsv)"),
            std::string_view::npos);
  EXPECT_EQ(select_prompt(BoxClass(BoxKind::kFigure)).text.rfind("Please describe the graphic", 0),
            0u);
  EXPECT_THROW(select_prompt(BoxClass(BoxKind::kAbandoned)), std::invalid_argument);
  EXPECT_THROW(select_prompt(BoxClass::invalid("equation")), std::invalid_argument);
}

std::string repeat(std::string_view s, int n) {
  std::string out;
  for (int i = 0; i < n; ++i) out += s;
  return out;
}

TEST(Repetition, Examples) {
  EXPECT_TRUE(has_repetition(repeat("abcdefgh", 10)));
  EXPECT_TRUE(has_repetition("Honsc of Commons agmist the bill now before Par- " +
                             repeat("Honsc of Commons agmist the bill now before Par-\n", 6)));
  EXPECT_FALSE(has_repetition(
      "The meeting of the council was held on Tuesday last, when the mayor "
      "presided. Mr. Smith moved that the petition be received, and the "
      "motion was seconded by Mr. Jones. After some discussion the council "
      "agreed to refer the matter to the finance committee, which will report "
      "at the next meeting. The price of corn in the market rose by two "
      "shillings the quarter, and the supply of cattle was short."));
  // Four copies are not enough.
  EXPECT_FALSE(has_repetition(repeat("abcdefgh", 4)));
  // Units shorter than the minimum do not count, but their multiples do:
  // 14 copies of "abc" hold only four copies of "abcabcabc".
  EXPECT_FALSE(has_repetition(repeat("abc", 14), {8, 5}));
  EXPECT_TRUE(has_repetition(repeat("abc", 15), {8, 5}));
  const auto hit = find_repetition("xx" + repeat("0123456789", 6));
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->start, 2u);
  EXPECT_EQ(hit->period, 10u);
  EXPECT_EQ(hit->length, 60u);
}

TEST(Repetition, MatchesBruteForce) {
  testing::Rng rng(41);
  for (int trial = 0; trial < 400; ++trial) {
    // Small alphabets and planted runs make repeats common.
    const int alpha = testing::uniform(rng, 1, 3);
    std::string s;
    const int len = testing::uniform(rng, 0, 200);
    while (static_cast<int>(s.size()) < len) {
      if (testing::uniform(rng, 0, 4) == 0) {
        std::string unit;
        const int p = testing::uniform(rng, 1, 12);
        for (int i = 0; i < p; ++i) unit += static_cast<char>('a' + testing::uniform(rng, 0, alpha));
        s += repeat(unit, testing::uniform(rng, 2, 6));
      } else {
        s += static_cast<char>('a' + testing::uniform(rng, 0, alpha));
      }
    }
    s.resize(std::min<std::size_t>(s.size(), 200));
    const RepetitionConfig cfg{static_cast<std::size_t>(testing::uniform(rng, 1, 8)),
                               static_cast<std::size_t>(testing::uniform(rng, 2, 5))};
    ASSERT_EQ(has_repetition(s, cfg),
              testing::brute_repetition(utf8_decode(s), cfg.min_unit, cfg.min_repeats))
        << s << " unit " << cfg.min_unit << " repeats " << cfg.min_repeats;
  }
}

TEST(Merge, Examples) {
  EXPECT_EQ(merge_tile_texts({"l1\nl2\nl3", "l3\nl4"}, 0.2), "l1\nl2\nl3\nl4");
  EXPECT_EQ(merge_tile_texts({"alpha", "beta"}, 0.2), "alpha\nbeta");
  EXPECT_EQ(merge_tile_texts({}, 0.2), "");
  EXPECT_EQ(merge_tile_texts({"only"}, 0.2), "only");
  // Near-identical seam lines still merge.
  EXPECT_EQ(merge_tile_texts({"first line\nthe market rose", "the markct rose\nlast"}, 0.2),
            "first line\nthe market rose\nlast");
}

TEST(Merge, LineSimilarity) {
  EXPECT_EQ(line_similarity("abc", "abc"), 1.0);
  EXPECT_EQ(line_similarity("  abc ", "abc"), 1.0);
  EXPECT_DOUBLE_EQ(line_similarity("abcd", "abce"), 0.75);
  EXPECT_EQ(line_similarity("", ""), 1.0);
}

TEST(Merge, BlankRunAcrossInteriorSeam) {
  // Tiles "l3\n\n" and "\n\nl7" share one blank line, not two.
  const std::string text = "l1\nl2\nl3\n\n\n\nl7\nl8\nl9";
  const auto tiles = split_text_overlapping(text, 3, 0.2);
  EXPECT_EQ(merge_tile_texts(tiles, 0.2), text);
}

TEST(Merge, SplitRoundTrip) {
  testing::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto text = testing::random_lines(rng, testing::uniform(rng, 1, 40));
    const int per_tile = testing::uniform(rng, 5, 15);
    const auto tiles = split_text_overlapping(text, per_tile, 0.2);
    ASSERT_EQ(merge_tile_texts(tiles, 0.2), text) << "trial " << trial;
  }
}

TEST(RateLimiter, SpacesRequestsOnInjectedClock) {
  double now = 0.0;
  std::vector<double> sleeps;
  RateLimiter limiter(
      60.0, 1.0, [&] { return now; },
      [&](double s) {
        sleeps.push_back(s);
        now += s;
      });
  for (int i = 0; i < 5; ++i) limiter.acquire();
  // One token up front, then one per second.
  EXPECT_NEAR(now, 4.0, 1e-9);
  EXPECT_EQ(sleeps.size(), 4u);
  EXPECT_THROW(RateLimiter(0.0), std::invalid_argument);
}

TEST(RateLimiter, BurstAllowsImmediateRequests) {
  double now = 0.0;
  RateLimiter limiter(
      120.0, 3.0, [&] { return now; }, [&](double s) { now += s; });
  for (int i = 0; i < 3; ++i) limiter.acquire();
  EXPECT_EQ(now, 0.0);
  limiter.acquire();
  EXPECT_NEAR(now, 0.5, 1e-9);
}

// Scripted backend: a function of the request, counting calls.
class FakeBackend : public Backend {
 public:
  using Script = std::function<BackendResponse(const BackendRequest&, int call)>;
  explicit FakeBackend(Script s) : script_(std::move(s)) {}
  BackendResponse send(const BackendRequest& r) override {
    int call;
    {
      std::lock_guard<std::mutex> lock(mu_);
      call = calls_++;
      requests_.push_back(r);
    }
    return script_(r, call);
  }
  std::string name() const override { return "fake"; }
  int calls() const { return calls_; }
  std::vector<BackendRequest> requests() const { return requests_; }

 private:
  Script script_;
  std::mutex mu_;
  int calls_ = 0;
  std::vector<BackendRequest> requests_;
};

layout::BoundingBox text_box(std::string id, int x1, int y1, int x2, int y2, int order = 0) {
  layout::BoundingBox b;
  b.id = std::move(id);
  b.x1 = x1;
  b.y1 = y1;
  b.x2 = x2;
  b.y2 = y2;
  b.reading_order = order;
  return b;
}

TranscribeOptions quick_options() {
  TranscribeOptions o;
  o.retry.backoff_seconds = 0;
  o.retry.max_retries = 2;
  return o;
}

TEST(Transcribe, OneCleanTile) {
  image::GrayImage page(200, 200, 255);
  const auto box = text_box("p_B0C0R0", 10, 10, 110, 60);
  FakeBackend fake([](const BackendRequest& r, int) {
    EXPECT_FALSE(r.image_png.empty());
    EXPECT_EQ(r.prompt, kTextPrompt);
    return BackendResponse{"Hello world", 100, 3, false};
  });
  const auto rec = transcribe_box("p", box, image::plan_tiles(box, 1.5, 0.2), page, fake,
                                  quick_options());
  EXPECT_EQ(rec.merged_text, "Hello world");
  EXPECT_EQ(rec.flags, OcrFlags{});
  EXPECT_EQ(rec.requests, 1);
  EXPECT_EQ(rec.prompt_tokens, 100);
  EXPECT_EQ(rec.completion_tokens, 3);
  EXPECT_EQ(rec.backend, "fake");
}

TEST(Transcribe, RepetitionTriggersOneRetryWithSmallerTiles) {
  image::GrayImage page(200, 400, 255);
  const auto box = text_box("b", 0, 0, 100, 140);
  const std::string phrase = "the quick brown fox jumps over the dogs ";  // 40 chars
  ASSERT_EQ(phrase.size(), 40u);
  FakeBackend fake([&](const BackendRequest&, int) {
    return BackendResponse{repeat(phrase, 50), 10, 500, false};
  });
  const auto plan = image::plan_tiles(box, 1.5, 0.2);
  ASSERT_EQ(plan.tiles.size(), 1u);
  const auto rec = transcribe_box("p", box, plan, page, fake, quick_options());
  EXPECT_TRUE(rec.flags.repetition_detected);
  EXPECT_EQ(rec.flags.retried, 1);
  const auto reqs = fake.requests();
  ASSERT_GT(reqs.size(), 1u);
  EXPECT_EQ(reqs[0].pass, 0);
  for (std::size_t i = 1; i < reqs.size(); ++i) EXPECT_EQ(reqs[i].pass, 1);
  // Halved tiles: 70 px high over a 140 px box.
  EXPECT_EQ(rec.tile_texts.size(), reqs.size() - 1);
  EXPECT_GE(rec.tile_texts.size(), 2u);
}

TEST(Transcribe, RetryThatCuresRepetitionClearsFlag) {
  image::GrayImage page(200, 400, 255);
  const auto box = text_box("b", 0, 0, 100, 100);
  FakeBackend fake([](const BackendRequest& r, int) {
    if (r.pass == 0) return BackendResponse{repeat("abcdefghij", 9), 1, 1, false};
    return BackendResponse{"clean " + std::to_string(r.tile_index), 1, 1, false};
  });
  const auto rec = transcribe_box("p", box, image::plan_tiles(box, 1.5, 0.2), page, fake,
                                  quick_options());
  EXPECT_FALSE(rec.flags.repetition_detected);
  EXPECT_EQ(rec.flags.retried, 1);
  EXPECT_EQ(rec.merged_text.rfind("clean 0", 0), 0u);
}

TEST(Transcribe, TokenLimitFlag) {
  image::GrayImage page(100, 100, 255);
  const auto box = text_box("b", 0, 0, 50, 50);
  auto opts = quick_options();
  opts.token_limit = 20;
  FakeBackend truncated([](const BackendRequest&, int) {
    return BackendResponse{"cut", 5, 3, true};
  });
  EXPECT_TRUE(transcribe_box("p", box, image::plan_tiles(box, 1.5, 0.2), page, truncated, opts)
                  .flags.token_limit_hit);
  FakeBackend at_limit([](const BackendRequest&, int) {
    return BackendResponse{"long", 5, 20, false};
  });
  EXPECT_TRUE(transcribe_box("p", box, image::plan_tiles(box, 1.5, 0.2), page, at_limit, opts)
                  .flags.token_limit_hit);
}

TEST(Transcribe, TransportErrorsRetryThenFlag) {
  image::GrayImage page(100, 400, 255);
  const auto box = text_box("b", 0, 0, 50, 300);
  const auto plan = image::plan_tiles(box, 1.5, 0.2);
  auto opts = quick_options();
  std::vector<double> slept;
  opts.retry.backoff_seconds = 0.5;
  opts.retry.sleep = [&](double s) { slept.push_back(s); };

  FakeBackend flaky([](const BackendRequest&, int call) -> BackendResponse {
    if (call == 0) throw TransportError("timeout");
    return {"ok", 1, 1, false};
  });
  auto rec = transcribe_box("p", box, plan, page, flaky, opts);
  EXPECT_FALSE(rec.flags.error);
  EXPECT_EQ(rec.requests, static_cast<int>(plan.tiles.size()) + 1);
  EXPECT_EQ(slept, std::vector<double>{0.5});

  slept.clear();
  FakeBackend down([](const BackendRequest&, int) -> BackendResponse {
    throw TransportError("connection refused");
  });
  rec = transcribe_box("p", box, plan, page, down, opts);
  EXPECT_TRUE(rec.flags.error);
  EXPECT_TRUE(rec.merged_text.empty());
  EXPECT_EQ(rec.requests, 1 + opts.retry.max_retries);
  EXPECT_LE(rec.requests, static_cast<int>(plan.tiles.size()) * (1 + opts.retry.max_retries));
  EXPECT_EQ(slept, (std::vector<double>{0.5, 1.0}));
}

TEST(Transcribe, AuthErrorPropagates) {
  image::GrayImage page(100, 100, 255);
  const auto box = text_box("b", 0, 0, 50, 50);
  FakeBackend denied([](const BackendRequest&, int) -> BackendResponse {
    throw AuthError("401");
  });
  EXPECT_THROW(transcribe_box("p", box, image::plan_tiles(box, 1.5, 0.2), page, denied,
                              quick_options()),
               AuthError);
}

TEST(Transcribe, RequestCountEqualsTilesWithoutRetries) {
  image::GrayImage page(120, 1000, 255);
  testing::Rng rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int h = testing::uniform(rng, 10, 999);
    const auto box = text_box("b", 0, 0, 100, h);
    const auto plan = image::plan_tiles(box, 1.5, 0.2);
    FakeBackend fake([](const BackendRequest& r, int) {
      return BackendResponse{"tile " + std::to_string(r.tile_index), 1, 1, false};
    });
    const auto rec = transcribe_box("p", box, plan, page, fake, quick_options());
    EXPECT_EQ(fake.calls(), static_cast<int>(plan.tiles.size()));
    EXPECT_EQ(rec.tile_texts.size(), plan.tiles.size());
  }
}

TEST(Transcribe, OutputOrderIndependentOfArrival) {
  image::GrayImage page(400, 400, 255);
  std::vector<layout::BoundingBox> boxes;
  for (int i = 0; i < 12; ++i) {
    boxes.push_back(text_box("box" + std::to_string(i), 0, i * 30, 100, i * 30 + 25, 11 - i));
  }
  std::vector<OcrJob> jobs;
  for (const auto& b : boxes) {
    jobs.push_back({"p", &b, image::plan_tiles(b, 1.5, 0.2), &page});
  }
  FakeBackend slow([](const BackendRequest& r, int call) {
    // Later calls answer sooner.
    std::this_thread::sleep_for(std::chrono::milliseconds(12 - call % 12));
    return BackendResponse{r.box_id, 1, 1, false};
  });
  const auto one = transcribe_all(jobs, slow, quick_options(), 1);
  const auto many = transcribe_all(jobs, slow, quick_options(), 4);
  ASSERT_EQ(one, many);
  for (std::size_t i = 1; i < many.size(); ++i) {
    const auto key = [](const OcrRecord& r) { return std::tie(r.page_id, r.reading_order); };
    EXPECT_LE(key(many[i - 1]), key(many[i]));
  }
}

TEST(MockBackend, ReadsJsonAndTextResponses) {
  testing::TempDir dir;
  testing::spit(dir / "b1.t0.json",
                R"({"text":"json reply","prompt_tokens":11,"completion_tokens":7,"finish_reason":"length"})");
  testing::spit(dir / "b1.t1.txt", "plain reply");
  testing::spit(dir / "b1.retry1.t0.txt", "second pass");
  MockBackend mock(dir.path());
  BackendRequest r;
  r.box_id = "b1";
  auto resp = mock.send(r);
  EXPECT_EQ(resp.text, "json reply");
  EXPECT_EQ(resp.prompt_tokens, 11);
  EXPECT_EQ(resp.completion_tokens, 7);
  EXPECT_TRUE(resp.truncated);
  r.tile_index = 1;
  r.prompt = "12345678";
  resp = mock.send(r);
  EXPECT_EQ(resp.text, "plain reply");
  EXPECT_EQ(resp.prompt_tokens, 2);
  EXPECT_EQ(resp.completion_tokens, 3);
  r.tile_index = 0;
  r.pass = 1;
  EXPECT_EQ(mock.send(r).text, "second pass");
  r.box_id = "missing";
  EXPECT_THROW(mock.send(r), TransportError);
  EXPECT_THROW(MockBackend(dir / "nope"), std::invalid_argument);
}

class LocalServer {
 public:
  explicit LocalServer(std::function<void(const httplib::Request&, httplib::Response&)> h) {
    server_.Post("/v1/chat/completions", std::move(h));
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~LocalServer() {
    server_.stop();
    thread_.join();
  }
  std::string endpoint() const {
    return "http://127.0.0.1:" + std::to_string(port_) + "/v1/chat/completions";
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

TEST(HttpBackend, SendsOpenAiStyleRequest) {
  nlohmann::json seen;
  std::string auth;
  LocalServer server([&](const httplib::Request& req, httplib::Response& res) {
    seen = nlohmann::json::parse(req.body);
    auth = req.get_header_value("Authorization");
    res.set_content(
        R"({"choices":[{"message":{"content":"THE TIMES"},"finish_reason":"stop"}],)"
        R"("usage":{"prompt_tokens":1200,"completion_tokens":4}})",
        "application/json");
  });
  HttpBackend backend(server.endpoint(), "pixtral-12b-2409", "secret", 5.0);
  BackendRequest r;
  r.image_png = "PNGDATA";
  r.prompt = std::string(kTextPrompt);
  r.max_tokens = 4096;
  const auto resp = backend.send(r);
  EXPECT_EQ(resp.text, "THE TIMES");
  EXPECT_EQ(resp.prompt_tokens, 1200);
  EXPECT_EQ(resp.completion_tokens, 4);
  EXPECT_FALSE(resp.truncated);
  EXPECT_EQ(auth, "Bearer secret");
  EXPECT_EQ(seen["model"], "pixtral-12b-2409");
  EXPECT_EQ(seen["max_tokens"], 4096);
  const auto& content = seen["messages"][0]["content"];
  EXPECT_EQ(seen["messages"][0]["role"], "user");
  EXPECT_EQ(content[0]["type"], "text");
  EXPECT_EQ(content[0]["text"], kTextPrompt);
  EXPECT_EQ(content[1]["type"], "image_url");
  EXPECT_EQ(content[1]["image_url"]["url"],
            "data:image/png;base64," + base64_encode("PNGDATA"));
}

TEST(HttpBackend, StatusCodesMapToErrors) {
  std::atomic<int> status{401};
  LocalServer server([&](const httplib::Request&, httplib::Response& res) {
    res.status = status;
    res.set_content(R"({"error":"x"})", "application/json");
  });
  HttpBackend backend(server.endpoint(), "m", "", 5.0);
  EXPECT_THROW(backend.send({}), AuthError);
  status = 403;
  EXPECT_THROW(backend.send({}), AuthError);
  status = 429;
  EXPECT_THROW(backend.send({}), TransportError);
  status = 503;
  EXPECT_THROW(backend.send({}), TransportError);
  status = 200;
  EXPECT_THROW(backend.send({}), TransportError);  // body lacks choices
}

TEST(HttpBackend, UnreachableIsTransportError) {
  HttpBackend backend("http://127.0.0.1:1/v1/chat/completions", "m", "", 1.0);
  EXPECT_THROW(backend.send({}), TransportError);
  EXPECT_THROW(HttpBackend("not a url", "m", "", 1.0), std::invalid_argument);
}

TEST(HttpBackend, ParsesLengthFinishAsTruncated) {
  const auto r = HttpBackend::parse_body(
      R"({"choices":[{"message":{"content":"abc"},"finish_reason":"length"}]})");
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.prompt_tokens, 0);
}

TEST(RecordIo, RoundTrip) {
  OcrRecord rec;
  rec.page_id = "p";
  rec.box_id = "p_B0C0R0";
  rec.reading_order = 3;
  rec.box_class = "title";
  rec.tile_texts = {"a\nb", "b\nc"};
  rec.merged_text = "a\nb\nc";
  rec.flags.repetition_detected = true;
  rec.flags.retried = 1;
  rec.backend = "mock";
  rec.prompt_tokens = 12;
  rec.completion_tokens = 5;
  rec.requests = 3;
  EXPECT_EQ(parse_record(serialize_record(rec)), rec);
  rec.flags.error = true;
  rec.flags.error_message = "boom";
  EXPECT_EQ(parse_record(serialize_record(rec)), rec);
}

}  // namespace
}  // namespace newsprint::ocr
