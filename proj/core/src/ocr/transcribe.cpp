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

#include "newsprint/ocr/transcribe.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "newsprint/image/deskew.hpp"
#include "newsprint/ocr/merge.hpp"
#include "newsprint/ocr/prompts.hpp"
#include "newsprint/util/parallel.hpp"

namespace newsprint::ocr {
namespace {

struct PassResult {
  std::vector<std::string> texts;
  bool repeated = false;
};

PassResult run_pass(const layout::BoundingBox& box, const image::TilePlan& plan,
                    const image::GrayImage& page, Backend& backend,
                    const TranscribeOptions& opts, int pass,
                    std::string_view prompt, OcrRecord& rec) {
  PassResult out;
  for (std::size_t t = 0; t < plan.tiles.size(); ++t) {
    const auto& span = plan.tiles[t];
    const layout::Rect r{box.x1, box.y1 + span.y_offset, box.x2,
                         box.y1 + span.y_offset + span.height};
    image::GrayImage tile = image::crop(page, r);
    if (opts.image.deskew) tile = image::deskew(tile, opts.image);

    BackendRequest req;
    req.image_png = image::encode_png(tile, opts.image.bit_depth);
    req.prompt = std::string(prompt);
    req.max_tokens = opts.token_limit;
    req.box_id = box.id;
    req.tile_index = static_cast<int>(t);
    req.pass = pass;

    int attempts = 0;
    BackendResponse resp;
    try {
      resp = send_with_retry(backend, req, opts.retry, opts.limiter, &attempts);
    } catch (const TransportError&) {
      rec.requests += attempts;
      throw;
    }
    rec.requests += attempts;
    rec.prompt_tokens += resp.prompt_tokens;
    rec.completion_tokens += resp.completion_tokens;
    if (resp.truncated || resp.completion_tokens >= opts.token_limit) {
      rec.flags.token_limit_hit = true;
    }
    if (has_repetition(resp.text, opts.repetition)) out.repeated = true;
    out.texts.push_back(std::move(resp.text));
  }
  return out;
}

}  // namespace

OcrRecord transcribe_box(const std::string& page_id,
                         const layout::BoundingBox& box,
                         const image::TilePlan& plan,
                         const image::GrayImage& page, Backend& backend,
                         const TranscribeOptions& opts) {
  OcrRecord rec;
  rec.page_id = page_id;
  rec.box_id = box.id;
  rec.reading_order = box.reading_order.value_or(0);
  rec.box_class = box.cls.name();
  rec.backend = backend.name();
  const Prompt prompt = select_prompt(box.cls);

  try {
    PassResult first = run_pass(box, plan, page, backend, opts, 0, prompt.text,
                                rec);
    double overlap = plan.overlap_fraction;
    if (first.repeated && !plan.tiles.empty()) {
      rec.flags.retried = 1;
      // Halve the actual tile height so uncropped boxes get split too.
      const double half =
          std::max(1.0, std::floor(plan.tiles.front().height / 2.0));
      const auto retry_plan = image::plan_tiles(
          box, half / std::max(1, box.width()), plan.overlap_fraction);
      PassResult second = run_pass(box, retry_plan, page, backend, opts, 1,
                                   prompt.text, rec);
      rec.flags.repetition_detected = second.repeated;
      first = std::move(second);
      overlap = retry_plan.overlap_fraction;
    }
    rec.merged_text = merge_tile_texts(first.texts, overlap);
    rec.tile_texts = std::move(first.texts);
  } catch (const TransportError& e) {
    rec.tile_texts.clear();
    rec.merged_text.clear();
    rec.flags.error = true;
    rec.flags.error_message = e.what();
  }
  return rec;
}

std::vector<OcrRecord> transcribe_all(const std::vector<OcrJob>& jobs,
                                      Backend& backend,
                                      const TranscribeOptions& opts,
                                      int workers) {
  std::vector<OcrRecord> out(jobs.size());
  parallel_for(jobs.size(), workers, [&](std::size_t i) {
    const auto& job = jobs[i];
    out[i] = transcribe_box(job.page_id, *job.box, job.plan, *job.page,
                            backend, opts);
  });
  std::stable_sort(out.begin(), out.end(),
                   [](const OcrRecord& a, const OcrRecord& b) {
                     return std::tie(a.page_id, a.reading_order, a.box_id) <
                            std::tie(b.page_id, b.reading_order, b.box_id);
                   });
  return out;
}

}  // namespace newsprint::ocr
