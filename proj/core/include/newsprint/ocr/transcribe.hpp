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

#ifndef NEWSPRINT_OCR_TRANSCRIBE_HPP_
#define NEWSPRINT_OCR_TRANSCRIBE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "newsprint/image/config.hpp"
#include "newsprint/image/image.hpp"
#include "newsprint/image/tiles.hpp"
#include "newsprint/layout/box.hpp"
#include "newsprint/ocr/backend.hpp"
#include "newsprint/ocr/repetition.hpp"

namespace newsprint::ocr {

class RateLimiter;

struct OcrFlags {
  bool repetition_detected = false;
  bool token_limit_hit = false;
  // Number of repetition retries performed (0 or 1).
  int retried = 0;
  bool error = false;
  std::string error_message;

  bool operator==(const OcrFlags&) const = default;
};

struct OcrRecord {
  std::string page_id;
  std::string box_id;
  int reading_order = 0;
  std::string box_class;
  std::vector<std::string> tile_texts;
  std::string merged_text;
  OcrFlags flags;
  std::string backend;
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
  int requests = 0;

  bool operator==(const OcrRecord&) const = default;
};

struct TranscribeOptions {
  image::ImagePrepConfig image;
  int token_limit = 4096;
  RetryPolicy retry;
  RepetitionConfig repetition;
  RateLimiter* limiter = nullptr;
};

// Crops every tile of `plan` from the page, sends it, and merges the
// replies. If any tile reply repeats, the box is sent once more with tiles
// half as tall; the flag stays set if that pass repeats too. Transport
// failures after retries yield an empty record with flags.error set.
// AuthError propagates.
OcrRecord transcribe_box(const std::string& page_id,
                         const layout::BoundingBox& box,
                         const image::TilePlan& plan,
                         const image::GrayImage& page, Backend& backend,
                         const TranscribeOptions& opts);

struct OcrJob {
  std::string page_id;
  const layout::BoundingBox* box = nullptr;
  image::TilePlan plan;
  const image::GrayImage* page = nullptr;
};

// Runs jobs on up to `workers` threads (each holds at most one request in
// flight). Records come back sorted by (page_id, reading_order, box_id)
// whatever the completion order.
std::vector<OcrRecord> transcribe_all(const std::vector<OcrJob>& jobs,
                                      Backend& backend,
                                      const TranscribeOptions& opts,
                                      int workers);

}  // namespace newsprint::ocr

#endif  // NEWSPRINT_OCR_TRANSCRIBE_HPP_
