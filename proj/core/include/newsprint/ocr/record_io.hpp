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

#ifndef NEWSPRINT_OCR_RECORD_IO_HPP_
#define NEWSPRINT_OCR_RECORD_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "newsprint/ocr/transcribe.hpp"

namespace newsprint::ocr {

// One JSON object per line:
// {"page_id", "box_id", "reading_order", "class", "tile_texts",
//  "merged_text", "flags": {"repetition_detected", "token_limit_hit",
//  "retried", "error", "error_message"}, "backend", "prompt_tokens",
//  "completion_tokens", "requests"}
std::string serialize_record(const OcrRecord& rec);
// Throws std::runtime_error on malformed input.
OcrRecord parse_record(const std::string& line);

std::vector<OcrRecord> read_records(const std::filesystem::path& path);
void write_records(const std::filesystem::path& path,
                   const std::vector<OcrRecord>& records);

}  // namespace newsprint::ocr

#endif  // NEWSPRINT_OCR_RECORD_IO_HPP_
