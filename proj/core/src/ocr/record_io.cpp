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

#include "newsprint/ocr/record_io.hpp"

#include <nlohmann/json.hpp>

#include "../util/jsonl.hpp"

namespace newsprint::ocr {

using nlohmann::json;

std::string serialize_record(const OcrRecord& rec) {
  json flags = {{"repetition_detected", rec.flags.repetition_detected},
                {"token_limit_hit", rec.flags.token_limit_hit},
                {"retried", rec.flags.retried},
                {"error", rec.flags.error}};
  if (rec.flags.error) flags["error_message"] = rec.flags.error_message;
  json j = {{"page_id", rec.page_id},
            {"box_id", rec.box_id},
            {"reading_order", rec.reading_order},
            {"class", rec.box_class},
            {"tile_texts", rec.tile_texts},
            {"merged_text", rec.merged_text},
            {"flags", flags},
            {"backend", rec.backend},
            {"prompt_tokens", rec.prompt_tokens},
            {"completion_tokens", rec.completion_tokens},
            {"requests", rec.requests}};
  return j.dump();
}

OcrRecord parse_record(const std::string& line) {
  try {
    const json j = json::parse(line);
    OcrRecord rec;
    rec.page_id = j.value("page_id", "");
    rec.box_id = j.at("box_id").get<std::string>();
    rec.reading_order = j.value("reading_order", 0);
    rec.box_class = j.value("class", "text");
    rec.tile_texts = j.at("tile_texts").get<std::vector<std::string>>();
    rec.merged_text = j.at("merged_text").get<std::string>();
    const json& f = j.at("flags");
    rec.flags.repetition_detected = f.at("repetition_detected").get<bool>();
    rec.flags.token_limit_hit = f.at("token_limit_hit").get<bool>();
    rec.flags.retried = f.at("retried").get<int>();
    rec.flags.error = f.value("error", false);
    rec.flags.error_message = f.value("error_message", "");
    rec.backend = j.value("backend", "");
    rec.prompt_tokens = j.value("prompt_tokens", std::int64_t{0});
    rec.completion_tokens = j.value("completion_tokens", std::int64_t{0});
    rec.requests = j.value("requests", 0);
    return rec;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("bad OCR record: ") + e.what());
  }
}

std::vector<OcrRecord> read_records(const std::filesystem::path& path) {
  std::vector<OcrRecord> out;
  internal::for_each_line(path, [&](const std::string& line, std::size_t n) {
    try {
      out.push_back(parse_record(line));
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(n) + ": " +
                               e.what());
    }
  });
  return out;
}

void write_records(const std::filesystem::path& path,
                   const std::vector<OcrRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += serialize_record(r);
    out += '\n';
  }
  internal::write_file_atomic(path, out);
}

}  // namespace newsprint::ocr
