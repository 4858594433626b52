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

#ifndef NEWSPRINT_OCR_MOCK_BACKEND_HPP_
#define NEWSPRINT_OCR_MOCK_BACKEND_HPP_

#include <filesystem>
#include <string>

#include "newsprint/ocr/backend.hpp"

namespace newsprint::ocr {

// Offline backend that replays responses from a directory. For a request on
// tile t of box b it reads, in order of preference:
//
//   pass 0:  b.t<t>.json  or  b.t<t>.txt
//   pass 1:  b.retry1.t<t>.json  or  b.retry1.t<t>.txt
//
// .json files hold {"text", "prompt_tokens", "completion_tokens",
// "finish_reason"}; .txt files hold the text alone and report token counts
// estimated from byte length. A missing file is a TransportError.
class MockBackend : public Backend {
 public:
  explicit MockBackend(std::filesystem::path dir);

  BackendResponse send(const BackendRequest& request) override;
  std::string name() const override { return "mock"; }

 private:
  std::filesystem::path dir_;
};

}  // namespace newsprint::ocr

#endif  // NEWSPRINT_OCR_MOCK_BACKEND_HPP_
