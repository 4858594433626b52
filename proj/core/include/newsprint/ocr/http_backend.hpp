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

#ifndef NEWSPRINT_OCR_HTTP_BACKEND_HPP_
#define NEWSPRINT_OCR_HTTP_BACKEND_HPP_

#include <string>

#include "newsprint/ocr/backend.hpp"

namespace newsprint::ocr {

// OpenAI-style chat-completions endpoint. The image travels as a base64 data
// URL inside a user message next to the prompt.
class HttpBackend : public Backend {
 public:
  // `api_key` may be empty for local servers.
  HttpBackend(std::string endpoint, std::string model, std::string api_key,
              double timeout_seconds);

  // Reads the key from the environment variable named in cfg.api_key_env.
  static HttpBackend from_config(const BackendConfig& cfg);

  BackendResponse send(const BackendRequest& request) override;
  std::string name() const override { return "http:" + model_; }

  // Request body for `request`, exposed for tests.
  std::string build_body(const BackendRequest& request) const;
  // Parses a 200 response body. Throws TransportError on malformed JSON.
  static BackendResponse parse_body(const std::string& body);

 private:
  std::string base_;  // scheme://host[:port]
  std::string path_;
  std::string model_;
  std::string api_key_;
  double timeout_seconds_;
};

}  // namespace newsprint::ocr

#endif  // NEWSPRINT_OCR_HTTP_BACKEND_HPP_
