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

#ifndef NEWSPRINT_OCR_BACKEND_HPP_
#define NEWSPRINT_OCR_BACKEND_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace newsprint::ocr {

class RateLimiter;

struct BackendRequest {
  std::string image_png;
  std::string prompt;
  int max_tokens = 0;
  // Provenance, used by offline backends to look up canned responses.
  std::string box_id;
  int tile_index = 0;
  // 0 for the first pass over a box, 1 for the repetition retry.
  int pass = 0;
};

struct BackendResponse {
  std::string text;
  std::int64_t prompt_tokens = 0;
  std::int64_t completion_tokens = 0;
  // The backend stopped because it hit max_tokens.
  bool truncated = false;
};

// Retryable failure: connection errors, timeouts, 429 and 5xx.
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Credentials rejected. Never retried; aborts the run.
class AuthError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "Send image bytes and a prompt, get text and token counts back."
class Backend {
 public:
  virtual ~Backend() = default;
  virtual BackendResponse send(const BackendRequest& request) = 0;
  virtual std::string name() const = 0;
};

struct BackendConfig {
  std::string kind = "mock";  // "mock" or "http"
  std::string endpoint = "https://api.mistral.ai/v1/chat/completions";
  std::string model = "pixtral-12b-2409";
  // Name of the environment variable holding the API key.
  std::string api_key_env = "OCR_API_KEY";
  std::string mock_dir;
  int max_in_flight = 4;
  double requests_per_minute = 60.0;
  int max_retries = 3;
  double timeout_seconds = 120.0;
  int token_limit = 4096;
  double retry_backoff_seconds = 1.0;

  void validate() const;
};

struct RetryPolicy {
  int max_retries = 3;
  double backoff_seconds = 1.0;
  // Injected for tests; defaults to std::this_thread::sleep_for.
  std::function<void(double)> sleep;
};

// Sends with up to policy.max_retries retries on TransportError, doubling the
// backoff each time. AuthError propagates immediately. `attempts` receives the
// number of requests actually made.
BackendResponse send_with_retry(Backend& backend, const BackendRequest& request,
                                const RetryPolicy& policy, RateLimiter* limiter,
                                int* attempts = nullptr);

}  // namespace newsprint::ocr

#endif  // NEWSPRINT_OCR_BACKEND_HPP_
