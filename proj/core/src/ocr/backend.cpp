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

#include "newsprint/ocr/backend.hpp"

#include <spdlog/spdlog.h>

#include <chrono>
#include <thread>

#include "newsprint/ocr/rate_limiter.hpp"

namespace newsprint::ocr {

void BackendConfig::validate() const {
  if (kind != "mock" && kind != "http") {
    throw std::invalid_argument("backend kind must be 'mock' or 'http'");
  }
  if (kind == "http" && (endpoint.empty() || model.empty())) {
    throw std::invalid_argument("http backend needs endpoint and model");
  }
  if (max_in_flight <= 0 || !(requests_per_minute > 0) || max_retries < 0 ||
      !(timeout_seconds > 0) || token_limit <= 0 ||
      !(retry_backoff_seconds >= 0)) {
    throw std::invalid_argument("backend limits must be positive");
  }
}

BackendResponse send_with_retry(Backend& backend, const BackendRequest& request,
                                const RetryPolicy& policy, RateLimiter* limiter,
                                int* attempts) {
  int made = 0;
  double delay = policy.backoff_seconds;
  while (true) {
    if (limiter) limiter->acquire();
    ++made;
    if (attempts) *attempts = made;
    try {
      return backend.send(request);
    } catch (const TransportError& e) {
      if (made > policy.max_retries) throw;
      spdlog::warn("{} tile {}: {} (retry {}/{})", request.box_id,
                   request.tile_index, e.what(), made, policy.max_retries);
      if (delay > 0) {
        if (policy.sleep) {
          policy.sleep(delay);
        } else {
          std::this_thread::sleep_for(std::chrono::duration<double>(delay));
        }
      }
      delay *= 2;
    }
  }
}

}  // namespace newsprint::ocr
