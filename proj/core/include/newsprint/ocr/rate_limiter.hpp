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

#ifndef NEWSPRINT_OCR_RATE_LIMITER_HPP_
#define NEWSPRINT_OCR_RATE_LIMITER_HPP_

#include <chrono>
#include <functional>
#include <mutex>

namespace newsprint::ocr {

// Token bucket shared by all workers. Tokens refill continuously at
// requests_per_minute / 60 per second up to `burst`.
class RateLimiter {
 public:
  using Clock = std::function<double()>;          // seconds, monotonic
  using Sleeper = std::function<void(double)>;    // seconds

  explicit RateLimiter(double requests_per_minute, double burst = 1.0);
  RateLimiter(double requests_per_minute, double burst, Clock clock,
              Sleeper sleep);

  // Blocks until a token is available and takes it.
  void acquire();

  double requests_per_minute() const { return rate_ * 60.0; }

 private:
  double rate_;  // tokens per second
  double burst_;
  Clock clock_;
  Sleeper sleep_;
  std::mutex mu_;
  double tokens_;
  double last_;
};

}  // namespace newsprint::ocr

#endif  // NEWSPRINT_OCR_RATE_LIMITER_HPP_
