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

#include "newsprint/ocr/rate_limiter.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace newsprint::ocr {
namespace {

double steady_seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

void sleep_seconds(double s) {
  std::this_thread::sleep_for(std::chrono::duration<double>(s));
}

}  // namespace

RateLimiter::RateLimiter(double requests_per_minute, double burst)
    : RateLimiter(requests_per_minute, burst, steady_seconds, sleep_seconds) {}

RateLimiter::RateLimiter(double requests_per_minute, double burst, Clock clock,
                         Sleeper sleep)
    : rate_(requests_per_minute / 60.0),
      burst_(burst),
      clock_(std::move(clock)),
      sleep_(std::move(sleep)) {
  if (!(requests_per_minute > 0)) {
    throw std::invalid_argument("requests_per_minute must be positive");
  }
  if (!(burst >= 1.0)) throw std::invalid_argument("burst must be >= 1");
  tokens_ = burst_;
  last_ = clock_();
}

void RateLimiter::acquire() {
  // The lock is held while sleeping so waiters are served in turn.
  std::lock_guard<std::mutex> lock(mu_);
  while (true) {
    const double now = clock_();
    tokens_ = std::min(burst_, tokens_ + (now - last_) * rate_);
    last_ = now;
    if (tokens_ >= 1.0) {
      tokens_ -= 1.0;
      return;
    }
    sleep_((1.0 - tokens_) / rate_);
  }
}

}  // namespace newsprint::ocr
