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

#include "newsprint/ocr/http_backend.hpp"

#include <httplib.h>

#include <cmath>
#include <cstdlib>
#include <nlohmann/json.hpp>
#include <regex>

#include "newsprint/util/hash.hpp"

namespace newsprint::ocr {

using nlohmann::json;

HttpBackend::HttpBackend(std::string endpoint, std::string model,
                         std::string api_key, double timeout_seconds)
    : model_(std::move(model)),
      api_key_(std::move(api_key)),
      timeout_seconds_(timeout_seconds) {
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch m;
  if (!std::regex_match(endpoint, m, kUrl)) {
    throw std::invalid_argument("bad endpoint URL: " + endpoint);
  }
  base_ = m[1];
  path_ = m[2].matched ? std::string(m[2]) : "/v1/chat/completions";
}

HttpBackend HttpBackend::from_config(const BackendConfig& cfg) {
  std::string key;
  if (!cfg.api_key_env.empty()) {
    if (const char* v = std::getenv(cfg.api_key_env.c_str())) key = v;
  }
  return HttpBackend(cfg.endpoint, cfg.model, key, cfg.timeout_seconds);
}

std::string HttpBackend::build_body(const BackendRequest& request) const {
  json content = json::array();
  content.push_back({{"type", "text"}, {"text", request.prompt}});
  content.push_back(
      {{"type", "image_url"},
       {"image_url",
        {{"url", "data:image/png;base64," + base64_encode(request.image_png)}}}});
  json body = {{"model", model_},
               {"max_tokens", request.max_tokens},
               {"temperature", 0},
               {"messages", json::array({{{"role", "user"},
                                          {"content", content}}})}};
  return body.dump();
}

BackendResponse HttpBackend::parse_body(const std::string& body) {
  try {
    const json j = json::parse(body);
    const json& choice = j.at("choices").at(0);
    BackendResponse r;
    const json& content = choice.at("message").at("content");
    r.text = content.is_null() ? "" : content.get<std::string>();
    r.truncated = choice.value("finish_reason", "") == "length";
    if (j.contains("usage") && j["usage"].is_object()) {
      r.prompt_tokens = j["usage"].value("prompt_tokens", std::int64_t{0});
      r.completion_tokens =
          j["usage"].value("completion_tokens", std::int64_t{0});
    }
    return r;
  } catch (const json::exception& e) {
    throw TransportError(std::string("malformed response: ") + e.what());
  }
}

BackendResponse HttpBackend::send(const BackendRequest& request) {
  httplib::Client cli(base_);
  const auto secs = static_cast<time_t>(timeout_seconds_);
  const auto usecs = static_cast<time_t>(
      std::lround((timeout_seconds_ - static_cast<double>(secs)) * 1e6));
  cli.set_connection_timeout(secs, usecs);
  cli.set_read_timeout(secs, usecs);
  cli.set_write_timeout(secs, usecs);
  httplib::Headers headers;
  if (!api_key_.empty()) {
    headers.emplace("Authorization", "Bearer " + api_key_);
  }
  auto res = cli.Post(path_, headers, build_body(request), "application/json");
  if (!res) {
    throw TransportError("request failed: " + httplib::to_string(res.error()));
  }
  if (res->status == 401 || res->status == 403) {
    throw AuthError("backend rejected credentials (HTTP " +
                    std::to_string(res->status) + ")");
  }
  if (res->status == 429 || res->status >= 500) {
    throw TransportError("HTTP " + std::to_string(res->status));
  }
  if (res->status != 200) {
    // Other 4xx responses will not improve on retry, but a single bad box
    // must not abort the run either.
    throw TransportError("HTTP " + std::to_string(res->status) + ": " +
                         res->body.substr(0, 200));
  }
  return parse_body(res->body);
}

}  // namespace newsprint::ocr
