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

#include "newsprint/layout/box.hpp"

#include <stdexcept>

#include "newsprint/util/strings.hpp"

namespace newsprint::layout {

BoxClass BoxClass::invalid(std::string original_label) {
  BoxClass c(BoxKind::kInvalid);
  c.original_label_ = std::move(original_label);
  return c;
}

BoxClass BoxClass::parse(std::string_view label) {
  const std::string key = ascii_lower(trim(label));
  if (key == "text" || key == "plain text" || key == "plain_text") {
    return BoxClass(BoxKind::kText);
  }
  if (key == "title") return BoxClass(BoxKind::kTitle);
  if (key == "figure" || key == "picture") return BoxClass(BoxKind::kFigure);
  if (key == "table") return BoxClass(BoxKind::kTable);
  if (key == "abandon" || key == "abandoned") {
    return BoxClass(BoxKind::kAbandoned);
  }
  return invalid(std::string(label));
}

std::string BoxClass::name() const {
  switch (kind_) {
    case BoxKind::kText:
      return "text";
    case BoxKind::kTitle:
      return "title";
    case BoxKind::kFigure:
      return "figure";
    case BoxKind::kTable:
      return "table";
    case BoxKind::kAbandoned:
      return "abandoned";
    case BoxKind::kInvalid:
      return original_label_;
  }
  return original_label_;
}

void PostprocessConfig::validate() const {
  if (minimum_height_threshold < 0) {
    throw std::invalid_argument("minimum_height_threshold must be >= 0");
  }
  if (!(merge_height_ratio > 0.0)) {
    throw std::invalid_argument("merge_height_ratio must be > 0");
  }
  if (!(abandoned_band_fraction >= 0.0 && abandoned_band_fraction < 0.5)) {
    throw std::invalid_argument("abandoned_band_fraction must be in [0, 0.5)");
  }
}

}  // namespace newsprint::layout
