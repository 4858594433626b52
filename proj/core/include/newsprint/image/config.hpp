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

#ifndef NEWSPRINT_IMAGE_CONFIG_HPP_
#define NEWSPRINT_IMAGE_CONFIG_HPP_

#include <limits>

namespace newsprint::image {

struct ImagePrepConfig {
  // Target resolution. Physically large titles use 200.
  double dpi = 120.0;
  int bit_depth = 2;
  // Maximum tile height as a multiple of the box width. Infinity disables
  // tiling.
  double crop_ratio = 1.5;
  double overlap_fraction = 0.2;
  bool deskew = false;
  double deskew_range = 5.0;  // degrees, symmetric
  double deskew_step = 0.1;   // degrees

  // Throws std::invalid_argument.
  void validate() const;
};

inline constexpr double kNoCrop = std::numeric_limits<double>::infinity();

}  // namespace newsprint::image

#endif  // NEWSPRINT_IMAGE_CONFIG_HPP_
