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

#ifndef NEWSPRINT_IMAGE_DESKEW_HPP_
#define NEWSPRINT_IMAGE_DESKEW_HPP_

#include <string>

#include "newsprint/image/config.hpp"
#include "newsprint/image/image.hpp"

namespace newsprint::image {

struct SkewEstimate {
  double degrees = 0.0;
  // False when the image had no usable structure (blank or noise); degrees
  // is then 0.
  bool reliable = false;
  std::string warning;
};

// Finds the angle in [-range, +range], scanned at `step`, whose inverse
// rotation maximises the variance of the horizontal projection profile of
// dark pixels. rotate(img, -estimate) deskews. The convention matches
// rotate(): estimate_skew(rotate(text, a)) ~= a.
SkewEstimate estimate_skew(const GrayImage& img, double range = 5.0,
                           double step = 0.1);
SkewEstimate estimate_skew(const GrayImage& img, const ImagePrepConfig& cfg);

GrayImage deskew(const GrayImage& img, const ImagePrepConfig& cfg);

}  // namespace newsprint::image

#endif  // NEWSPRINT_IMAGE_DESKEW_HPP_
