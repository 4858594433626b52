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

#include "newsprint/image/image.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace newsprint::image {

GrayImage crop(const GrayImage& img, const layout::Rect& r) {
  const int x1 = std::clamp(r.x1, 0, img.width);
  const int x2 = std::clamp(r.x2, 0, img.width);
  const int y1 = std::clamp(r.y1, 0, img.height);
  const int y2 = std::clamp(r.y2, 0, img.height);
  if (x2 <= x1 || y2 <= y1) {
    throw ImageError("crop rectangle lies outside the image");
  }
  GrayImage out(x2 - x1, y2 - y1);
  out.dpi = img.dpi;
  for (int y = y1; y < y2; ++y) {
    std::copy_n(&img.pixels[static_cast<std::size_t>(y) * img.width + x1],
                x2 - x1,
                &out.pixels[static_cast<std::size_t>(y - y1) * out.width]);
  }
  return out;
}

GrayImage rotate(const GrayImage& img, double degrees) {
  GrayImage out(img.width, img.height, 255);
  out.dpi = img.dpi;
  const double rad = degrees * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);
  const double cx = 0.5 * (img.width - 1);
  const double cy = 0.5 * (img.height - 1);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      // Inverse mapping: destination -> source.
      const double dx = x - cx;
      const double dy = y - cy;
      const double sx = c * dx - s * dy + cx;
      const double sy = s * dx + c * dy + cy;
      const int ix = static_cast<int>(std::lround(sx));
      const int iy = static_cast<int>(std::lround(sy));
      if (ix >= 0 && ix < img.width && iy >= 0 && iy < img.height) {
        out.at(x, y) = img.at(ix, iy);
      }
    }
  }
  return out;
}

}  // namespace newsprint::image
