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

#ifndef NEWSPRINT_IMAGE_IMAGE_HPP_
#define NEWSPRINT_IMAGE_IMAGE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "newsprint/layout/box.hpp"

namespace newsprint::image {

class ImageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 8-bit grayscale raster, row-major, 0 = black.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
  // Physical resolution in dots per inch, when the source recorded it.
  std::optional<double> dpi;

  GrayImage() = default;
  GrayImage(int w, int h, std::uint8_t fill = 255)
      : width(w),
        height(h),
        pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h),
               fill) {}

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t& at(int x, int y) {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  bool empty() const { return width <= 0 || height <= 0; }
  bool operator==(const GrayImage&) const = default;
};

// Copies r clipped to the image. Throws ImageError if nothing remains.
GrayImage crop(const GrayImage& img, const layout::Rect& r);

// Rotates about the image centre by `degrees` (counter-clockwise as seen on
// screen, y pointing down), nearest-neighbour, exposed corners white.
GrayImage rotate(const GrayImage& img, double degrees);

// Reads any PNG colour type/depth into 8-bit gray. pHYs metadata in pixels
// per metre becomes dpi.
GrayImage read_png(const std::filesystem::path& path);
GrayImage decode_png(const std::string& bytes);

// Encodes with the given bit depth (1, 2, 4 or 8). Pixel values are mapped to
// the nearest representable level. dpi, if set, is written as pHYs.
std::string encode_png(const GrayImage& img, int bit_depth = 8);
void write_png(const std::filesystem::path& path, const GrayImage& img,
               int bit_depth = 8);

}  // namespace newsprint::image

#endif  // NEWSPRINT_IMAGE_IMAGE_HPP_
