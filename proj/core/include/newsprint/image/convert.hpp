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

#ifndef NEWSPRINT_IMAGE_CONVERT_HPP_
#define NEWSPRINT_IMAGE_CONVERT_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "newsprint/image/config.hpp"
#include "newsprint/image/image.hpp"

namespace newsprint::image {

struct ConvertResult {
  std::filesystem::path output;
  int width = 0;
  int height = 0;
  bool resampled = false;
  std::vector<std::string> warnings;
};

// Area-averaging resample to the given size.
GrayImage resample(const GrayImage& img, int out_width, int out_height);

// Maps every pixel to the nearest lower of 2^bit_depth evenly spaced gray
// levels (0, 85, 170, 255 for two bits). Idempotent.
GrayImage quantize(const GrayImage& img, int bit_depth);

// In-memory conversion: resample to cfg.dpi when the source resolution is
// known, then quantize. Source and target resolutions within half a dot per
// inch of each other are treated as equal.
GrayImage to_bitonal(const GrayImage& img, const ImagePrepConfig& cfg,
                     std::vector<std::string>* warnings = nullptr);

// Reads a PNG, converts it and writes a cfg.bit_depth PNG tagged with the
// target resolution. Output is deterministic for a given input. Without
// resolution metadata only the bit depth is converted and a warning is
// recorded. Throws ImageError naming the path on unreadable input.
ConvertResult convert_bitonal(const std::filesystem::path& input,
                              const std::filesystem::path& output,
                              const ImagePrepConfig& cfg);

}  // namespace newsprint::image

#endif  // NEWSPRINT_IMAGE_CONVERT_HPP_
