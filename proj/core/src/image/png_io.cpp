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

#include <png.h>

#include <csetjmp>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "newsprint/image/image.hpp"

namespace newsprint::image {
namespace {

constexpr double kMetresPerInch = 0.0254;

struct ReadSource {
  const std::string* bytes;
  std::size_t offset;
};

void read_from_string(png_structp png, png_bytep out, png_size_t len) {
  auto* src = static_cast<ReadSource*>(png_get_io_ptr(png));
  if (src->offset + len > src->bytes->size()) {
    png_error(png, "truncated PNG data");
  }
  std::memcpy(out, src->bytes->data() + src->offset, len);
  src->offset += len;
}

void write_to_string(png_structp png, png_bytep data, png_size_t len) {
  auto* out = static_cast<std::string*>(png_get_io_ptr(png));
  out->append(reinterpret_cast<const char*>(data), len);
}

void flush_noop(png_structp) {}

void quiet_warning(png_structp, png_const_charp) {}

}  // namespace

GrayImage decode_png(const std::string& bytes) {
  if (bytes.size() < 8 ||
      png_sig_cmp(reinterpret_cast<png_const_bytep>(bytes.data()), 0, 8) != 0) {
    throw ImageError("not a PNG file");
  }
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                           nullptr, quiet_warning);
  if (png == nullptr) throw ImageError("png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw ImageError("png_create_info_struct failed");
  }

  GrayImage img;
  std::vector<png_bytep> rows;
  ReadSource src{&bytes, 0};
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw ImageError("corrupt PNG data");
  }
  png_set_read_fn(png, &src, read_from_string);
  png_read_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);

  png_set_expand(png);
  png_set_strip_16(png);
  png_set_strip_alpha(png);
  if (color_type & PNG_COLOR_MASK_COLOR) {
    png_set_rgb_to_gray_fixed(png, 1, -1, -1);
  }
  png_read_update_info(png, info);
  if (png_get_channels(png, info) != 1) {
    png_error(png, "unsupported channel layout");
  }

  png_uint_32 res_x = 0, res_y = 0;
  int unit = 0;
  if (png_get_pHYs(png, info, &res_x, &res_y, &unit) != 0 &&
      unit == PNG_RESOLUTION_METER && res_x > 0) {
    img.dpi = static_cast<double>(res_x) * kMetresPerInch;
  }

  img.width = static_cast<int>(width);
  img.height = static_cast<int>(height);
  img.pixels.assign(static_cast<std::size_t>(width) * height, 0);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    rows[y] = img.pixels.data() + static_cast<std::size_t>(y) * width;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

GrayImage read_png(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ImageError("cannot read image " + path.string());
  const std::string bytes(std::istreambuf_iterator<char>(in), {});
  try {
    return decode_png(bytes);
  } catch (const ImageError& e) {
    throw ImageError(path.string() + ": " + e.what());
  }
}

std::string encode_png(const GrayImage& img, int bit_depth) {
  if (bit_depth != 1 && bit_depth != 2 && bit_depth != 4 && bit_depth != 8) {
    throw ImageError("unsupported PNG bit depth " + std::to_string(bit_depth));
  }
  if (img.empty()) throw ImageError("cannot encode an empty image");

  const int max_level = (1 << bit_depth) - 1;
  std::vector<std::uint8_t> packed(img.pixels.size());
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    packed[i] = static_cast<std::uint8_t>((img.pixels[i] * max_level + 127) / 255);
  }

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            nullptr, quiet_warning);
  if (png == nullptr) throw ImageError("png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    throw ImageError("png_create_info_struct failed");
  }
  std::string out;
  std::vector<png_bytep> rows(static_cast<std::size_t>(img.height));
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw ImageError("PNG encoding failed");
  }
  png_set_write_fn(png, &out, write_to_string, flush_noop);
  png_set_IHDR(png, info, static_cast<png_uint_32>(img.width),
               static_cast<png_uint_32>(img.height), bit_depth,
               PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  if (img.dpi && *img.dpi > 0) {
    const auto ppm =
        static_cast<png_uint_32>(std::lround(*img.dpi / kMetresPerInch));
    png_set_pHYs(png, info, ppm, ppm, PNG_RESOLUTION_METER);
  }
  png_write_info(png, info);
  if (bit_depth < 8) png_set_packing(png);
  for (int y = 0; y < img.height; ++y) {
    rows[y] = packed.data() + static_cast<std::size_t>(y) * img.width;
  }
  png_write_image(png, rows.data());
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

void write_png(const std::filesystem::path& path, const GrayImage& img,
               int bit_depth) {
  const std::string bytes = encode_png(img, bit_depth);
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ImageError("cannot write image " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw ImageError("write failed: " + path.string());
}

}  // namespace newsprint::image
