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

#ifndef NEWSPRINT_LAYOUT_LAYOUT_IO_HPP_
#define NEWSPRINT_LAYOUT_LAYOUT_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "newsprint/layout/box.hpp"

namespace newsprint::layout {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One page per JSON line:
//   {"page_id", "image", "width", "height",
//    "boxes": [{"x1", "y1", "x2", "y2", "class", "confidence"}]}
// Post-processed layouts additionally carry "print_area", "columns" and per
// box "id", "column", "full_width", "reading_order", "synthetic" and
// optionally "tiles": [{"y_offset", "height"}].
//
// Boxes without an id get "<page_id>_d<index>".
PageLayout parse_layout(std::string_view json_line);
std::string serialize_layout(const PageLayout& layout);

// Throws FormatError naming the file and line on malformed input.
std::vector<PageLayout> read_layouts(const std::filesystem::path& path);
void write_layouts(const std::filesystem::path& path,
                   const std::vector<PageLayout>& layouts);

}  // namespace newsprint::layout

#endif  // NEWSPRINT_LAYOUT_LAYOUT_IO_HPP_
