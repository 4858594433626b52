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

#ifndef NEWSPRINT_OCR_MERGE_HPP_
#define NEWSPRINT_OCR_MERGE_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace newsprint::ocr {

// 1 - levenshtein / max length over code points of the trimmed lines; two
// empty lines score 1.
double line_similarity(std::string_view a, std::string_view b);

inline constexpr double kLineMatchThreshold = 0.8;

// Joins the per-tile transcriptions of one box. With overlapping tiles the
// text at the end of a tile repeats at the start of the next; the longest
// run of trailing lines of the left text that matches the leading lines of
// the right text (line by line, similarity >= kLineMatchThreshold) is
// dropped from the right text. When runs of repeated lines match at several
// lengths, an interior seam takes the nominal overlap (overlap_fraction of
// the left tile's lines, rounded up) if it matches. Blank lines at the seam
// are ignored when nothing matches otherwise. Without a match
// the texts are joined with a newline. With overlap_fraction == 0 the tiles
// are simply concatenated with newlines.
std::string merge_tile_texts(const std::vector<std::string>& tiles,
                             double overlap_fraction);

// Text analogue of tiling a box: cuts `text` into windows of lines_per_tile
// lines laid out like image tiles. merge_tile_texts undoes it when no line
// run repeats across a seam.
std::vector<std::string> split_text_overlapping(std::string_view text,
                                               int lines_per_tile,
                                               double overlap_fraction);

}  // namespace newsprint::ocr

#endif  // NEWSPRINT_OCR_MERGE_HPP_
