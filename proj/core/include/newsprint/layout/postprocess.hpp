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

#ifndef NEWSPRINT_LAYOUT_POSTPROCESS_HPP_
#define NEWSPRINT_LAYOUT_POSTPROCESS_HPP_

#include "newsprint/layout/box.hpp"

namespace newsprint::layout {

// Cleans raw detector boxes for a newspaper page:
//
//   1. boxes labelled abandoned, or centred in the top/bottom band of the
//      page, become abandoned
//   2. abandoned boxes are removed; the print area is the union of the rest
//   3. columns are assigned
//   4. invalid classes become titles
//   5. reading order is computed
//   6. each box's lower edge is moved to the upper edge of the next box in
//      its column (full-width boxes count as members of every column they
//      cross)
//   7. box x-limits snap to their column
//   8. optionally, voids in each column are filled with synthetic text boxes
//   9. boxes lower than the minimum height are dropped
//  10. consecutive text boxes in a column are merged while the merged
//      height stays within merge_height_ratio x width
//  11. lower edges are re-adjusted; with column filling, voids left by
//      dropped boxes are closed again
//  12. the final reading order is computed and ids are set to
//      <page_id>_B<block>C<column>R<row>
//
// Pure: the same input and config always give the same output.
PageLayout postprocess_bboxes(PageLayout layout, const PostprocessConfig& cfg);

// Baseline treatment: invalid classes become titles, nothing else changes.
PageLayout reclass_invalid_only(PageLayout layout);

// Box id suffix convention, e.g. "B0C1R2".
std::string box_id_suffix(int block, int column, int row);

}  // namespace newsprint::layout

#endif  // NEWSPRINT_LAYOUT_POSTPROCESS_HPP_
