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

#ifndef NEWSPRINT_LAYOUT_COLUMNS_HPP_
#define NEWSPRINT_LAYOUT_COLUMNS_HPP_

#include "newsprint/layout/box.hpp"

namespace newsprint::layout {

// Boxes wider than this multiple of the median column width are treated as
// spanning several columns.
inline constexpr double kFullWidthRatio = 1.5;

// Finds the text columns of a page and assigns every non-abandoned box to
// one of them (or flags it full-width).
//
// Columns are 1-D clusters of text-box horizontal centres: sorted centres
// further apart than half the median text-box width start a new cluster.
// Text boxes wider than kFullWidthRatio x the median text-box width do not
// take part in clustering. Column ranges partition the print area, with the
// boundary between neighbouring clusters placed mid-gutter but always
// strictly between the two clusters' centres.
//
// If the layout has no print area yet it is set to the union of its
// non-abandoned boxes. A page without text boxes is returned with an empty
// column list and untouched boxes.
PageLayout assign_columns(PageLayout layout);

}  // namespace newsprint::layout

#endif  // NEWSPRINT_LAYOUT_COLUMNS_HPP_
