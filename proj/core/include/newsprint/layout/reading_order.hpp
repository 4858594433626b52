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

#ifndef NEWSPRINT_LAYOUT_READING_ORDER_HPP_
#define NEWSPRINT_LAYOUT_READING_ORDER_HPP_

#include "newsprint/layout/box.hpp"

namespace newsprint::layout {

// Orders the boxes the way the page is read and sets reading_order to dense
// indices 0..n-1. The returned box list is sorted in that order.
//
// Full-width boxes split the page into horizontal blocks. A full-width box
// opens its block; a column box belongs to the block of the last full-width
// box whose top is at or above its own top. Within a block boxes are read
// column by column, left to right, and top to bottom inside a column. Ties on
// the top edge fall back to x1 and then id.
PageLayout reading_order(PageLayout layout);

}  // namespace newsprint::layout

#endif  // NEWSPRINT_LAYOUT_READING_ORDER_HPP_
