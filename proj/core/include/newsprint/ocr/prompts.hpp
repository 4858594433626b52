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

#ifndef NEWSPRINT_OCR_PROMPTS_HPP_
#define NEWSPRINT_OCR_PROMPTS_HPP_

#include <string_view>

#include "newsprint/layout/box.hpp"

namespace newsprint::ocr {

enum class PromptKind { kText, kFigure, kTable };

struct Prompt {
  PromptKind kind;
  std::string_view text;
};

inline constexpr std::string_view kTextPrompt =
    "The text in the image is from a 19th century English newspaper, please "
    "transcribe the text including linebreaks. Do not use markdown use plain "
    "text only. Do not add any commentary.";
inline constexpr std::string_view kFigurePrompt =
    "Please describe the graphic taken from a 19th century English newspaper. "
    "Do not add additional commentary";
inline constexpr std::string_view kTablePrompt =
    "Please extract the table from the image taken from a 19th century "
    "English newspaper as a tab separated values (tsv) text file. Do not add "
    "any commentary";

// Titles share the text prompt. Throws std::invalid_argument for abandoned
// or invalid classes, which never reach OCR.
Prompt select_prompt(const layout::BoxClass& cls);

}  // namespace newsprint::ocr

#endif  // NEWSPRINT_OCR_PROMPTS_HPP_
