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

#include "newsprint/ocr/prompts.hpp"

#include <stdexcept>
#include <string>

namespace newsprint::ocr {

Prompt select_prompt(const layout::BoxClass& cls) {
  switch (cls.kind()) {
    case layout::BoxKind::kText:
    case layout::BoxKind::kTitle:
      return {PromptKind::kText, kTextPrompt};
    case layout::BoxKind::kFigure:
      return {PromptKind::kFigure, kFigurePrompt};
    case layout::BoxKind::kTable:
      return {PromptKind::kTable, kTablePrompt};
    case layout::BoxKind::kAbandoned:
    case layout::BoxKind::kInvalid:
      break;
  }
  throw std::invalid_argument("no prompt for box class '" + cls.name() + "'");
}

}  // namespace newsprint::ocr
