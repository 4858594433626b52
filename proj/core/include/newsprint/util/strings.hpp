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

#ifndef NEWSPRINT_UTIL_STRINGS_HPP_
#define NEWSPRINT_UTIL_STRINGS_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace newsprint {

// Decodes UTF-8 into code points. Invalid bytes are passed through as
// individual code points (Latin-1 interpretation) rather than rejected.
std::u32string utf8_decode(std::string_view s);
std::string utf8_encode(std::u32string_view s);

// Number of code points.
std::size_t utf8_length(std::string_view s);

bool is_space(char32_t c);

// ASCII and Latin-1 supplement case folding.
char32_t fold_lower(char32_t c);

std::string_view trim(std::string_view s);

// Splits on '\n'; a trailing "\r" on each line is removed. An empty input
// yields a single empty line.
std::vector<std::string> split_lines(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string ascii_lower(std::string_view s);

}  // namespace newsprint

#endif  // NEWSPRINT_UTIL_STRINGS_HPP_
