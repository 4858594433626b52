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

#ifndef NEWSPRINT_TEXT_ARTICLES_HPP_
#define NEWSPRINT_TEXT_ARTICLES_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "newsprint/text/post.hpp"

namespace newsprint::text {

struct ArticleRecord {
  std::string article_id;  // <page_id>_A<k>
  std::optional<std::string> title;
  std::string page_id;
  std::vector<std::string> member_box_ids;
  // Member paragraphs, one per line.
  std::string text;
  // Indices of the member units in the input.
  std::vector<std::size_t> member_units;

  bool operator==(const ArticleRecord&) const = default;
};

// Each title opens an article holding every following non-title unit up to
// the next title or the end of the page. Units before the first title on a
// page form an article without a title. Input must be in reading order.
std::vector<ArticleRecord> assemble_articles(const std::vector<TextUnit>& units);

// {"article_id", "title", "page_id", "member_box_ids", "text"}
std::string serialize_article(const ArticleRecord& a);
void write_articles(const std::filesystem::path& path,
                    const std::vector<ArticleRecord>& articles);

}  // namespace newsprint::text

#endif  // NEWSPRINT_TEXT_ARTICLES_HPP_
