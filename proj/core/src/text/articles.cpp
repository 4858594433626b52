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

#include "newsprint/text/articles.hpp"

#include <nlohmann/json.hpp>

#include "../util/jsonl.hpp"
#include "newsprint/util/strings.hpp"

namespace newsprint::text {

std::vector<ArticleRecord> assemble_articles(const std::vector<TextUnit>& units) {
  std::vector<ArticleRecord> articles;
  std::vector<std::string> body;
  int per_page = 0;
  auto close = [&] {
    if (!articles.empty()) articles.back().text = join(body, "\n");
    body.clear();
  };
  auto open = [&](const TextUnit& u) {
    close();
    if (articles.empty() || articles.back().page_id != u.page_id) per_page = 0;
    ArticleRecord a;
    a.page_id = u.page_id;
    a.article_id = u.page_id + "_A" + std::to_string(per_page++);
    articles.push_back(std::move(a));
  };

  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto& u = units[i];
    const bool new_page = articles.empty() || articles.back().page_id != u.page_id;
    if (u.cls == UnitClass::kTitle) {
      open(u);
      articles.back().title = join(u.paragraphs, " ");
      continue;
    }
    if (new_page) open(u);
    auto& a = articles.back();
    if (a.member_box_ids.empty() || a.member_box_ids.back() != u.box_id) {
      a.member_box_ids.push_back(u.box_id);
    }
    a.member_units.push_back(i);
    body.insert(body.end(), u.paragraphs.begin(), u.paragraphs.end());
  }
  close();
  return articles;
}

std::string serialize_article(const ArticleRecord& a) {
  nlohmann::ordered_json j;
  j["article_id"] = a.article_id;
  j["title"] = a.title ? nlohmann::ordered_json(*a.title)
                       : nlohmann::ordered_json(nullptr);
  j["page_id"] = a.page_id;
  j["member_box_ids"] = a.member_box_ids;
  j["text"] = a.text;
  return j.dump();
}

void write_articles(const std::filesystem::path& path,
                    const std::vector<ArticleRecord>& articles) {
  std::string out;
  for (const auto& a : articles) {
    out += serialize_article(a);
    out += '\n';
  }
  internal::write_file_atomic(path, out);
}

}  // namespace newsprint::text
