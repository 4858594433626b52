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

#include "newsprint/analysis/cluster.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace newsprint::analysis {
namespace {

struct Cluster {
  int node;
  int size;
  std::string key;  // smallest member label
  std::vector<std::string> members;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

MergeTree average_linkage(const std::vector<std::string>& labels,
                          const std::vector<std::vector<double>>& distance) {
  const std::size_t n = labels.size();
  if (n < 2) throw std::invalid_argument("clustering needs at least two items");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
    throw std::invalid_argument("duplicate labels");
  }
  if (distance.size() != n) throw std::invalid_argument("bad distance matrix");
  for (const auto& row : distance) {
    if (row.size() != n) throw std::invalid_argument("bad distance matrix");
  }

  std::vector<Cluster> active;
  for (std::size_t i = 0; i < n; ++i) {
    active.push_back({static_cast<int>(i), 1, labels[i], {labels[i]}});
  }
  std::vector<std::vector<double>> d = distance;

  MergeTree tree{labels, {}};
  while (active.size() > 1) {
    std::size_t bi = 0, bj = 1;
    for (std::size_t i = 0; i < active.size(); ++i) {
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        const double cand = d[i][j];
        const double best = d[bi][bj];
        if (cand < best - kTieTolerance) {
          bi = i;
          bj = j;
        } else if (cand <= best + kTieTolerance) {
          auto key = [&](std::size_t a, std::size_t b) {
            return std::minmax(active[a].key, active[b].key);
          };
          if (key(i, j) < key(bi, bj)) {
            bi = i;
            bj = j;
          }
        }
      }
    }
    if (active[bj].key < active[bi].key) std::swap(bi, bj);
    Cluster& a = active[bi];
    const Cluster& b = active[bj];
    const double height = d[bi][bj];
    tree.merges.push_back({a.node, b.node, height, a.size + b.size});

    // Lance-Williams update for average linkage, stored in row bi.
    const double wa = a.size, wb = b.size;
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (k == bi || k == bj) continue;
      const double v = (wa * d[bi][k] + wb * d[bj][k]) / (wa + wb);
      d[bi][k] = d[k][bi] = v;
    }
    a.node = static_cast<int>(n + tree.merges.size() - 1);
    a.size += b.size;
    a.key = std::min(a.key, b.key);
    a.members.insert(a.members.end(), b.members.begin(), b.members.end());

    active.erase(active.begin() + static_cast<long>(bj));
    d.erase(d.begin() + static_cast<long>(bj));
    for (auto& row : d) row.erase(row.begin() + static_cast<long>(bj));
  }
  return tree;
}

std::vector<std::vector<double>> cosine_distances(
    const std::vector<TopicDistribution>& items) {
  const std::size_t n = items.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = d[j][i] = 1.0 - cosine_similarity(items[i].probs, items[j].probs);
    }
  }
  return d;
}

MergeTree hcluster(const std::vector<TopicDistribution>& items) {
  std::vector<std::string> labels;
  for (const auto& it : items) labels.push_back(it.periodical);
  return average_linkage(labels, cosine_distances(items));
}

std::string merge_tree_csv(const MergeTree& tree) {
  std::vector<std::vector<std::string>> members;
  for (const auto& l : tree.labels) members.push_back({l});
  auto names = [&](int node) {
    std::string s;
    for (const auto& m : members[static_cast<std::size_t>(node)]) {
      if (!s.empty()) s += ';';
      s += m;
    }
    return s;
  };
  std::ostringstream os;
  os.precision(12);
  os << "step,left,right,left_members,right_members,height,size\n";
  for (std::size_t k = 0; k < tree.merges.size(); ++k) {
    const Merge& m = tree.merges[k];
    os << k << ',' << m.left << ',' << m.right << ','
       << csv_field(names(m.left)) << ',' << csv_field(names(m.right)) << ','
       << m.height << ',' << m.size << '\n';
    auto merged = members[static_cast<std::size_t>(m.left)];
    const auto& r = members[static_cast<std::size_t>(m.right)];
    merged.insert(merged.end(), r.begin(), r.end());
    members.push_back(std::move(merged));
  }
  return os.str();
}

std::string similarity_matrix_csv(const std::vector<TopicDistribution>& items) {
  std::ostringstream os;
  os.precision(12);
  os << "periodical";
  for (const auto& it : items) os << ',' << csv_field(it.periodical);
  os << '\n';
  for (const auto& a : items) {
    os << csv_field(a.periodical);
    for (const auto& b : items) os << ',' << cosine_similarity(a.probs, b.probs);
    os << '\n';
  }
  return os.str();
}

}  // namespace newsprint::analysis
