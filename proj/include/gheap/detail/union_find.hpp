// Copyright 2026 The gheap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

namespace gheap::detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path halving
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;  // keep least index as root
  }

  bool same(int a, int b) { return find(a) == find(b); }

  /// Partition as a list of classes, each sorted, numbered by least member
  /// and listed in ascending order of that least member.
  std::vector<std::vector<int>> classes() {
    int n = static_cast<int>(parent_.size());
    std::vector<std::vector<int>> by_root(n);
    for (int i = 0; i < n; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& cls : by_root)
      if (!cls.empty()) out.push_back(std::move(cls));
    return out;  // roots are least members, ascending by construction
  }

 private:
  std::vector<int> parent_;
};

}  // namespace gheap::detail
