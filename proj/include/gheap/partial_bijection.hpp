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
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gheap/error.hpp"
#include "gheap/semigroup.hpp"

namespace gheap {

/// An injective partial map between two finite index sets
/// {0..src_size-1} -> {0..dst_size-1}, stored as (source, target) pairs
/// sorted by source. No source and no target appears twice.
class PartialBijection {
 public:
  PartialBijection() = default;

  PartialBijection(int src_size, int dst_size,
                   std::vector<std::pair<int, int>> pairs)
      : src_(src_size), dst_(dst_size), pairs_(std::move(pairs)) {
    if (src_ < 0 || dst_ < 0) throw Error("negative universe size");
    std::sort(pairs_.begin(), pairs_.end());
    std::vector<bool> tgt_seen(dst_, false);
    int prev_src = -1;
    for (auto [p, q] : pairs_) {
      if (p < 0 || p >= src_ || q < 0 || q >= dst_)
        throw Error("partial bijection point out of range: " +
                    std::to_string(p) + ":" + std::to_string(q));
      if (p == prev_src)
        throw Error("source point " + std::to_string(p) + " mapped twice");
      if (tgt_seen[q])
        throw Error("target point " + std::to_string(q) + " hit twice");
      prev_src = p;
      tgt_seen[q] = true;
    }
  }

  int src_size() const { return src_; }
  int dst_size() const { return dst_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

  std::optional<int> apply(int p) const {
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(),
                               std::make_pair(p, -1));
    if (it != pairs_.end() && it->first == p) return it->second;
    return std::nullopt;
  }

  bool operator==(const PartialBijection& o) const = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (i) os << ' ';
      os << pairs_[i].first << ':' << pairs_[i].second;
    }
    os << '}';
    return os.str();
  }

 private:
  int src_ = 0;
  int dst_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

/// Composition, applying g first: compose_pb(f, g)(t) = f(g(t)) wherever both
/// sides are defined. Requires f.src_size() == g.dst_size().
inline PartialBijection compose_pb(const PartialBijection& f,
                                   const PartialBijection& g) {
  if (f.src_size() != g.dst_size())
    throw Error("composition universe mismatch: f source has " +
                std::to_string(f.src_size()) + " points, g target has " +
                std::to_string(g.dst_size()));
  std::vector<std::pair<int, int>> pairs;
  for (auto [p, q] : g.pairs())
    if (auto r = f.apply(q)) pairs.emplace_back(p, *r);
  return PartialBijection(g.src_size(), f.dst_size(), std::move(pairs));
}

inline PartialBijection invert_pb(const PartialBijection& f) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(f.pairs().size());
  for (auto [p, q] : f.pairs()) pairs.emplace_back(q, p);
  return PartialBijection(f.dst_size(), f.src_size(), std::move(pairs));
}

inline PartialBijection identity_pb(int k) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(k);
  for (int i = 0; i < k; ++i) pairs.emplace_back(i, i);
  return PartialBijection(k, k, std::move(pairs));
}

/// Canonical order: domain subsets in colex order (for universes up to 64
/// points this is numeric order of the domain bitmask), then image tuples
/// lexicographically. Golden files rely on this order being stable.
inline bool canonical_less(const PartialBijection& a, const PartialBijection& b) {
  // colex on domains: compare largest elements downward; a missing element
  // (shorter domain) sorts first
  const auto& pa = a.pairs();
  const auto& pb = b.pairs();
  auto ia = pa.rbegin();
  auto ib = pb.rbegin();
  for (; ia != pa.rend() && ib != pb.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
  }
  if (pa.size() != pb.size()) return pa.size() < pb.size();
  for (std::size_t i = 0; i < pa.size(); ++i)
    if (pa[i].second != pb[i].second) return pa[i].second < pb[i].second;
  return false;
}

struct SymmetricInverseMonoid {
  InverseSemigroup sg;
  std::vector<PartialBijection> elements;  // index <-> partial bijection

  int index_of(const PartialBijection& f) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), f,
                               canonical_less);
    if (it == elements.end() || !(*it == f))
      throw Error("partial bijection not in monoid");
    return static_cast<int>(it - elements.begin());
  }
};

inline constexpr int kSymmetricInverseMonoidLimit = 5;

/// All partial injections on a k-point set, in canonical order, with the
/// composition table under compose_pb (right factor applied first).
/// Element 0 is always the empty map.
inline SymmetricInverseMonoid symmetric_inverse_monoid(int k) {
  if (k < 0) throw Error("universe size must be nonnegative");
  if (k > kSymmetricInverseMonoidLimit)
    throw SizeError("universe size " + std::to_string(k) +
                    " exceeds enumeration limit " +
                    std::to_string(kSymmetricInverseMonoidLimit));

  std::vector<PartialBijection> elements;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> domain;
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) domain.push_back(i);
    int r = static_cast<int>(domain.size());
    // injective image tuples in lexicographic order
    std::vector<int> image(r);
    std::vector<bool> used(k, false);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == r) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < r; ++i) pairs.emplace_back(domain[i], image[i]);
        elements.emplace_back(k, k, std::move(pairs));
        return;
      }
      for (int q = 0; q < k; ++q) {
        if (used[q]) continue;
        used[q] = true;
        image[pos] = q;
        self(self, pos + 1);
        used[q] = false;
      }
    };
    rec(rec, 0);
  }

  int n = static_cast<int>(elements.size());
  std::map<std::vector<std::pair<int, int>>, int> index;
  for (int i = 0; i < n; ++i) index[elements[i].pairs()] = i;

  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto prod = compose_pb(elements[i], elements[j]);
      table[static_cast<std::size_t>(i) * n + j] = index.at(prod.pairs());
    }
    inv[i] = index.at(invert_pb(elements[i]).pairs());
  }

  SymmetricInverseMonoid result;
  result.sg = InverseSemigroup::from_parts(FiniteSemigroup(n, std::move(table)),
                                           std::move(inv));
  result.elements = std::move(elements);
  return result;
}

}  // namespace gheap
