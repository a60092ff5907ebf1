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
#include <string>
#include <tuple>
#include <vector>

#include "gheap/error.hpp"
#include "gheap/semigroup.hpp"

namespace gheap {

/// Either a bijective homomorphism (element i of A maps to mapping[i] in B)
/// or the invariant that separates the two inputs.
struct IsoWitness {
  std::optional<std::vector<int>> mapping;
  std::string distinguisher;

  bool isomorphic() const { return mapping.has_value(); }
};

namespace detail {

// Iterated partition refinement by multiplication signatures, run on both
// semigroups against a shared color dictionary so colors are comparable
// across the two. Returns per-element colors, or nullopt with `why` set if
// the color multisets diverge (the semigroups cannot be isomorphic).
inline std::optional<std::pair<std::vector<int>, std::vector<int>>>
refine_colors(const InverseSemigroup& a, const InverseSemigroup& b,
              std::string* why) {
  int n = a.size();
  std::vector<int> ca(n), cb(n);
  for (int x = 0; x < n; ++x) {
    ca[x] = is_idempotent(a.base(), x) ? 1 : 0;
    cb[x] = is_idempotent(b.base(), x) ? 1 : 0;
  }
  for (int round = 0; round <= n; ++round) {
    using Sig = std::pair<int, std::vector<std::tuple<int, int, int>>>;
    auto signature = [n](const InverseSemigroup& s, const std::vector<int>& c,
                         int x) {
      Sig sig{c[x], {}};
      sig.second.reserve(n);
      for (int y = 0; y < n; ++y)
        sig.second.emplace_back(c[y], c[s.mul(x, y)], c[s.mul(y, x)]);
      std::sort(sig.second.begin(), sig.second.end());
      return sig;
    };
    std::map<Sig, int> dict;
    std::vector<Sig> sa(n), sb(n);
    for (int x = 0; x < n; ++x) {
      sa[x] = signature(a, ca, x);
      sb[x] = signature(b, cb, x);
      dict.emplace(sa[x], 0);
      dict.emplace(sb[x], 0);
    }
    int next = 0;
    for (auto& [sig, id] : dict) id = next++;
    std::vector<int> na(n), nb(n);
    for (int x = 0; x < n; ++x) {
      na[x] = dict.at(sa[x]);
      nb[x] = dict.at(sb[x]);
    }
    std::vector<int> ha = na, hb = nb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) {
      if (why)
        *why = "multiplication-signature partitions differ after " +
               std::to_string(round + 1) + " refinement round(s)";
      return std::nullopt;
    }
    bool stable = std::equal(na.begin(), na.end(), ca.begin()) &&
                  std::equal(nb.begin(), nb.end(), cb.begin());
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return std::make_pair(ca, cb);
}

// Backtracking extension of a partial bijection phi : A -> B that must be
// a homomorphism. Every new assignment is closed under forced consequences
// (products with all previously assigned elements), which prunes hard.
class IsoSearcher {
 public:
  IsoSearcher(const InverseSemigroup& a, const InverseSemigroup& b,
              std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        phi_(a.size(), -1), used_(b.size(), -1) {}

  std::optional<std::vector<int>> run() {
    order_.clear();
    for (int x = 0; x < a_.size(); ++x) order_.push_back(x);
    // assign elements in rare color classes first
    std::vector<int> freq(a_.size() + 2, 0);
    for (int x = 0; x < a_.size(); ++x) ++freq[ca_[x]];
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return freq[ca_[x]] < freq[ca_[y]]; });
    if (extend(0)) return phi_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t pos) {
    while (pos < order_.size() && phi_[order_[pos]] != -1) ++pos;
    if (pos == order_.size()) return true;
    int x = order_[pos];
    for (int y = 0; y < b_.size(); ++y) {
      if (used_[y] != -1 || cb_[y] != ca_[x]) continue;
      std::vector<std::pair<int, int>> trail;
      if (assign(x, y, trail) && extend(pos + 1)) return true;
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        phi_[it->first] = -1;
        used_[it->second] = -1;
      }
    }
    return false;
  }

  // Sets phi(x) = y and propagates all forced products; records every
  // assignment in `trail` for rollback.
  bool assign(int x, int y, std::vector<std::pair<int, int>>& trail) {
    std::vector<std::pair<int, int>> queue{{x, y}};
    if (!put(x, y, trail)) return false;
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      for (int w = 0; w < a_.size(); ++w) {
        if (phi_[w] == -1) continue;
        int pw = phi_[w];
        std::pair<int, int> need[2] = {
            {a_.mul(u, w), b_.mul(v, pw)},
            {a_.mul(w, u), b_.mul(pw, v)},
        };
        for (auto [p, q] : need) {
          if (phi_[p] == q) continue;
          if (phi_[p] != -1 || used_[q] != -1) return false;
          if (ca_[p] != cb_[q]) return false;
          if (!put(p, q, trail)) return false;
          queue.emplace_back(p, q);
        }
      }
    }
    return true;
  }

  bool put(int p, int q, std::vector<std::pair<int, int>>& trail) {
    if (phi_[p] != -1 || used_[q] != -1) return phi_[p] == q;
    phi_[p] = q;
    used_[q] = p;
    trail.emplace_back(p, q);
    return true;
  }

  const InverseSemigroup& a_;
  const InverseSemigroup& b_;
  std::vector<int> ca_, cb_;
  std::vector<int> phi_, used_;
  std::vector<int> order_;
};

}  // namespace detail

/// Verifies that `mapping` is a bijective homomorphism from A to B.
inline bool verify_isomorphism(const InverseSemigroup& a,
                               const InverseSemigroup& b,
                               const std::vector<int>& mapping) {
  if (a.size() != b.size()) return false;
  if (static_cast<int>(mapping.size()) != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (int v : mapping) {
    if (v < 0 || v >= b.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (mapping[a.mul(x, y)] != b.mul(mapping[x], mapping[y])) return false;
  return true;
}

/// Backtracking isomorphism search with invariant pruning (element count,
/// idempotent count, multiplication-signature refinement). A returned
/// mapping is always re-checked exhaustively before being reported.
inline IsoWitness iso_search(const InverseSemigroup& a,
                             const InverseSemigroup& b) {
  if (a.size() != b.size())
    return {std::nullopt, "element counts differ (" + std::to_string(a.size()) +
                              " vs " + std::to_string(b.size()) + ")"};
  auto ia = idempotents(a.base()).size();
  auto ib = idempotents(b.base()).size();
  if (ia != ib)
    return {std::nullopt, "idempotent counts differ (" + std::to_string(ia) +
                              " vs " + std::to_string(ib) + ")"};
  std::string why;
  auto colors = detail::refine_colors(a, b, &why);
  if (!colors) return {std::nullopt, why};

  detail::IsoSearcher searcher(a, b, colors->first, colors->second);
  auto phi = searcher.run();
  if (!phi)
    return {std::nullopt, "no isomorphism exists (search exhausted)"};
  if (!verify_isomorphism(a, b, *phi))
    throw InconsistencyError("isomorphism search returned an invalid mapping");
  return {std::move(phi), {}};
}

}  // namespace gheap
