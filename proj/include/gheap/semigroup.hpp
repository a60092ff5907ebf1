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
#include <cstdint>
#include <string>
#include <vector>

#include "gheap/detail/scan.hpp"
#include "gheap/error.hpp"
#include "gheap/report.hpp"

namespace gheap {

/// A finite semigroup on elements 0..n-1 given by its multiplication table.
/// Tables are row-major: row a holds the products a*b for b ascending.
/// Instances are immutable after construction.
class FiniteSemigroup {
 public:
  FiniteSemigroup() = default;
  FiniteSemigroup(int n, std::vector<int> table) : n_(n), mul_(std::move(table)) {
    if (n_ < 1) throw Error("semigroup must have at least one element");
    if (mul_.size() != static_cast<std::size_t>(n_) * n_)
      throw Error("multiplication table has wrong size");
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        int v = mul_[static_cast<std::size_t>(a) * n_ + b];
        if (v < 0 || v >= n_)
          throw MalformedTableError("table entry " + std::to_string(v) +
                                        " out of range at row " +
                                        std::to_string(a) + ", column " +
                                        std::to_string(b),
                                    a, b);
      }
  }

  int size() const { return n_; }
  int mul(int a, int b) const {
    return mul_[static_cast<std::size_t>(a) * n_ + b];
  }
  const std::vector<int>& table() const { return mul_; }

  bool operator==(const FiniteSemigroup& o) const = default;

 private:
  int n_ = 0;
  std::vector<int> mul_;
};

struct CheckOptions {
  int threads = 0;  // 0 = hardware concurrency
};

/// Checks associativity of a complete n x n table over all n^3 triples.
/// The witness, if any, is the lexicographically first triple (a,b,c) with
/// (a*b)*c != a*(b*c). Entries must already be in range (the
/// FiniteSemigroup constructor enforces this).
inline ValidationReport check_associative(const FiniteSemigroup& s,
                                          const CheckOptions& opts = {}) {
  ValidationReport report;
  int n = s.size();
  std::uint64_t total = detail::pow_u64(n, 3);
  auto bad = detail::first_violation(total, opts.threads, [&](std::uint64_t i) {
    auto t = detail::decode_tuple(i, n, 3);
    return s.mul(s.mul(t[0], t[1]), t[2]) != s.mul(t[0], s.mul(t[1], t[2]));
  });
  if (!bad) {
    report.add_pass("associativity", CheckMode::exhaustive, total);
  } else {
    auto t = detail::decode_tuple(*bad, n, 3);
    int lhs = s.mul(s.mul(t[0], t[1]), t[2]);
    int rhs = s.mul(t[0], s.mul(t[1], t[2]));
    report.add_fail("associativity", CheckMode::exhaustive, total, t,
                    "(a*b)*c=" + std::to_string(lhs) +
                        " a*(b*c)=" + std::to_string(rhs));
  }
  return report;
}

inline bool is_idempotent(const FiniteSemigroup& s, int x) {
  return s.mul(x, x) == x;
}

inline std::vector<int> idempotents(const FiniteSemigroup& s) {
  std::vector<int> out;
  for (int x = 0; x < s.size(); ++x)
    if (is_idempotent(s, x)) out.push_back(x);
  return out;
}

/// A finite inverse semigroup: a semigroup together with its (necessarily
/// unique) inverse map x -> x^-1 with x x^-1 x = x and x^-1 x x^-1 = x^-1.
class InverseSemigroup {
 public:
  InverseSemigroup() = default;

  /// Validates the inverse axioms for the given map, that inversion is an
  /// involution and that idempotents commute. Associativity of `base` is
  /// the caller's responsibility (see recognize_inverse for the full road).
  static InverseSemigroup from_parts(FiniteSemigroup base, std::vector<int> inv) {
    int n = base.size();
    if (static_cast<int>(inv.size()) != n)
      throw Error("inverse map has wrong length");
    for (int x = 0; x < n; ++x) {
      int xi = inv[x];
      if (xi < 0 || xi >= n)
        throw MalformedTableError("inverse map entry out of range", x, 0);
      if (base.mul(base.mul(x, xi), x) != x ||
          base.mul(base.mul(xi, x), xi) != xi)
        throw NotInverseError(
            "map is not a generalized inverse at element " + std::to_string(x),
            {x});
      if (inv[xi] != x)
        throw NotInverseError(
            "inverse map is not an involution at element " + std::to_string(x),
            {x});
    }
    auto idems = idempotents(base);
    for (int e : idems)
      for (int f : idems)
        if (base.mul(e, f) != base.mul(f, e))
          throw NotInverseError("idempotents " + std::to_string(e) + " and " +
                                    std::to_string(f) + " do not commute",
                                {e, f});
    InverseSemigroup s;
    s.base_ = std::move(base);
    s.inv_ = std::move(inv);
    return s;
  }

  int size() const { return base_.size(); }
  int mul(int a, int b) const { return base_.mul(a, b); }
  int inv(int x) const { return inv_[x]; }
  const FiniteSemigroup& base() const { return base_; }
  const std::vector<int>& inv_map() const { return inv_; }

  bool operator==(const InverseSemigroup& o) const = default;

 private:
  FiniteSemigroup base_;
  std::vector<int> inv_;
};

/// Decides whether an associative table is an inverse semigroup by counting
/// generalized inverses elementwise. Throws NotInverseError with a witness
/// element when some element has zero or several generalized inverses, or a
/// witness pair when idempotents fail to commute.
inline InverseSemigroup recognize_inverse(const FiniteSemigroup& s) {
  int n = s.size();
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    int count = 0;
    for (int y = 0; y < n; ++y) {
      if (s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y) {
        ++count;
        inv[x] = y;
      }
    }
    if (count != 1)
      throw NotInverseError("element " + std::to_string(x) + " has " +
                                std::to_string(count) + " generalized inverses",
                            {x});
  }
  return InverseSemigroup::from_parts(s, std::move(inv));
}

/// Report-style variant of the inverse axioms for a caller-supplied map,
/// used when validating files that declare an `inv` line.
inline ValidationReport check_inverse_axioms(const FiniteSemigroup& s,
                                             const std::vector<int>& inv) {
  ValidationReport report;
  int n = s.size();
  if (static_cast<int>(inv.size()) != n) {
    report.add_fail("inverse-map", CheckMode::exhaustive, 0, {},
                    "inverse map length does not match element count");
    return report;
  }
  for (int x = 0; x < n; ++x) {
    int xi = inv[x];
    if (xi < 0 || xi >= n || s.mul(s.mul(x, xi), x) != x ||
        s.mul(s.mul(xi, x), xi) != xi || inv[xi] != x) {
      report.add_fail("inverse-map", CheckMode::exhaustive,
                      static_cast<std::uint64_t>(x) + 1, {x},
                      "inverse axioms fail at element " + std::to_string(x));
      return report;
    }
  }
  report.add_pass("inverse-map", CheckMode::exhaustive, n);
  auto idems = idempotents(s);
  for (int e : idems)
    for (int f : idems)
      if (s.mul(e, f) != s.mul(f, e)) {
        report.add_fail("idempotents-commute", CheckMode::exhaustive,
                        static_cast<std::uint64_t>(idems.size()) * idems.size(),
                        {e, f}, "e*f != f*e");
        return report;
      }
  report.add_pass("idempotents-commute", CheckMode::exhaustive,
                  static_cast<std::uint64_t>(idems.size()) * idems.size());
  return report;
}

/// Natural partial order: a <= b iff a = e*b for some idempotent e.
inline bool natural_order_leq(const InverseSemigroup& s, int a, int b) {
  for (int e = 0; e < s.size(); ++e)
    if (is_idempotent(s.base(), e) && s.mul(e, b) == a) return true;
  return false;
}

/// Restriction of `s` to a subset closed under multiplication and inversion.
/// Elements are renumbered in ascending order of their old indices.
inline InverseSemigroup inverse_subsemigroup(const InverseSemigroup& s,
                                             std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  int m = static_cast<int>(subset.size());
  std::vector<int> to_new(s.size(), -1);
  for (int i = 0; i < m; ++i) to_new[subset[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  std::vector<int> inv(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int p = s.mul(subset[i], subset[j]);
      if (to_new[p] < 0)
        throw Error("subset is not closed under multiplication");
      table[static_cast<std::size_t>(i) * m + j] = to_new[p];
    }
    int q = s.inv(subset[i]);
    if (to_new[q] < 0) throw Error("subset is not closed under inversion");
    inv[i] = to_new[q];
  }
  return InverseSemigroup::from_parts(FiniteSemigroup(m, std::move(table)),
                                      std::move(inv));
}

}  // namespace gheap
