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

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

namespace gheap::detail {

inline int resolve_threads(int requested, std::uint64_t total) {
  if (total < (1u << 16)) return 1;
  int hw = requested > 0 ? requested
                         : static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  std::uint64_t max_useful = total / (1u << 14);
  if (max_useful < 1) max_useful = 1;
  if (static_cast<std::uint64_t>(hw) > max_useful)
    hw = static_cast<int>(max_useful);
  return hw;
}

/// Scans [0, total) for the least index at which `violates` returns true.
/// The range is split into contiguous per-thread chunks scanned in ascending
/// order, so the minimum over per-chunk results equals the global minimum
/// regardless of thread interleaving. A shared watermark lets threads whose
/// whole remaining range lies above an already-found violation stop early.
template <class Pred>
std::optional<std::uint64_t> first_violation(std::uint64_t total, int threads,
                                             Pred&& violates) {
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  if (total == 0) return std::nullopt;

  int nthreads = resolve_threads(threads, total);
  if (nthreads == 1) {
    for (std::uint64_t i = 0; i < total; ++i)
      if (violates(i)) return i;
    return std::nullopt;
  }

  std::atomic<std::uint64_t> best{kNone};
  std::uint64_t chunk = (total + nthreads - 1) / nthreads;
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (int t = 0; t < nthreads; ++t) {
    std::uint64_t begin = chunk * static_cast<std::uint64_t>(t);
    std::uint64_t end = begin + chunk < total ? begin + chunk : total;
    if (begin >= end) break;
    pool.emplace_back([begin, end, &best, &violates] {
      for (std::uint64_t i = begin; i < end; ++i) {
        if ((i & 0xfff) == 0 && best.load(std::memory_order_relaxed) < begin)
          return;  // some lower chunk already holds the minimum
        if (violates(i)) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur &&
                 !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
          }
          return;  // first hit in an ascending chunk is the chunk minimum
        }
      }
    });
  }
  for (auto& th : pool) th.join();

  std::uint64_t found = best.load();
  if (found == kNone) return std::nullopt;
  return found;
}

/// Decodes a flattened index into `arity` base-`n` digits, most significant
/// first. Inverse of i = (((d0*n + d1)*n + d2)...).
inline std::vector<int> decode_tuple(std::uint64_t index, int n, int arity) {
  std::vector<int> out(arity);
  for (int k = arity - 1; k >= 0; --k) {
    out[k] = static_cast<int>(index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return out;
}

inline std::uint64_t pow_u64(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace gheap::detail
