// Copyright 2026 The covnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <thread>
#include <vector>

namespace covnet {

/// Visits every k-subset of {0, ..., n-1} in lexicographic order. `fn`
/// receives the sorted indices and returns false to stop early. Returns
/// false iff stopped early.
template <class Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!fn(std::span<const std::size_t>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Same order, restricted to subsets whose smallest element is `first`.
template <class Fn>
bool for_each_combination_with_first(std::size_t n, std::size_t k, std::size_t first, Fn&& fn) {
  if (k == 0) {
    // The empty subset is attributed to first index 0.
    return first == 0 ? fn(std::span<const std::size_t>()) : true;
  }
  if (first + k > n) return true;
  std::vector<std::size_t> idx(k);
  idx[0] = first;
  std::size_t rest_n = n - first - 1;
  return for_each_combination(rest_n, k - 1, [&](std::span<const std::size_t> rest) {
    for (std::size_t j = 0; j + 1 < k; ++j) idx[j + 1] = rest[j] + first + 1;
    return fn(std::span<const std::size_t>(idx));
  });
}

namespace detail {

/// Runs `task(first)` for every first index in [0, count) on up to `threads`
/// workers and returns the per-index results. `cutoff` is read before each
/// task; tasks with index greater than it are skipped (result stays empty).
template <class Result, class Task>
std::vector<std::optional<Result>> run_by_first_index(std::size_t count, unsigned threads, Task&& task,
                                                      std::atomic<std::size_t>* cutoff = nullptr) {
  std::vector<std::optional<Result>> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      if (cutoff && i > cutoff->load()) continue;
      results[i] = task(i);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return results;
}

}  // namespace detail

}  // namespace covnet
