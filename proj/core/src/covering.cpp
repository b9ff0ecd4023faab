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

#include "covnet/covering.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

#include "covnet/combinations.hpp"
#include "covnet/qcount.hpp"

namespace covnet {

std::vector<Subspace> enumerate_grassmannian(std::size_t n, std::size_t k, const Field& field, std::uint64_t cap) {
  const BigInt count = gaussian_binomial(static_cast<long long>(n), static_cast<long long>(k), field.size());
  if (count > cap) {
    throw std::length_error("covnet: Grassmannian G(" + std::to_string(n) + "," + std::to_string(k) + ") over GF(" +
                            std::to_string(field.size()) + ") has " + count.str() + " elements, cap is " +
                            std::to_string(cap));
  }
  std::vector<Subspace> out;
  out.reserve(count.convert_to<std::size_t>());
  const Elem q = field.size();

  for_each_combination(n, k, [&](std::span<const std::size_t> pivots) {
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    // Free positions in row-major order; the last one varies fastest so the
    // output comes out in canonical order.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) free.emplace_back(r, c);
      }
    }
    Matrix m(field, k, n);
    for (std::size_t r = 0; r < k; ++r) m(r, pivots[r]) = 1;
    std::vector<Elem> digits(free.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free.size(); ++i) m(free[i].first, free[i].second) = digits[i];
      out.push_back(Subspace::span(m));
      std::size_t i = free.size();
      while (i > 0 && digits[i - 1] == q - 1) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
    return true;
  });
  return out;
}

CoveringCode::CoveringCode(Field field, std::size_t n, std::size_t k, long long delta, std::size_t alpha,
                           std::vector<Subspace> codewords)
    : field_(std::move(field)), n_(n), k_(k), delta_(delta), alpha_(alpha), codewords_(std::move(codewords)) {
  if (k_ > n_) throw std::invalid_argument("covnet: codeword dimension exceeds ambient dimension");
  if (alpha_ == 0) throw std::invalid_argument("covnet: alpha must be positive");
  for (const auto& s : codewords_) check(s);
}

std::size_t CoveringCode::required_dim() const {
  const long long need = delta_ + static_cast<long long>(k_);
  return need <= 0 ? 0 : static_cast<std::size_t>(need);
}

void CoveringCode::add(Subspace s) {
  check(s);
  codewords_.push_back(std::move(s));
}

void CoveringCode::check(const Subspace& s) const {
  if (!(s.field() == field_)) throw std::invalid_argument("covnet: codeword over a different field");
  if (s.ambient() != n_) {
    throw std::invalid_argument("covnet: codeword ambient " + std::to_string(s.ambient()) + " differs from n = " +
                                std::to_string(n_));
  }
  if (s.dim() > k_) {
    throw std::invalid_argument("covnet: codeword dimension " + std::to_string(s.dim()) + " exceeds k = " +
                                std::to_string(k_));
  }
}

CoverCheck is_covering_code(const CoveringCode& code, unsigned threads) {
  const std::size_t size = code.size();
  const std::size_t alpha = code.alpha();
  if (size < alpha) {
    throw std::invalid_argument("covnet: code has " + std::to_string(size) + " codewords, fewer than alpha = " +
                                std::to_string(alpha));
  }
  const std::size_t need = code.required_dim();
  std::size_t floor_dim = std::numeric_limits<std::size_t>::max();
  for (const auto& s : code.codewords()) floor_dim = std::min(floor_dim, s.dim());

  // Per first index: the best (smallest span, then first in order) violation.
  std::atomic<std::size_t> cutoff{std::numeric_limits<std::size_t>::max()};
  auto task = [&](std::size_t first) {
    std::optional<CoverWitness> best;
    std::vector<Subspace> picked;
    picked.reserve(alpha);
    for_each_combination_with_first(size, alpha, first, [&](std::span<const std::size_t> idx) {
      picked.clear();
      for (auto i : idx) picked.push_back(code[i]);
      const std::size_t d = span_dim(picked);
      if (d < need && (!best || d < best->achieved_dim)) {
        best = CoverWitness{{idx.begin(), idx.end()}, d};
        if (d == floor_dim) return false;
      }
      return true;
    });
    if (best && best->achieved_dim == floor_dim) {
      // Nothing after this first index can beat it.
      std::size_t cur = cutoff.load();
      while (first < cur && !cutoff.compare_exchange_weak(cur, first)) {
      }
    }
    return best;
  };
  const std::size_t firsts = alpha == 0 ? 1 : size - alpha + 1;
  auto results = detail::run_by_first_index<std::optional<CoverWitness>>(firsts, threads, task, &cutoff);

  std::optional<CoverWitness> best;
  for (auto& r : results) {
    if (r && *r && (!best || (*r)->achieved_dim < best->achieved_dim)) best = **r;
  }
  if (!best) return {true, std::nullopt};
  return {false, std::move(best)};
}

namespace {

class CoveringSearch {
 public:
  CoveringSearch(std::size_t n, std::size_t k, long long delta, std::size_t alpha, const Field& field,
                 std::uint64_t node_limit, std::uint64_t enumeration_cap)
      : n_(n), k_(k), delta_(delta), alpha_(alpha), field_(field), node_limit_(node_limit) {
    if (alpha < 2) throw std::invalid_argument("covnet: covering search needs alpha >= 2");
    if (delta < 1) throw std::invalid_argument("covnet: covering search needs delta >= 1");
    if (static_cast<long long>(k) + delta > static_cast<long long>(n)) {
      throw std::invalid_argument("covnet: covering search needs delta + k <= n");
    }
    need_ = static_cast<std::size_t>(delta) + k;
    grass_ = enumerate_grassmannian(n, k, field, enumeration_cap);
    multiplicity_.assign(grass_.size(), 0);
    if (alpha_ == 2 && grass_.size() <= 4096) {
      pair_cache_.assign(grass_.size() * grass_.size(), -1);
    }
  }

  /// target == 0 means maximise.
  void run(std::size_t target) {
    target_ = target;
    if (grass_.empty()) {
      complete_ = true;
      return;
    }
    push(0);
    dfs(0);
    pop();
    if (!aborted_) complete_ = true;
  }

  bool aborted() const { return aborted_; }
  bool reached_target() const { return target_ != 0 && best_.size() >= target_; }
  std::uint64_t nodes() const { return nodes_; }

  CoveringCode best_code() const {
    std::vector<Subspace> words;
    words.reserve(best_.size());
    for (auto i : best_) words.push_back(grass_[i]);
    return CoveringCode(field_, n_, k_, delta_, alpha_, std::move(words));
  }

 private:
  void push(std::size_t i) {
    chosen_.push_back(i);
    ++multiplicity_[i];
  }

  void pop() {
    --multiplicity_[chosen_.back()];
    chosen_.pop_back();
  }

  std::size_t pair_dim(std::size_t a, std::size_t b) {
    if (pair_cache_.empty()) return span_dim({grass_[a], grass_[b]});
    auto& slot = pair_cache_[a * grass_.size() + b];
    if (slot < 0) slot = static_cast<std::int8_t>(span_dim({grass_[a], grass_[b]}));
    return static_cast<std::size_t>(slot);
  }

  // Every alpha-sub-multiset made of the candidate plus alpha - 1 already
  // chosen codewords must span at least delta + k.
  bool compatible(std::size_t cand) {
    if (multiplicity_[cand] + 1 >= alpha_) return false;  // alpha copies span only k
    if (chosen_.size() + 1 < alpha_) return true;
    if (alpha_ == 2) {
      for (auto j : chosen_) {
        if (pair_dim(j, cand) < need_) return false;
      }
      return true;
    }
    std::vector<Subspace> picked;
    picked.reserve(alpha_);
    return for_each_combination(chosen_.size(), alpha_ - 1, [&](std::span<const std::size_t> idx) {
      picked.clear();
      for (auto p : idx) picked.push_back(grass_[chosen_[p]]);
      picked.push_back(grass_[cand]);
      return span_dim(picked) >= need_;
    });
  }

  // Returns false to unwind (target met or node limit hit).
  bool dfs(std::size_t start) {
    if (++nodes_ > node_limit_) {
      aborted_ = true;
      return false;
    }
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (target_ != 0 && chosen_.size() >= target_) return false;

    const std::size_t g = grass_.size();
    const std::size_t room = (alpha_ - 1 - multiplicity_[start]) + (alpha_ - 1) * (g - start - 1);
    const std::size_t goal = target_ != 0 ? target_ : best_.size() + 1;
    if (chosen_.size() + room < goal) return true;

    for (std::size_t i = start; i < g; ++i) {
      if (!compatible(i)) continue;
      push(i);
      const bool keep_going = dfs(i);
      pop();
      if (!keep_going) return false;
      if (target_ == 0) {
        const std::size_t rest = (alpha_ - 1 - multiplicity_[i]) + (alpha_ - 1) * (g - i - 1);
        if (chosen_.size() + rest <= best_.size()) break;
      }
    }
    return true;
  }

  std::size_t n_;
  std::size_t k_;
  long long delta_;
  std::size_t alpha_;
  Field field_;
  std::uint64_t node_limit_;
  std::size_t need_ = 0;
  std::size_t target_ = 0;

  std::vector<Subspace> grass_;
  std::vector<std::size_t> multiplicity_;
  std::vector<std::int8_t> pair_cache_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool complete_ = false;
};

}  // namespace

MaxCodeResult max_covering_code(std::size_t n, std::size_t k, long long delta, std::size_t alpha, const Field& field,
                                std::uint64_t node_limit, std::uint64_t enumeration_cap) {
  CoveringSearch search(n, k, delta, alpha, field, node_limit, enumeration_cap);
  search.run(0);
  auto code = search.best_code();
  const std::size_t size = code.size();
  return MaxCodeResult{size, std::move(code), !search.aborted(), search.nodes()};
}

ExistenceResult find_covering_code(std::size_t n, std::size_t k, long long delta, std::size_t alpha,
                                   const Field& field, std::size_t target, std::uint64_t node_limit,
                                   std::uint64_t enumeration_cap) {
  if (target == 0) {
    return {SearchStatus::kFound, CoveringCode(field, n, k, delta, alpha), 0};
  }
  CoveringSearch search(n, k, delta, alpha, field, node_limit, enumeration_cap);
  search.run(target);
  if (search.reached_target()) return {SearchStatus::kFound, search.best_code(), search.nodes()};
  if (search.aborted()) return {SearchStatus::kInconclusive, std::nullopt, search.nodes()};
  return {SearchStatus::kRefuted, std::nullopt, search.nodes()};
}

}  // namespace covnet
