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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covnet/covering.hpp"
#include "covnet/matrix.hpp"
#include "covnet/subspace.hpp"

namespace covnet {

inline constexpr std::uint64_t kDefaultRankCodeCap = std::uint64_t{1} << 16;

/// Linear rank-metric code: a set of rows x cols matrices over GF(q).
struct RankMetricCode {
  Field field;  // GF(q)
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t min_distance = 0;  // designed minimum rank distance
  std::vector<Matrix> codewords;
  /// GF(q^M), M = max(rows, cols), with the evaluation points used, given as
  /// extension-field elements; coordinates are taken in the polynomial basis.
  Field extension;
  std::vector<Elem> evaluation_points;
};

/// Gabidulin code: codewords are the GF(q)-expansions of
///   (f(g_1), ..., f(g_N)),  f(z) = sum_{i < N - delta + 1} f_i z^(q^i),
/// with f_i in GF(q^M), M = max(rows, cols), N = min(rows, cols) and g_j = x^(j-1).
/// When rows < cols the code is built in the M x N orientation and transposed.
/// Codewords are listed in message order: message u has coefficient f_i equal to
/// the i-th base-q^M digit of u.
///
/// Cardinality q^(M (N - delta + 1)); throws std::length_error above `cap`
/// and std::invalid_argument unless 1 <= delta <= N.
RankMetricCode gabidulin_code(const Field& field, std::size_t rows, std::size_t cols, std::size_t delta,
                              std::uint64_t cap = kDefaultRankCodeCap);

std::size_t rank_distance(const Matrix& a, const Matrix& b);

/// Smallest pairwise rank distance over all distinct codeword pairs
/// (zero for fewer than two codewords).
std::size_t minimum_rank_distance(const std::vector<Matrix>& codewords);

/// Row space of [I_k | a] inside GF(q)^(k + a.cols()).
Subspace lift(const Matrix& a);

struct LiftedCode {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<Subspace> codewords;
};

/// Lifts every codeword of the k_sub x (n - k_sub) Gabidulin code with
/// minimum rank distance delta; distinct codewords meet in at most
/// k_sub - delta dimensions.
LiftedCode lifted_mrd_code(const Field& field, std::size_t n, std::size_t k_sub, std::size_t delta,
                           std::uint64_t cap = kDefaultRankCodeCap);

/// Covering code from a lifted MRD code: take the lifted MRD code of
/// (n - k)-dimensional subspaces with minimum rank distance delta, replace
/// each codeword by its dual (dimension k) and repeat the resulting set
/// alpha - 1 times. Any alpha picks contain two distinct duals, whose sum has
/// dimension at least k + delta.
///
/// Requires 1 <= delta <= k, delta + k <= n and alpha >= 2.
CoveringCode dual_lifted_mrd_covering_code(std::size_t n, std::size_t k, std::size_t delta, std::size_t alpha,
                                           const Field& field, std::uint64_t cap = kDefaultRankCodeCap);

}  // namespace covnet
