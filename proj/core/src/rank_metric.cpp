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

#include "covnet/rank_metric.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace covnet {

RankMetricCode gabidulin_code(const Field& field, std::size_t rows, std::size_t cols, std::size_t delta,
                              std::uint64_t cap) {
  const std::size_t big = std::max(rows, cols);
  const std::size_t small = std::min(rows, cols);
  if (small == 0) throw std::invalid_argument("covnet: rank-metric code needs positive dimensions");
  if (delta < 1 || delta > small) {
    throw std::invalid_argument("covnet: minimum rank distance " + std::to_string(delta) + " outside [1, " +
                                std::to_string(small) + "]");
  }
  const std::size_t message_len = small - delta + 1;

  // Cardinality check before building the extension field.
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < big * message_len; ++i) {
    count *= field.size();
    if (count > cap) {
      throw std::length_error("covnet: rank-metric code with more than " + std::to_string(cap) + " codewords");
    }
  }

  const Field ext = Field::extension(field, static_cast<unsigned>(big), std::numeric_limits<unsigned>::max());
  const Elem ext_q = ext.size();

  std::vector<Elem> points(small);
  for (std::size_t j = 0; j < small; ++j) {
    std::vector<Elem> d(big, 0);
    d[j] = 1;
    points[j] = ext.from_digits(d);
  }
  // frob[j][i] = g_j^(q^i)
  std::vector<std::vector<Elem>> frob(small, std::vector<Elem>(message_len));
  for (std::size_t j = 0; j < small; ++j) {
    Elem v = points[j];
    for (std::size_t i = 0; i < message_len; ++i) {
      frob[j][i] = v;
      v = ext.pow(v, field.size());
    }
  }

  RankMetricCode code{field, rows, cols, delta, {}, ext, points};
  code.codewords.reserve(count);
  std::vector<Elem> coeffs(message_len, 0);
  for (std::uint64_t u = 0; u < count; ++u) {
    std::uint64_t rest = u;
    for (std::size_t i = 0; i < message_len; ++i) {
      coeffs[i] = static_cast<Elem>(rest % ext_q);
      rest /= ext_q;
    }
    Matrix word(field, big, small);
    for (std::size_t j = 0; j < small; ++j) {
      Elem value = 0;
      for (std::size_t i = 0; i < message_len; ++i) value = ext.add(value, ext.mul(coeffs[i], frob[j][i]));
      const auto d = ext.digits(value);
      for (std::size_t r = 0; r < big; ++r) word(r, j) = d[r];
    }
    code.codewords.push_back(rows >= cols ? std::move(word) : word.transposed());
  }
  return code;
}

std::size_t rank_distance(const Matrix& a, const Matrix& b) { return rank(subtract(a, b)); }

std::size_t minimum_rank_distance(const std::vector<Matrix>& codewords) {
  if (codewords.size() < 2) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (std::size_t j = i + 1; j < codewords.size(); ++j) best = std::min(best, rank_distance(codewords[i], codewords[j]));
  }
  return best;
}

Subspace lift(const Matrix& a) {
  const std::size_t k = a.rows();
  const std::size_t n = k + a.cols();
  Matrix g(a.field(), k, n);
  for (std::size_t r = 0; r < k; ++r) {
    g(r, r) = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) g(r, k + c) = a(r, c);
  }
  return Subspace::span(g);
}

LiftedCode lifted_mrd_code(const Field& field, std::size_t n, std::size_t k_sub, std::size_t delta,
                           std::uint64_t cap) {
  if (k_sub == 0 || k_sub >= n) throw std::invalid_argument("covnet: lifted code needs 0 < k_sub < n");
  const auto mrd = gabidulin_code(field, k_sub, n - k_sub, delta, cap);
  LiftedCode out{n, k_sub, {}};
  out.codewords.reserve(mrd.codewords.size());
  for (const auto& a : mrd.codewords) out.codewords.push_back(lift(a));
  return out;
}

CoveringCode dual_lifted_mrd_covering_code(std::size_t n, std::size_t k, std::size_t delta, std::size_t alpha,
                                           const Field& field, std::uint64_t cap) {
  if (delta < 1 || delta > k) throw std::invalid_argument("covnet: need 1 <= delta <= k");
  if (delta + k > n) throw std::invalid_argument("covnet: need delta + k <= n");
  if (alpha < 2) throw std::invalid_argument("covnet: need alpha >= 2");

  const std::size_t m = n - k;
  const auto lifted = lifted_mrd_code(field, n, m, delta, cap);
  std::vector<Subspace> duals;
  duals.reserve(lifted.codewords.size());
  for (const auto& c : lifted.codewords) duals.push_back(dual(c));

  CoveringCode code(field, n, k, static_cast<long long>(delta), alpha);
  for (std::size_t copy = 0; copy + 1 < alpha; ++copy) {
    for (const auto& d : duals) code.add(d);
  }
  return code;
}

}  // namespace covnet
