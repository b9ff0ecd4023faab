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

#include "covnet/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace covnet {

Subspace Subspace::span(const Matrix& generators) {
  auto [reduced, pivots] = rref(generators);
  Matrix basis = reduced.row_block(0, pivots.size());
  return Subspace(std::move(basis), std::move(pivots));
}

Subspace Subspace::zero(Field field, std::size_t ambient) { return Subspace(Matrix(std::move(field), 0, ambient), {}); }

Subspace Subspace::full(Field field, std::size_t ambient) { return span(Matrix::identity(std::move(field), ambient)); }

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != ambient()) throw std::invalid_argument("covnet: vector length differs from ambient dimension");
  const Field& f = field();
  std::vector<Elem> w(v.begin(), v.end());
  // Reduce v against the canonical basis; the pivot entries identify the
  // only possible combination.
  for (std::size_t r = 0; r < dim(); ++r) {
    const Elem c = w[pivots_[r]];
    if (c == 0) continue;
    const Elem nc = f.neg(c);
    for (std::size_t j = 0; j < ambient(); ++j) w[j] = f.add(w[j], f.mul(nc, basis_(r, j)));
  }
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient() <=> b.ambient(); c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.pivots_.begin(), a.pivots_.end(), b.pivots_.begin(),
                                                      b.pivots_.end());
      c != 0) {
    return c;
  }
  const auto ea = a.basis_.entries();
  const auto eb = b.basis_.entries();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::size_t span_dim(std::span<const Subspace> spaces) {
  if (spaces.empty()) return 0;
  std::vector<Matrix> blocks;
  blocks.reserve(spaces.size());
  for (const auto& s : spaces) {
    if (s.ambient() != spaces.front().ambient()) throw std::invalid_argument("covnet: span_dim over mixed ambient spaces");
    if (!(s.field() == spaces.front().field())) throw std::invalid_argument("covnet: span_dim over mixed fields");
    blocks.push_back(s.basis());
  }
  return rank(vstack(blocks));
}

std::size_t span_dim(std::initializer_list<Subspace> spaces) {
  return span_dim(std::span<const Subspace>(spaces.begin(), spaces.size()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("covnet: sum of subspaces in different ambients");
  return Subspace::span(vstack({a.basis(), b.basis()}));
}

std::size_t intersection_dim(const Subspace& a, const Subspace& b) {
  const Subspace spaces[] = {a, b};
  return a.dim() + b.dim() - span_dim(spaces);
}

Subspace dual(const Subspace& s) { return Subspace::span(null_space(s.basis())); }

}  // namespace covnet
