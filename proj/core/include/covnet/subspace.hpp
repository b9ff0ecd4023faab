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

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "covnet/matrix.hpp"

namespace covnet {

/// Subspace of GF(q)^n held by its canonical basis: the nonzero rows of the
/// reduced row-echelon form of any generator matrix. Two subspaces are equal
/// exactly when their canonical bases coincide.
class Subspace {
 public:
  /// Row space of `generators` (which may contain dependent or zero rows).
  static Subspace span(const Matrix& generators);
  static Subspace zero(Field field, std::size_t ambient);
  static Subspace full(Field field, std::size_t ambient);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::span<const std::size_t> pivots() const { return pivots_; }

  bool contains(std::span<const Elem> v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

  /// Canonical order: ambient, dimension, pivot columns (lexicographic),
  /// then basis entries row-major. Within one Grassmannian this lists
  /// subspaces with leftmost pivots first.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Dimension of the sum of the given subspaces. All must share field and
/// ambient dimension; an empty list spans the zero space.
std::size_t span_dim(std::span<const Subspace> spaces);
std::size_t span_dim(std::initializer_list<Subspace> spaces);

Subspace sum(const Subspace& a, const Subspace& b);
std::size_t intersection_dim(const Subspace& a, const Subspace& b);

/// Orthogonal complement under the standard bilinear form x . y.
Subspace dual(const Subspace& s);

}  // namespace covnet
