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
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "covnet/field.hpp"

namespace covnet {

/// Dense row-major matrix over a finite field. Matrices with zero rows are
/// allowed (they stand for the empty direct-link blocks of networks without
/// direct links, and for bases of the zero subspace).
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<Elem>> rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Elem> entries() const { return entries_; }

  Matrix transposed() const;
  /// Copy of rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  /// Same matrix with zero rows appended up to `rows` total.
  Matrix padded_to(std::size_t rows) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> entries_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing, one per nonzero row
};

/// Reduced row-echelon form; nonzero rows first, leading entries equal to one.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Vertical concatenation; every block must share field and column count.
Matrix vstack(std::span<const Matrix> blocks);
Matrix vstack(std::initializer_list<Matrix> blocks);

Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<Elem> multiply(const Matrix& a, std::span<const Elem> x);
Matrix subtract(const Matrix& a, const Matrix& b);

/// Rows form a basis of {x : m x = 0}.
Matrix null_space(const Matrix& m);

/// The unique x with a x = y, or nullopt when the system is inconsistent or
/// has more than one solution.
std::optional<std::vector<Elem>> solve_unique(const Matrix& a, std::span<const Elem> y);

}  // namespace covnet
