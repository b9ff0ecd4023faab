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

#include "covnet/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace covnet {

namespace {

void check_entries(const Field& field, std::span<const Elem> entries) {
  for (Elem e : entries) {
    if (!field.contains(e)) {
      throw std::out_of_range("covnet: matrix entry " + std::to_string(e) + " outside GF(" +
                              std::to_string(field.size()) + ")");
    }
  }
}

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("covnet: matrices over different fields");
}

// In-place Gauss-Jordan elimination; returns pivot columns.
std::vector<std::size_t> eliminate(Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead) {
      auto a = m.row(sel);
      auto b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Elem scale = f.inv(m(lead, col));
    if (scale != 1) {
      for (std::size_t c = col; c < m.cols(); ++c) m(lead, c) = f.mul(m(lead, c), scale);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const Elem factor = m(r, col);
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = f.add(m(r, c), f.mul(nf, m(lead, c)));
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) throw std::invalid_argument("covnet: matrix entry count does not match shape");
  check_entries(field_, entries_);
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<Elem>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Elem> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("covnet: ragged matrix rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return Matrix(std::move(field), r, c, std::move(entries));
}

Matrix Matrix::transposed() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw std::out_of_range("covnet: row block outside matrix");
  std::vector<Elem> e(entries_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
                      entries_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_));
  return Matrix(field_, count, cols_, std::move(e));
}

Matrix Matrix::padded_to(std::size_t rows) const {
  if (rows < rows_) throw std::invalid_argument("covnet: cannot pad a matrix to fewer rows");
  Matrix out(field_, rows, cols_);
  std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Elem e) { return e == 0; });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_ && a.field_ == b.field_;
}

RrefResult rref(const Matrix& m) {
  Matrix work = m;
  auto pivots = eliminate(work);
  return {std::move(work), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return eliminate(work).size();
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw std::invalid_argument("covnet: vstack of no blocks");
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks.front(), b);
    if (b.cols() != cols) throw std::invalid_argument("covnet: vstack column mismatch");
    rows += b.rows();
  }
  std::vector<Elem> entries;
  entries.reserve(rows * cols);
  for (const auto& b : blocks) entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  return Matrix(blocks.front().field(), rows, cols, std::move(entries));
}

Matrix vstack(std::initializer_list<Matrix> blocks) { return vstack(std::span<const Matrix>(blocks.begin(), blocks.size())); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("covnet: matrix product shape mismatch");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(aik, b(k, j)));
    }
  }
  return out;
}

std::vector<Elem> multiply(const Matrix& a, std::span<const Elem> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("covnet: matrix-vector shape mismatch");
  const Field& f = a.field();
  std::vector<Elem> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(i, k), x[k]));
    y[i] = acc;
  }
  return y;
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("covnet: matrix difference shape mismatch");
  const Field& f = a.field();
  Matrix out(f, a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = f.sub(a(r, c), b(r, c));
  }
  return out;
}

Matrix null_space(const Matrix& m) {
  const Field& f = m.field();
  auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix basis(f, free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    const std::size_t fc = free_cols[i];
    basis(i, fc) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(i, pivots[r]) = f.neg(reduced(r, fc));
  }
  return basis;
}

std::optional<std::vector<Elem>> solve_unique(const Matrix& a, std::span<const Elem> y) {
  if (a.rows() != y.size()) throw std::invalid_argument("covnet: right-hand side length mismatch");
  const Field& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = y[r];
  }
  auto [reduced, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;  // inconsistent
  if (pivots.size() != a.cols()) return std::nullopt;                     // underdetermined
  std::vector<Elem> x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, a.cols());
  return x;
}

}  // namespace covnet
