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

#include <stdexcept>

#include "covnet/covering.hpp"
#include "covnet/subspace.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covnet;

namespace {

Subspace line(const Field& f, std::initializer_list<Elem> v) {
  return Subspace::span(Matrix(f, 1, v.size(), std::vector<Elem>(v)));
}

}  // namespace

TEST_CASE("span is canonical") {
  const Field f = Field::of_size(3);
  const auto a = Subspace::span(Matrix::from_rows(f, {{2, 2, 0}, {0, 1, 1}}));
  const auto b = Subspace::span(Matrix::from_rows(f, {{1, 2, 1}, {1, 1, 0}, {0, 0, 0}}));
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.basis() == rref(a.basis()).reduced);
  CHECK(Subspace::zero(f, 3).dim() == 0);
  CHECK(Subspace::full(f, 3).dim() == 3);
  CHECK(a.contains(std::vector<Elem>{1, 0, 2}));
  CHECK_FALSE(a.contains(std::vector<Elem>{1, 0, 0}));
}

TEST_CASE("span_dim examples") {
  const Field f = Field::of_size(2);
  const auto e1 = line(f, {1, 0, 0});
  const auto e2 = line(f, {0, 1, 0});
  CHECK(span_dim({e1, e2}) == 2);
  CHECK(span_dim({e1, e1}) == 1);

  const auto l1 = line(f, {1, 0});
  const auto l2 = line(f, {1, 1});
  const auto l3 = line(f, {0, 1});
  CHECK(span_dim({l1, l2}) == 2);
  CHECK(span_dim({l1, l3}) == 2);
  CHECK(span_dim({l2, l3}) == 2);

  CHECK_THROWS_AS(span_dim({e1, l1}), std::invalid_argument);
}

TEST_CASE("dual examples") {
  const Field f = Field::of_size(2);
  CHECK(dual(Subspace::full(f, 3)) == Subspace::zero(f, 3));
  CHECK(dual(line(f, {1, 0})) == line(f, {0, 1}));
}

TEST_CASE("dual is an involution and complements dimension") {
  for (unsigned q : {2u, 3u}) {
    const Field f = Field::of_size(q);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t k = 0; k <= n; ++k) {
        for (const auto& s : enumerate_grassmannian(n, k, f)) {
          const auto d = dual(s);
          CHECK(d.dim() == n - k);
          CHECK(dual(d) == s);
          // Orthogonality, checked on bases.
          CHECK(multiply(s.basis(), d.basis().transposed()).is_zero());
        }
      }
    }
  }
  CHECK(enumerate_grassmannian(4, 2, Field::of_size(2)).size() == 35);
}

TEST_CASE("sum and intersection dimensions") {
  const Field f = Field::of_size(2);
  const auto all = enumerate_grassmannian(4, 2, f);
  for (std::size_t i = 0; i < all.size(); i += 3) {
    for (std::size_t j = 0; j < all.size(); j += 5) {
      const auto s = sum(all[i], all[j]);
      CHECK(s.dim() == span_dim({all[i], all[j]}));
      CHECK(intersection_dim(all[i], all[j]) == 4 - s.dim());
      // Intersection size from the vector-set oracle.
      auto a = oracle::span_set(f, oracle::rows_of(all[i].basis()), 4);
      auto b = oracle::span_set(f, oracle::rows_of(all[j].basis()), 4);
      std::size_t common = 0;
      for (const auto& v : a) common += b.count(v);
      CHECK(common == (std::size_t{1} << intersection_dim(all[i], all[j])));
    }
  }
}

TEST_CASE("canonical order") {
  const Field f = Field::of_size(2);
  const auto a = line(f, {1, 0});
  const auto b = line(f, {1, 1});
  const auto c = line(f, {0, 1});
  CHECK(a < b);
  CHECK(b < c);
  CHECK(Subspace::zero(f, 2) < a);
  CHECK(c < Subspace::full(f, 2));
}
