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

#include <random>
#include <stdexcept>

#include "covnet/network.hpp"
#include "covnet/rank_metric.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covnet;

namespace {

NetworkParams net(std::size_t h, std::size_t r, std::size_t alpha, std::size_t ell, std::size_t eps) {
  return NetworkParams{h, r, alpha, ell, eps};
}

LinearSolution three_lines() {
  const Field f = Field::of_size(2);
  return LinearSolution(net(2, 3, 2, 1, 0), f, 1,
                        {Matrix::from_rows(f, {{1, 0}}), Matrix::from_rows(f, {{1, 1}}), Matrix::from_rows(f, {{0, 1}})});
}

LinearSolution construction_network() {
  const Field f = Field::of_size(2);
  return solution_from_code(dual_lifted_mrd_covering_code(3, 1, 1, 2, f), net(3, 4, 2, 1, 1), 1);
}

std::vector<std::vector<Elem>> random_messages(const LinearSolution& sol, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> d(0, sol.field().size() - 1);
  std::vector<std::vector<Elem>> m(sol.params().h, std::vector<Elem>(sol.t()));
  for (auto& v : m)
    for (auto& x : v) x = d(rng);
  return m;
}

}  // namespace

TEST_CASE("classification") {
  CHECK(classify(net(2, 3, 2, 1, 1)) == Solvability::kTrivial);
  CHECK(classify(net(4, 3, 2, 1, 1)) == Solvability::kUnsolvable);
  CHECK(classify(net(3, 3, 2, 1, 1)) == Solvability::kNontrivial);
  CHECK(to_string(Solvability::kNontrivial) == "nontrivial");
  CHECK(net(3, 5, 2, 1, 1).receiver_count() == 10);

  CHECK_THROWS_AS(classify(net(3, 3, 1, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(classify(net(3, 1, 2, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(classify(net(0, 3, 2, 1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(classify(net(3, 3, 2, 0, 1)), std::invalid_argument);
}

TEST_CASE("classification partitions the parameter space") {
  for (std::size_t h = 1; h <= 8; ++h)
    for (std::size_t alpha = 2; alpha <= 4; ++alpha)
      for (std::size_t ell = 1; ell <= 3; ++ell)
        for (std::size_t eps = 0; eps <= 3; ++eps) {
          const auto c = classify(net(h, alpha + 1, alpha, ell, eps));
          if (h <= ell + eps) {
            CHECK(c == Solvability::kTrivial);
          } else if (h > alpha * ell + eps) {
            CHECK(c == Solvability::kUnsolvable);
          } else {
            CHECK(c == Solvability::kNontrivial);
          }
        }
}

TEST_CASE("solution shapes are checked") {
  const Field f = Field::of_size(2);
  CHECK_THROWS_AS(LinearSolution(net(2, 3, 2, 1, 0), f, 1, {Matrix(f, 1, 2), Matrix(f, 1, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(LinearSolution(net(2, 2, 2, 1, 0), f, 1, {Matrix(f, 1, 2), Matrix(f, 2, 2)}), std::invalid_argument);
  CHECK_THROWS_AS(LinearSolution(net(2, 2, 2, 1, 0), f, 1, {Matrix(f, 1, 2), Matrix(Field::of_size(3), 1, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LinearSolution(net(2, 2, 2, 1, 0), f, 0, {}), std::invalid_argument);
}

TEST_CASE("verify examples") {
  const auto good = three_lines();
  CHECK(verify_solution(good).valid);

  const Field f = Field::of_size(2);
  const LinearSolution bad(net(2, 3, 2, 1, 0), f, 1,
                           {Matrix::from_rows(f, {{1, 0}}), Matrix::from_rows(f, {{1, 0}}), Matrix::from_rows(f, {{0, 1}})});
  const auto check = verify_solution(bad);
  CHECK_FALSE(check.valid);
  REQUIRE(check.failing_receiver.has_value());
  CHECK(*check.failing_receiver == std::vector<std::size_t>{0, 1});

  // eps = h: nothing has to come from the middle layer.
  const LinearSolution degenerate(net(2, 2, 2, 1, 2), f, 1, {Matrix(f, 1, 2), Matrix(f, 1, 2)});
  CHECK(verify_solution(degenerate).valid);

  const LinearSolution unsolvable(net(4, 2, 2, 1, 1), f, 1, {Matrix(f, 1, 4), Matrix(f, 1, 4)});
  CHECK_THROWS_AS(verify_solution(unsolvable), std::invalid_argument);
}

TEST_CASE("trivial networks are solved by coordinate assignments") {
  for (std::size_t h = 1; h <= 4; ++h) {
    for (std::size_t ell = 1; ell <= 3; ++ell) {
      for (std::size_t eps = 0; eps <= 3; ++eps) {
        if (h > ell + eps) continue;
        const Field f = Field::of_size(3);
        // Every middle node carries the first min(ell, h) coordinates.
        Matrix a(f, ell, h);
        for (std::size_t i = 0; i < std::min(ell, h); ++i) a(i, i) = 1;
        const LinearSolution sol(net(h, 4, 2, ell, eps), f, 1, {a, a, a, a});
        CHECK(verify_solution(sol).valid);
        for (const auto& rec : simulate(sol, std::vector<std::vector<Elem>>(h, std::vector<Elem>{2}))) {
          REQUIRE(rec.decoded.has_value());
          CHECK(*rec.decoded == std::vector<std::vector<Elem>>(h, std::vector<Elem>{2}));
        }
      }
    }
  }
}

TEST_CASE("verification is independent of thread count") {
  std::mt19937_64 rng(9);
  const Field f = Field::of_size(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Matrix> coding;
    std::uniform_int_distribution<Elem> d(0, 1);
    for (int i = 0; i < 6; ++i) {
      Matrix m(f, 1, 3);
      for (std::size_t c = 0; c < 3; ++c) m(0, c) = d(rng);
      coding.push_back(m);
    }
    const LinearSolution s(net(3, 6, 2, 1, 1), f, 1, coding);
    const auto one = verify_solution(s, 1);
    const auto many = verify_solution(s, 4);
    CHECK(one.valid == many.valid);
    CHECK(one.failing_receiver == many.failing_receiver);
  }
}

TEST_CASE("solution_from_code") {
  const Field f = Field::of_size(2);
  const CoveringCode lines(f, 2, 1, 1, 2, enumerate_grassmannian(2, 1, f));
  const auto sol = solution_from_code(lines, net(2, 3, 2, 1, 0), 1);
  CHECK(sol.coding() == three_lines().coding());
  CHECK(verify_solution(sol).valid);

  const auto built = construction_network();
  CHECK(built.coding().size() == 4);
  CHECK(verify_solution(built).valid);

  const CoveringCode wrong_delta(f, 2, 1, 0, 2, enumerate_grassmannian(2, 1, f));
  CHECK_THROWS_AS(solution_from_code(wrong_delta, net(2, 3, 2, 1, 0), 1), std::invalid_argument);
  CHECK_THROWS_AS(solution_from_code(lines, net(2, 4, 2, 1, 0), 1), std::invalid_argument);

  // Deficient codewords are padded with zero rows.
  const CoveringCode thin(f, 4, 2, 2, 2, {Subspace::span(Matrix::from_rows(f, {{1, 0, 0, 0}})),
                                         Subspace::span(Matrix::from_rows(f, {{0, 1, 0, 0}, {0, 0, 1, 0}}))});
  const auto padded = solution_from_code(thin, net(2, 2, 2, 1, 0), 2);
  CHECK(padded.coding()[0].rows() == 2);
  CHECK(padded.coding()[0] == Matrix::from_rows(f, {{1, 0, 0, 0}, {0, 0, 0, 0}}));
}

TEST_CASE("code and solution views agree") {
  std::mt19937_64 rng(2024);
  for (unsigned q : {2u, 3u}) {
    const Field f = Field::of_size(q);
    for (auto [h, ell, eps, t] : {std::tuple{2, 1, 0, 1}, std::tuple{3, 1, 1, 1}, std::tuple{2, 1, 0, 2},
                                  std::tuple{4, 2, 1, 1}}) {
      const std::size_t n = static_cast<std::size_t>(h * t);
      const std::size_t k = static_cast<std::size_t>(ell * t);
      const auto g = enumerate_grassmannian(n, k, f);
      for (int trial = 0; trial < 25; ++trial) {
        const std::size_t alpha = 2 + rng() % 2;
        const std::size_t r = alpha + rng() % 4;
        if (static_cast<std::size_t>(h) > alpha * ell + eps) continue;
        std::vector<Subspace> words;
        for (std::size_t i = 0; i < r; ++i) words.push_back(g[rng() % g.size()]);
        const CoveringCode code(f, n, k, static_cast<long long>((h - ell - eps) * t), alpha, words);
        const NetworkParams p = net(h, r, alpha, ell, eps);
        const auto sol = solution_from_code(code, p, t);
        CHECK(is_covering_code(code).covering == verify_solution(sol).valid);
        const auto back = code_from_solution(sol);
        CHECK(back.codewords() == code.codewords());
        CHECK(back.delta() == code.delta());
      }
    }
  }
}

TEST_CASE("direct links") {
  const auto lines = three_lines();
  const auto b = derive_direct_link_matrices(lines);
  CHECK(b.size() == 3);
  for (const auto& m : b) CHECK(m.rows() == 0);

  const auto built = construction_network();
  const auto links = derive_direct_link_matrices(built);
  REQUIRE(links.size() == 6);
  std::size_t receiver = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const auto& bl = links[receiver++];
      CHECK(bl.rows() == 1);
      CHECK(rank(vstack({built.coding()[i], built.coding()[j], bl})) == 3);
    }
  }

  const Field f = Field::of_size(2);
  const LinearSolution bad(net(2, 3, 2, 1, 0), f, 1,
                           {Matrix::from_rows(f, {{1, 0}}), Matrix::from_rows(f, {{1, 0}}), Matrix::from_rows(f, {{0, 1}})});
  CHECK_THROWS_AS(derive_direct_link_matrices(bad), std::invalid_argument);
}

TEST_CASE("simulation") {
  const auto lines = three_lines();
  for (const auto& rec : simulate(lines, {{0}, {0}})) {
    REQUIRE(rec.decoded.has_value());
    CHECK(*rec.decoded == std::vector<std::vector<Elem>>{{0}, {0}});
  }
  const auto out = simulate(lines, {{1}, {0}});
  CHECK(out.size() == 3);
  CHECK(out[2].middle_nodes == std::vector<std::size_t>{1, 2});
  for (const auto& rec : out) {
    REQUIRE(rec.decoded.has_value());
    CHECK(*rec.decoded == std::vector<std::vector<Elem>>{{1}, {0}});
  }
  CHECK_THROWS_AS(simulate(lines, {{1}}), std::invalid_argument);
  CHECK_THROWS_AS(simulate(lines, {{1}, {2}}), std::invalid_argument);
}

TEST_CASE("simulation soundness") {
  std::mt19937_64 rng(77);
  for (const auto& sol : {three_lines(), construction_network()}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto msgs = random_messages(sol, rng);
      for (const auto& rec : simulate(sol, msgs)) {
        REQUIRE(rec.decoded.has_value());
        CHECK(*rec.decoded == msgs);
      }
    }
  }
  // A vector solution over GF(2) with t = 2.
  const Field f = Field::of_size(2);
  const auto spread = find_covering_code(4, 2, 2, 2, f, 5);
  REQUIRE(spread.code.has_value());
  const auto vec_sol = solution_from_code(*spread.code, net(2, 5, 2, 1, 0), 2);
  REQUIRE(verify_solution(vec_sol).valid);
  for (int trial = 0; trial < 20; ++trial) {
    const auto msgs = random_messages(vec_sol, rng);
    for (const auto& rec : simulate(vec_sol, msgs)) CHECK(rec.decoded == std::optional(msgs));
  }

  // Invalid solutions leave some receiver underdetermined.
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<Elem> d(0, 1);
    std::vector<Matrix> coding;
    for (int i = 0; i < 5; ++i) {
      Matrix m(f, 1, 3);
      for (std::size_t c = 0; c < 3; ++c) m(0, c) = d(rng);
      coding.push_back(m);
    }
    const LinearSolution s(net(3, 5, 2, 1, 1), f, 1, coding);
    const auto outcome = simulate(s, random_messages(s, rng));
    const bool any_fail = std::any_of(outcome.begin(), outcome.end(), [](const auto& r) { return !r.decoded; });
    CHECK(any_fail == !verify_solution(s).valid);
  }
}

TEST_CASE("random search") {
  const Field f11 = Field::of_size(11);
  const auto p = net(3, 3, 2, 1, 1);
  const auto sol = random_solution_search(p, f11, 1, 1000, 0);
  REQUIRE(sol.has_value());
  CHECK(verify_solution(*sol).valid);

  CHECK_FALSE(random_solution_search(p, f11, 1, 0, 0).has_value());

  const auto again = random_solution_search(p, f11, 1, 1000, 0);
  CHECK(again->coding() == sol->coding());
  const auto threaded = random_solution_search(p, f11, 1, 1000, 0, 4);
  CHECK(threaded->coding() == sol->coding());

  // Beyond the covering upper bound nothing can be found.
  const Field f2 = Field::of_size(2);
  CHECK_FALSE(random_solution_search(net(3, 15, 2, 1, 1), f2, 1, 50, 1).has_value());

  CHECK_THROWS_AS(random_solution_search(net(2, 3, 2, 1, 1), f2, 1, 5, 0), std::invalid_argument);
}

TEST_CASE("receiver failure probability") {
  const auto p = net(2, 2, 2, 1, 0);
  // 2 x 2 binary matrices below rank 2, counted exhaustively.
  std::size_t bad = 0;
  oracle::for_each_matrix(Field::of_size(2), 2, 2, [&](const Matrix& m) { bad += oracle::span_rank(m) < 2; });
  CHECK(bad == 10);
  CHECK(receiver_failure_probability(p, 2, 1) == Rational(10, 16));
  const double est = estimate_receiver_failure_probability(p, Field::of_size(2), 1, 20000, 3);
  CHECK(est == doctest::Approx(0.625).epsilon(0.03));
  CHECK(estimate_receiver_failure_probability(p, Field::of_size(2), 1, 500, 3) ==
        estimate_receiver_failure_probability(p, Field::of_size(2), 1, 500, 3));
}

TEST_CASE("smallest field sizes") {
  const auto qs4 = compute_qs(net(2, 4, 2, 1, 0), 16);
  CHECK(qs4.value == std::optional<std::uint64_t>(3));
  CHECK(qs4.exact);
  const auto qs3 = compute_qs(net(2, 3, 2, 1, 0), 16);
  CHECK(qs3.value == std::optional<std::uint64_t>(2));
  CHECK(qs3.exact);

  const auto qv4 = compute_qv(net(2, 4, 2, 1, 0), 16);
  CHECK(qv4.value == std::optional<std::uint64_t>(3));
  CHECK(qv4.exact);
  CHECK(qv4.t == 1);

  // Six lines need GF(5); the spread of GF(2)^4 has five planes, so t = 2
  // over GF(2) is not enough either, while GF(4) fails too.
  const auto qs6 = compute_qs(net(2, 6, 2, 1, 0), 16);
  const auto qv6 = compute_qv(net(2, 6, 2, 1, 0), 16);
  CHECK(qs6.value == std::optional<std::uint64_t>(5));
  REQUIRE(qv6.value.has_value());
  CHECK(*qs6.value >= *qv6.value);

  const auto capped = compute_qs(net(2, 4, 2, 1, 0), 2);
  CHECK_FALSE(capped.value.has_value());
  CHECK_FALSE(capped.exact);
  CHECK_FALSE(compute_qv(net(2, 4, 2, 1, 0), 2).value.has_value());

  const auto trivial = compute_qs(net(2, 4, 2, 1, 1), 16);
  CHECK(trivial.trivial);
  CHECK(trivial.value == std::optional<std::uint64_t>(2));
  CHECK_THROWS_AS(compute_qs(net(4, 4, 2, 1, 1), 16), std::invalid_argument);

  const auto gap = estimate_gap(net(2, 4, 2, 1, 0), 16);
  CHECK(gap.exact());
  REQUIRE(gap.gap.has_value());
  CHECK(*gap.gap >= 0.0);
}

TEST_CASE("q_s is never below q_v when both are exact") {
  for (std::size_t r = 2; r <= 6; ++r) {
    for (auto [h, ell, eps, alpha] : {std::tuple{2, 1, 0, 2}, std::tuple{3, 1, 1, 2}, std::tuple{3, 1, 0, 3}}) {
      if (r < static_cast<std::size_t>(alpha)) continue;
      const auto p = net(h, r, alpha, ell, eps);
      const auto qs = compute_qs(p, 9, 200000);
      const auto qv = compute_qv(p, 9, 200000);
      if (qs.exact && qv.exact && qs.value && qv.value) CHECK(*qs.value >= *qv.value);
    }
  }
}
