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

#include <cmath>
#include <numbers>

#include "covnet/bounds.hpp"
#include "covnet/covering.hpp"
#include "covnet/rank_metric.hpp"
#include "doctest.h"

using namespace covnet;

namespace ref {

// Straight transcriptions in long double, written independently of the library.
constexpr long double kG = 3.48L;

long double beta(int alpha) {
  long double fact = 1;
  for (int i = 2; i < alpha; ++i) fact *= i;
  return std::pow(fact / (2 * std::numbers::e_v<long double> * kG * alpha), 1.0L / (alpha - 1));
}
long double f(int h, int l, int e, int a, int t) {
  return static_cast<long double>((a * l + e - h) * e) * t * t + (a * l + 2 * e - h) * t + 1;
}
long double g(int h, int l, int e, int t) {
  const long double x = l * t, y = (h - l) * t;
  return std::max(x, y) * (std::min(x, y) - (h - l - e) * t + 1);
}
int theta(int h, int l, int e, int a) {
  return a - static_cast<int>(std::floor(static_cast<long double>(h - e) / l)) + 1;
}
long double necessary(int h, int l, int e, int a, long double r, int t) {
  const long double p = 1.0L / (l * (e * t + 1));
  if (h >= 2 * l + e) {
    const int th = theta(h, l, e, a);
    return std::pow((r + th - a) / (kG * th), p);
  }
  return std::pow(r / (kG * (a - 1)), p);
}
long double sufficient(int h, int l, int e, int a, long double r, int t) {
  if (h >= 2 * l + e) return std::pow(r / beta(a), (a - 1) * t / f(h, l, e, a, t));
  return std::pow(r / (a - 1), t / g(h, l, e, t));
}
long double gap(int h, int l, int e, int a, long double r) {
  const long double s = 1.0L / (l * (e + 1));
  if (h >= 2 * l + e) {
    int t = 1;
    while (std::pow(2.0L, f(h, l, e, a, t) / (a - 1)) < r / beta(a)) ++t;
    const int th = theta(h, l, e, a);
    return s * std::log2((r + th - a) / (kG * th)) - t;
  }
  int t = 1;
  while (std::pow(2.0L, g(h, l, e, t)) < r / (a - 1)) ++t;
  return s * std::log2(r / (kG * (a - 1))) - t;
}

}  // namespace ref

TEST_CASE("constants") {
  CHECK(beta_constant(2, kGamma) == doctest::Approx(0.0264281207738));
  CHECK(beta_constant(3, kGamma) == doctest::Approx(0.1877165266168));
  CHECK(theta_constant(4, 1, 0, 4) == 1);
  CHECK(theta_constant(4, 1, 0, 5) == 2);
  CHECK(lll_exponent(3, 1, 1, 2, 1) == 2);
  CHECK(lll_exponent(4, 2, 0, 2, 7) == 1);
  CHECK(mrd_exponent(2, 1, 1, 3) == 12);
  CHECK(gamma_constant({}) == 3.48);
  BoundOptions exact{GammaMode::kExact, false};
  CHECK(gamma_constant(exact) == doctest::Approx(3.4627466194550));
  CHECK(gamma_constant(exact, 3) == doctest::Approx(1.7853123419985));
}

TEST_CASE("covering upper bound, exact form") {
  // theta = -1 here: the parameters sit outside the alpha ell >= h - eps regime.
  const auto outside = covering_upper_bound_exact(4, 1, 0, 2, 2, 1);
  REQUIRE(outside.exact.has_value());
  CHECK(*outside.exact == -1);
  CHECK_FALSE(outside.valid);

  const auto r = covering_upper_bound_exact(4, 1, 0, 4, 2, 1);
  CHECK(r.valid);
  CHECK(*r.exact == 5);  // 1 * (1 * 3 - 1) + 3

  // eps = 0 collapses the q-binomial factor to 1.
  for (std::uint64_t q : {2, 3, 5}) {
    const auto v = covering_upper_bound_exact(6, 2, 0, 3, q, 1);
    const long long hyper = static_cast<long long>((std::pow(q, 3) - 1) / (q - 1));
    CHECK(*v.exact == 1 * (theta_constant(6, 2, 0, 3) * hyper - 1) + 2);
  }
  CHECK_FALSE(covering_upper_bound_exact(3, 2, 0, 2, 2, 1).valid);
}

TEST_CASE("covering upper bound, relaxed form") {
  const auto r = covering_upper_bound_relaxed(4, 1, 0, 4, 2, 1);
  CHECK(r.valid);
  CHECK(r.value == doctest::Approx(9.96));
  CHECK(covering_upper_bound_relaxed(4, 1, 0, 5, 2, 1).detail("theta") == 2.0);
  CHECK_FALSE(covering_upper_bound_relaxed(3, 2, 0, 2, 2, 1).valid);
}

TEST_CASE("relaxed form dominates the exact form for q >= 3 and for eps = 0") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    for (long long t = 1; t <= 2; ++t)
      for (long long h = 2; h <= 9; ++h)
        for (long long l = 1; l <= 3; ++l)
          for (long long e = 0; e <= 3; ++e)
            for (long long a = 2; a <= 5; ++a) {
              if (q == 2 && e > 0) continue;
              const auto ex = covering_upper_bound_exact(h, l, e, a, q, t);
              if (!ex.valid) continue;
              const auto rel = covering_upper_bound_relaxed(h, l, e, a, q, t);
              CAPTURE(q);
              CAPTURE(h);
              CAPTURE(l);
              CAPTURE(e);
              CAPTURE(a);
              CHECK(rel.value >= ex.value);
            }
  }
}

TEST_CASE("relaxed form can fall below the exact form over GF(2)") {
  const auto ex = covering_upper_bound_exact(6, 2, 2, 3, 2, 1);
  const auto rel = covering_upper_bound_relaxed(6, 2, 2, 3, 2, 1);
  CHECK(ex.valid);
  CHECK(*ex.exact == 456);
  CHECK(rel.value == doctest::Approx(446.44));
  CHECK(rel.value < ex.value);
}

TEST_CASE("pairwise upper bound") {
  const auto a = pairwise_upper_bound(2, 1, 0, 2, 1);
  CHECK(a.valid);
  CHECK(*a.exact == 3);
  const auto b = pairwise_upper_bound(3, 1, 1, 2, 1);
  CHECK(*b.exact == 7);
  CHECK(b.detail("relaxed") == doctest::Approx(3.48 * 4));

  for (std::uint64_t q : {2, 3})
    for (long long t = 1; t <= 2; ++t)
      for (long long h = 2; h <= 6; ++h)
        for (long long l = 1; l <= 3; ++l)
          for (long long e = 0; e <= 2; ++e) {
            const auto r = pairwise_upper_bound(h, l, e, q, t);
            if (!r.valid) continue;
            CHECK(r.value <= *r.detail("relaxed") * (1 + 1e-12));
          }
  CHECK_FALSE(pairwise_upper_bound(2, 1, 1, 2, 1).valid);
}

TEST_CASE("LLL lower bound") {
  const auto r = lll_lower_bound(3, 1, 1, 2, 11, 1);
  CHECK(r.valid);
  CHECK(r.value == doctest::Approx(3.1978026136));
  CHECK(r.detail("f") == 2.0);
  CHECK(*r.detail("beta") == doctest::Approx(0.0264281208));

  BoundOptions plus{GammaMode::kFixed, true};
  CHECK(lll_lower_bound(3, 1, 1, 2, 11, 1, plus).value == doctest::Approx(4.1978026136));

  for (long long t = 1; t <= 4; ++t) CHECK(lll_lower_bound(4, 2, 0, 2, 3, t).detail("f") == 1.0);

  for (long long h = 3; h <= 6; ++h)
    for (long long a = 2; a <= 4; ++a) {
      double prev = 0;
      for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
        const auto v = lll_lower_bound(h, 1, 1, a, q, 1);
        if (!v.valid) continue;
        CHECK(v.value > prev);
        prev = v.value;
      }
    }
  CHECK_FALSE(lll_lower_bound(2, 1, 1, 2, 2, 1).valid);
}

TEST_CASE("MRD lower bound") {
  const auto r = mrd_lower_bound(3, 1, 1, 2, 2, 1);
  CHECK(r.valid);
  CHECK(*r.exact == 4);
  CHECK(r.branch.find("h > 2 ell") != std::string::npos);
  for (std::uint64_t q : {2, 3, 4, 5}) CHECK(*mrd_lower_bound(2, 1, 0, 2, q, 1).exact == q);
  CHECK(*mrd_lower_bound(3, 1, 1, 3, 2, 1).exact == 2 * *mrd_lower_bound(3, 1, 1, 2, 2, 1).exact);
  CHECK_FALSE(mrd_lower_bound(5, 1, 1, 4, 2, 1).valid);

  // Matches the size of the construction it comes from.
  for (auto [h, l, e, a] : {std::tuple{3, 1, 1, 2}, std::tuple{2, 1, 0, 2}, std::tuple{3, 1, 1, 3}, std::tuple{4, 2, 0, 2}}) {
    const Field f = Field::of_size(2);
    const auto code = dual_lifted_mrd_covering_code(h, l, h - l - e, a, f);
    CHECK(*mrd_lower_bound(h, l, e, a, 2, 1).exact == code.size());
  }
}

TEST_CASE("LLL event probability and dependency degree") {
  const auto p = lll_event_probability_bound(3, 1, 1, 2, 11, 1);
  CHECK(p.detail("exponent") == -2.0);
  CHECK(p.value == doctest::Approx(2 * 3.48 / 121.0));

  const auto d = lll_dependency_degree(5, 2);
  CHECK(d.bound == 8);
  CHECK(d.exact == 7);
  for (long long a = 2; a <= 6; ++a) CHECK(lll_dependency_degree(a, a).exact == 1);
  for (long long a = 2; a <= 12; ++a)
    for (long long r = a; r <= 30; ++r) {
      const auto dd = lll_dependency_degree(r, a);
      CHECK(dd.exact <= dd.bound);
    }
  const auto rep = lll_dependency_report(5, 2);
  CHECK(rep.value == 8.0);
  CHECK(rep.detail("exact") == 7.0);
}

TEST_CASE("field-size conditions") {
  const auto n = field_size_necessary(4, 1, 0, 4, 20, 1);
  CHECK(n.valid);
  CHECK(n.value == doctest::Approx(17 / 3.48));

  const auto s = field_size_sufficient(3, 1, 1, 2, 3, 1);
  CHECK(s.valid);
  CHECK(s.value == doctest::Approx(10.6543629165));

  // h = 2 ell + eps selects the first case.
  const auto s2 = field_size_sufficient(2, 1, 0, 2, 3, 1);
  CHECK(s2.branch == "h >= 2 ell + eps");
  CHECK(s2.value == doctest::Approx(113.5154491564));

  // floor((h - eps) / ell) = 1 is the second case, not a domain error.
  const auto n2 = field_size_necessary(3, 2, 1, 2, 10, 1);
  CHECK(n2.valid);
  CHECK(n2.branch == "h < 2 ell + eps");

  // Per-symbol threshold tends to 1 as t grows when f is quadratic.
  double prev = 1e300;
  for (long long t = 1; t <= 60; ++t) {
    const double per_symbol = std::pow(field_size_sufficient(3, 1, 1, 3, 1000, t).value, 1.0 / static_cast<double>(t));
    CHECK(per_symbol <= prev);
    prev = per_symbol;
  }
  CHECK(prev < 1.01);

  // Necessary never exceeds sufficient outside the degenerate range.
  for (int h = 2; h <= 7; ++h)
    for (int l = 1; l <= 3; ++l)
      for (int e = 0; e <= 3; ++e)
        for (int a = 2; a <= 4; ++a) {
          if (!(l + e < h && h <= a * l + e)) continue;
          for (int t = 1; t <= 3; ++t)
            for (long long r : {static_cast<long long>(a + 1), 2LL * a, 10LL, 100LL, 1000LL, 1000000LL}) {
              const auto lo = field_size_necessary(h, l, e, a, static_cast<std::uint64_t>(r), t);
              const auto hi = field_size_sufficient(h, l, e, a, static_cast<std::uint64_t>(r), t);
              CAPTURE(h);
              CAPTURE(l);
              CAPTURE(e);
              CAPTURE(a);
              CAPTURE(r);
              CAPTURE(t);
              CHECK(lo.value == doctest::Approx(static_cast<double>(ref::necessary(h, l, e, a, r, t))));
              CHECK(hi.value == doctest::Approx(static_cast<double>(ref::sufficient(h, l, e, a, r, t))));
              if (lo.valid && hi.valid) CHECK(lo.value <= hi.value);
            }
        }
}

TEST_CASE("gap lower bound") {
  const auto g = gap_lower_bound(2, 1, 1, 2, 1u << 20);
  CHECK(g.valid);
  CHECK(g.detail("t_star") == 4.0);
  CHECK(g.value == doctest::Approx(5.1004563470));

  // r <= alpha - 1 makes the bound vacuous but it is still reported.
  const auto tiny = gap_lower_bound(2, 1, 1, 3, 2);
  CHECK(tiny.value <= 0);

  // t_delta = 1 whenever r <= beta 2^{f(1)/(alpha-1)}.
  const auto first = gap_lower_bound(4, 1, 1, 4, 1);
  CHECK(first.detail("t_delta") == 1.0);

  // eps = 0 and alpha ell = h keeps f at 1, so no t works.
  const auto stuck = gap_lower_bound(4, 2, 0, 2, 1000);
  CHECK_FALSE(stuck.valid);

  for (int h = 2; h <= 6; ++h)
    for (int l = 1; l <= 3; ++l)
      for (int e = 0; e <= 3; ++e)
        for (int a = 2; a <= 4; ++a) {
          if (!(l + e < h && h <= a * l + e)) continue;
          if (h >= 2 * l + e && e == 0 && a * l == h) continue;
          for (int lg : {4, 10, 17, 25}) {
            const std::uint64_t r = std::uint64_t{1} << lg;
            CAPTURE(h);
            CAPTURE(l);
            CAPTURE(e);
            CAPTURE(a);
            CAPTURE(lg);
            CHECK(gap_lower_bound(h, l, e, a, r).value ==
                  doctest::Approx(static_cast<double>(ref::gap(h, l, e, a, static_cast<long double>(r)))));
          }
        }
}

TEST_CASE("closed-form gap bound") {
  const auto c = gap_lower_bound_closed_form(2, 1, 1, 2, 1u << 20);
  CHECK(c.valid);
  CHECK(c.value == doctest::Approx(4.5278640450));
  CHECK_FALSE(gap_lower_bound_closed_form(2, 1, 0, 2, 1u << 20).valid);

  double prev = -1e300;
  for (int lg = 10; lg <= 30; ++lg) {
    const double v = gap_lower_bound_closed_form(2, 1, 1, 2, std::uint64_t{1} << lg).value;
    CHECK(v > prev);
    prev = v;
  }
  // h > 2 ell + eps with alpha ell + eps = h has no closed form.
  CHECK_FALSE(gap_lower_bound_closed_form(5, 1, 1, 4, 1000).valid);
}

TEST_CASE("brute force sits between the lower and upper bounds") {
  const Field f = Field::of_size(2);
  struct Case {
    long long h, l, e, a;
  };
  for (const Case c : {Case{2, 1, 0, 2}, Case{3, 1, 1, 2}, Case{3, 1, 0, 3}, Case{2, 1, 0, 3}}) {
    const auto best = max_covering_code(c.h, c.l, c.h - c.l - c.e, c.a, f);
    REQUIRE(best.exact);
    const double size = static_cast<double>(best.size);
    const auto lb = mrd_lower_bound(c.h, c.l, c.e, c.a, 2, 1);
    if (lb.valid) CHECK(lb.value <= size);
    if (c.a == 2) CHECK(size <= pairwise_upper_bound(c.h, c.l, c.e, 2, 1).value);
    const auto ub = covering_upper_bound_exact(c.h, c.l, c.e, c.a, 2, 1);
    if (ub.valid) CHECK(size <= ub.value);
  }
}
