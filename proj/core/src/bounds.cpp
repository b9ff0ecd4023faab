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

#include "covnet/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace covnet {

namespace {

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string name) { report_.name = std::move(name); }

  ReportBuilder& require(std::string condition, bool holds) {
    report_.assumptions.push_back({std::move(condition), holds});
    return *this;
  }
  ReportBuilder& detail(std::string key, double v) {
    report_.details.emplace_back(std::move(key), v);
    return *this;
  }
  ReportBuilder& branch(std::string b) {
    report_.branch = std::move(b);
    return *this;
  }
  ReportBuilder& value(double v) {
    report_.value = v;
    return *this;
  }
  ReportBuilder& exact(Rational v) {
    report_.value = to_double(v);
    report_.exact = std::move(v);
    return *this;
  }

  BoundReport done() {
    report_.valid = std::all_of(report_.assumptions.begin(), report_.assumptions.end(),
                                [](const Assumption& a) { return a.holds; });
    return std::move(report_);
  }

 private:
  BoundReport report_;
};

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

double pow_q(std::uint64_t q, double exponent) { return std::pow(static_cast<double>(q), exponent); }

Rational q_power(std::uint64_t q, long long exponent) {
  if (exponent >= 0) return Rational(ipow(q, static_cast<unsigned>(exponent)));
  return Rational(BigInt(1), ipow(q, static_cast<unsigned>(-exponent)));
}

void basic_network_assumptions(ReportBuilder& b, long long h, long long ell, long long eps, long long alpha) {
  b.require("alpha >= 2", alpha >= 2).require("h >= 1", h >= 1).require("ell >= 1", ell >= 1).require("eps >= 0",
                                                                                                        eps >= 0);
}

}  // namespace

std::optional<double> BoundReport::detail(const std::string& key) const {
  for (const auto& [k, v] : details) {
    if (k == key) return v;
  }
  return std::nullopt;
}

double gamma_constant(const BoundOptions& opts, std::optional<std::uint64_t> q) {
  if (opts.gamma == GammaMode::kFixed) return kGamma;
  const double base = static_cast<double>(q.value_or(2));
  double prod = 1.0;
  double term = 1.0;
  while (true) {
    term /= base;
    if (term < 1e-18) break;
    prod /= 1.0 - term;
  }
  return prod;
}

double beta_constant(long long alpha, double gamma) {
  if (alpha < 2) throw std::invalid_argument("covnet: beta needs alpha >= 2");
  const double fact = std::tgamma(static_cast<double>(alpha));  // (alpha-1)!
  return std::pow(fact / (2.0 * std::numbers::e * gamma * static_cast<double>(alpha)),
                  1.0 / static_cast<double>(alpha - 1));
}

long long theta_constant(long long h, long long ell, long long eps, long long alpha) {
  return alpha - floor_div(h - eps, ell) + 1;
}

long long lll_exponent(long long h, long long ell, long long eps, long long alpha, long long t) {
  return (alpha * ell + eps - h) * eps * t * t + (alpha * ell + 2 * eps - h) * t + 1;
}

long long mrd_exponent(long long h, long long ell, long long eps, long long t) {
  const long long a = ell * t;
  const long long b = (h - ell) * t;
  return std::max(a, b) * (std::min(a, b) - (h - ell - eps) * t + 1);
}

BoundReport covering_upper_bound_exact(long long h, long long ell, long long eps, long long alpha, std::uint64_t q,
                                       long long t, const BoundOptions&) {
  ReportBuilder b("upper_exact");
  basic_network_assumptions(b, h, ell, eps, alpha);
  b.require("t >= 1", t >= 1).require("q >= 2", q >= 2);
  b.require("h - eps >= 2 ell", h - eps >= 2 * ell);
  b.require("alpha ell >= h - eps", alpha * ell >= h - eps);
  if (ell < 1 || t < 1 || q < 2 || eps < 0) return b.value(std::numeric_limits<double>::quiet_NaN()).done();

  const long long fl = floor_div(h - eps, ell);
  const long long theta = alpha - fl + 1;
  const BigInt m = gaussian_binomial((eps + ell) * t, eps * t, q);
  const BigInt hyper = (ipow(q, static_cast<unsigned>(ell * t + 1)) - 1) / (q - 1);
  const BigInt value = m * (BigInt(theta) * hyper - 1) + fl - 1;
  b.detail("theta", static_cast<double>(theta)).detail("subspaces_containing_w", to_double(m));
  return b.exact(Rational(value)).done();
}

BoundReport covering_upper_bound_relaxed(long long h, long long ell, long long eps, long long alpha, std::uint64_t q,
                                         long long t, const BoundOptions& opts) {
  ReportBuilder b("upper_relaxed");
  basic_network_assumptions(b, h, ell, eps, alpha);
  b.require("t >= 1", t >= 1).require("q >= 2", q >= 2);
  b.require("h - eps >= 2 ell", h - eps >= 2 * ell);
  b.require("alpha ell >= h - eps", alpha * ell >= h - eps);
  if (ell < 1) return b.value(std::numeric_limits<double>::quiet_NaN()).done();

  const double gamma = gamma_constant(opts, q);
  const long long theta = theta_constant(h, ell, eps, alpha);
  const double v = gamma * static_cast<double>(theta) * pow_q(q, static_cast<double>(ell * t * (eps * t + 1))) +
                   static_cast<double>(alpha - theta);
  b.detail("theta", static_cast<double>(theta)).detail("gamma", gamma);
  return b.value(v).done();
}

BoundReport pairwise_upper_bound(long long h, long long ell, long long eps, std::uint64_t q, long long t,
                                 const BoundOptions& opts) {
  ReportBuilder b("upper_pairwise");
  b.require("h >= 1", h >= 1).require("ell >= 1", ell >= 1).require("eps >= 0", eps >= 0);
  b.require("t >= 1", t >= 1).require("q >= 2", q >= 2);
  const long long s = 2 * ell * t - (h - eps) * t + 1;
  b.require("2 ell t - (h - eps) t + 1 >= 0", s >= 0);
  b.require("h - eps > ell", h - eps > ell);
  const double gamma = gamma_constant(opts, q);
  const double relaxed = gamma * pow_q(q, static_cast<double>((h - ell) * (2 * ell + eps - h) * t * t + (h - ell) * t));
  b.detail("intersection_dim", static_cast<double>(s)).detail("relaxed", relaxed).detail("gamma", gamma);

  if (s < 0) return b.exact(Rational(1)).branch("sum of two never reaches (h-eps)t").done();
  const BigInt den = gaussian_binomial(ell * t, s, q);
  if (den == 0) return b.value(std::numeric_limits<double>::infinity()).done();
  return b.exact(Rational(gaussian_binomial(h * t, s, q), den)).done();
}

BoundReport lll_lower_bound(long long h, long long ell, long long eps, long long alpha, std::uint64_t q, long long t,
                            const BoundOptions& opts) {
  ReportBuilder b("lower_lll");
  basic_network_assumptions(b, h, ell, eps, alpha);
  b.require("t >= 1", t >= 1).require("q >= 2", q >= 2);
  b.require("ell + eps < h", ell + eps < h).require("h <= alpha ell + eps", h <= alpha * ell + eps);
  if (alpha < 2) return b.value(std::numeric_limits<double>::quiet_NaN()).done();

  const double gamma = gamma_constant(opts, q);
  const double beta = beta_constant(alpha, gamma);
  const long long f = lll_exponent(h, ell, eps, alpha, t);
  double v = beta * pow_q(q, static_cast<double>(f) / static_cast<double>(alpha - 1));
  if (opts.lll_plus_one) v += 1.0;
  b.detail("f", static_cast<double>(f)).detail("beta", beta).detail("gamma", gamma);
  return b.value(v).done();
}

BoundReport mrd_lower_bound(long long h, long long ell, long long eps, long long alpha, std::uint64_t q, long long t,
                            const BoundOptions&) {
  ReportBuilder b("lower_mrd");
  basic_network_assumptions(b, h, ell, eps, alpha);
  b.require("t >= 1", t >= 1).require("q >= 2", q >= 2);
  b.require("h <= 2 ell + eps", h <= 2 * ell + eps);
  const long long g = mrd_exponent(h, ell, eps, t);
  b.branch(h <= 2 * ell ? "h <= 2 ell: g = ell eps t^2 + ell t" : "h > 2 ell: g = (h-ell)(2 ell+eps-h) t^2 + (h-ell) t");
  b.detail("g", static_cast<double>(g));
  return b.exact(Rational(alpha - 1) * q_power(q, g)).done();
}

BoundReport lll_event_probability_bound(long long h, long long ell, long long eps, long long alpha, std::uint64_t q,
                                        long long t, const BoundOptions& opts) {
  ReportBuilder b("lll_event_prob");
  basic_network_assumptions(b, h, ell, eps, alpha);
  b.require("t >= 1", t >= 1).require("q >= 2", q >= 2);
  const double gamma = gamma_constant(opts, q);
  const long long exponent = (h - alpha * ell - eps) * eps * t * t + (h - alpha * ell - 2 * eps) * t - 1;
  b.detail("exponent", static_cast<double>(exponent)).detail("gamma", gamma);
  return b.value(2.0 * gamma * pow_q(q, static_cast<double>(exponent))).done();
}

DependencyDegree lll_dependency_degree(long long r, long long alpha) {
  return {BigInt(alpha) * binomial(r - 1, alpha - 1), binomial(r, alpha) - binomial(r - alpha, alpha)};
}

BoundReport lll_dependency_report(long long r, long long alpha) {
  ReportBuilder b("lll_dependency");
  b.require("alpha >= 2", alpha >= 2).require("r >= alpha", r >= alpha);
  const auto d = lll_dependency_degree(r, alpha);
  b.detail("exact", to_double(d.exact));
  return b.exact(Rational(d.bound)).done();
}

BoundReport field_size_necessary(long long h, long long ell, long long eps, long long alpha, std::uint64_t r,
                                 long long t, const BoundOptions& opts) {
  ReportBuilder b("field_necessary");
  basic_network_assumptions(b, h, ell, eps, alpha);
  b.require("t >= 1", t >= 1).require("r >= 1", r >= 1);
  if (ell < 1 || alpha < 2) return b.value(std::numeric_limits<double>::quiet_NaN()).done();

  const double gamma = gamma_constant(opts);
  const double root = 1.0 / static_cast<double>(ell * (eps * t + 1));
  const double rd = static_cast<double>(r);
  b.detail("gamma", gamma);
  if (h >= 2 * ell + eps) {
    const long long theta = theta_constant(h, ell, eps, alpha);
    const double base = (rd + static_cast<double>(theta - alpha)) / (gamma * static_cast<double>(theta));
    b.branch("h >= 2 ell + eps").detail("theta", static_cast<double>(theta));
    b.require("theta >= 1", theta >= 1).require("r + theta - alpha > 0", rd + static_cast<double>(theta - alpha) > 0);
    return b.value(base > 0 ? std::pow(base, root) : 0.0).done();
  }
  b.branch("h < 2 ell + eps");
  return b.value(std::pow(rd / (gamma * static_cast<double>(alpha - 1)), root)).done();
}

BoundReport field_size_sufficient(long long h, long long ell, long long eps, long long alpha, std::uint64_t r,
                                  long long t, const BoundOptions& opts) {
  ReportBuilder b("field_sufficient");
  basic_network_assumptions(b, h, ell, eps, alpha);
  b.require("t >= 1", t >= 1).require("r >= 1", r >= 1);
  if (ell < 1 || alpha < 2) return b.value(std::numeric_limits<double>::quiet_NaN()).done();

  const double rd = static_cast<double>(r);
  const double td = static_cast<double>(t);
  if (h >= 2 * ell + eps) {
    const double gamma = gamma_constant(opts);
    const double beta = beta_constant(alpha, gamma);
    const long long f = lll_exponent(h, ell, eps, alpha, t);
    b.branch("h >= 2 ell + eps").detail("f", static_cast<double>(f)).detail("beta", beta).detail("gamma", gamma);
    b.require("f(t) > 0", f > 0);
    return b.value(std::pow(rd / beta, static_cast<double>(alpha - 1) * td / static_cast<double>(f))).done();
  }
  const long long g = mrd_exponent(h, ell, eps, t);
  b.branch("h < 2 ell + eps").detail("g", static_cast<double>(g));
  b.require("g(t) > 0", g > 0);
  return b.value(std::pow(rd / static_cast<double>(alpha - 1), td / static_cast<double>(g))).done();
}

BoundReport gap_lower_bound(long long h, long long ell, long long eps, long long alpha, std::uint64_t r,
                            const BoundOptions& opts) {
  ReportBuilder b("gap");
  basic_network_assumptions(b, h, ell, eps, alpha);
  b.require("r >= 1", r >= 1);
  if (ell < 1 || alpha < 2 || r < 1) return b.value(std::numeric_limits<double>::quiet_NaN()).done();

  const double gamma = gamma_constant(opts);
  const double rd = static_cast<double>(r);
  const double scale = 1.0 / static_cast<double>(ell * (eps + 1));
  b.detail("gamma", gamma);

  if (h >= 2 * ell + eps) {
    const double beta = beta_constant(alpha, gamma);
    const double target = static_cast<double>(alpha - 1) * std::log2(rd / beta);
    long long t = 1;
    while (t <= kMaxBlocklengthSearch && static_cast<double>(lll_exponent(h, ell, eps, alpha, t)) < target) ++t;
    const bool found = t <= kMaxBlocklengthSearch;
    const long long theta = theta_constant(h, ell, eps, alpha);
    const double arg = (rd + static_cast<double>(theta - alpha)) / (gamma * static_cast<double>(theta));
    b.branch("h >= 2 ell + eps").detail("beta", beta).detail("theta", static_cast<double>(theta));
    b.require("theta >= 1", theta >= 1).require("r + theta - alpha > 0", arg > 0);
    b.require("t_delta found below search limit", found);
    b.detail("t_delta", found ? static_cast<double>(t) : std::numeric_limits<double>::infinity());
    return b.value(scale * std::log2(arg) - static_cast<double>(t)).done();
  }

  const BigInt big_r(r);
  long long t = 1;
  while (t <= kMaxBlocklengthSearch) {
    const long long g = mrd_exponent(h, ell, eps, t);
    if (g >= 64 || (g >= 0 && BigInt(alpha - 1) * ipow(2, static_cast<unsigned>(g)) >= big_r)) break;
    ++t;
  }
  const bool found = t <= kMaxBlocklengthSearch;
  b.branch("h < 2 ell + eps").require("t_star found below search limit", found);
  b.detail("t_star", found ? static_cast<double>(t) : std::numeric_limits<double>::infinity());
  return b.value(scale * std::log2(rd / (gamma * static_cast<double>(alpha - 1))) - static_cast<double>(t)).done();
}

BoundReport gap_lower_bound_closed_form(long long h, long long ell, long long eps, long long alpha, std::uint64_t r,
                                        const BoundOptions& opts) {
  ReportBuilder b("gap_closed_form");
  basic_network_assumptions(b, h, ell, eps, alpha);
  b.require("eps >= 1", eps >= 1).require("r >= 1", r >= 1);
  if (ell < 1 || alpha < 2 || r < 1) return b.value(std::numeric_limits<double>::quiet_NaN()).done();

  const double rd = static_cast<double>(r);
  const double le = static_cast<double>(ell * (eps + 1));
  if (h <= 2 * ell + eps) {
    const double lg = std::log2(rd / static_cast<double>(alpha - 1));
    b.branch("h <= 2 ell + eps").require("r >= alpha - 1", lg >= 0);
    const double root = eps >= 1 ? std::sqrt(lg / static_cast<double>(ell * eps)) : std::numeric_limits<double>::infinity();
    return b.value((lg - 2.0) / le - root).done();
  }

  const double gamma = gamma_constant(opts);
  const double beta = beta_constant(alpha, gamma);
  const long long theta = theta_constant(h, ell, eps, alpha);
  const long long slack = alpha * ell + eps - h;
  const double arg = (rd + static_cast<double>(theta - alpha)) / (gamma * static_cast<double>(theta));
  const double inner = static_cast<double>(alpha - 1) * std::log2(rd / beta);
  b.branch("h > 2 ell + eps").detail("beta", beta).detail("theta", static_cast<double>(theta)).detail("gamma", gamma);
  b.require("alpha ell + eps > h", slack > 0).require("theta >= 1", theta >= 1);
  b.require("r + theta - alpha > 0", arg > 0);
  if (slack <= 0 || eps < 1) return b.value(-std::numeric_limits<double>::infinity()).done();
  return b.value(std::log2(arg) / le - std::sqrt(inner / static_cast<double>(slack * eps))).done();
}

}  // namespace covnet
