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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covnet/qcount.hpp"

namespace covnet {

/// Upper constant of the q-binomial sandwich q^{k(n-k)} <= [n k]_q < gamma q^{k(n-k)}.
inline constexpr double kGamma = 3.48;

/// Maximum blocklength tried when searching for the smallest admissible t.
inline constexpr long long kMaxBlocklengthSearch = 1'000'000;

enum class GammaMode {
  kFixed,  // kGamma
  kExact,  // prod_{i>=1} (1 - q^{-i})^{-1}, with q = 2 when no field size is in play
};

struct BoundOptions {
  GammaMode gamma = GammaMode::kFixed;
  /// Adds the "+1" that the LLL sufficient condition carries before simplification.
  bool lll_plus_one = false;
};

struct Assumption {
  std::string condition;
  bool holds = false;
};

struct BoundReport {
  std::string name;
  double value = 0.0;
  std::optional<Rational> exact;  // set for integer or rational valued bounds
  bool valid = false;             // all assumptions hold
  std::vector<Assumption> assumptions;
  std::vector<std::pair<std::string, double>> details;
  std::string branch;  // which case of a piecewise formula was used

  std::optional<double> detail(const std::string& key) const;
};

double gamma_constant(const BoundOptions& opts, std::optional<std::uint64_t> q = std::nullopt);
/// ((alpha-1)! / (2 e gamma alpha))^{1/(alpha-1)}.
double beta_constant(long long alpha, double gamma);
/// alpha - floor((h-eps)/ell) + 1.
long long theta_constant(long long h, long long ell, long long eps, long long alpha);
/// (alpha ell + eps - h) eps t^2 + (alpha ell + 2 eps - h) t + 1.
long long lll_exponent(long long h, long long ell, long long eps, long long alpha, long long t);
/// max{ell t, (h-ell) t} * (min{ell t, (h-ell) t} - (h-ell-eps) t + 1).
long long mrd_exponent(long long h, long long ell, long long eps, long long t);

// Upper bounds on r for a (q,t)-linear solution.
BoundReport covering_upper_bound_exact(long long h, long long ell, long long eps, long long alpha, std::uint64_t q,
                                       long long t, const BoundOptions& opts = {});
BoundReport covering_upper_bound_relaxed(long long h, long long ell, long long eps, long long alpha, std::uint64_t q,
                                         long long t, const BoundOptions& opts = {});
BoundReport pairwise_upper_bound(long long h, long long ell, long long eps, std::uint64_t q, long long t,
                                 const BoundOptions& opts = {});

// Lower bounds on the largest r admitting a (q,t)-linear solution.
BoundReport lll_lower_bound(long long h, long long ell, long long eps, long long alpha, std::uint64_t q, long long t,
                            const BoundOptions& opts = {});
BoundReport mrd_lower_bound(long long h, long long ell, long long eps, long long alpha, std::uint64_t q, long long t,
                            const BoundOptions& opts = {});

/// Upper bound on the probability that one receiver's stacked matrix is rank deficient.
BoundReport lll_event_probability_bound(long long h, long long ell, long long eps, long long alpha, std::uint64_t q,
                                        long long t, const BoundOptions& opts = {});

struct DependencyDegree {
  BigInt bound;  // alpha * C(r-1, alpha-1)
  BigInt exact;  // C(r, alpha) - C(r-alpha, alpha)
};
DependencyDegree lll_dependency_degree(long long r, long long alpha);
BoundReport lll_dependency_report(long long r, long long alpha);

// Conditions on q^t.
BoundReport field_size_necessary(long long h, long long ell, long long eps, long long alpha, std::uint64_t r,
                                 long long t, const BoundOptions& opts = {});
BoundReport field_size_sufficient(long long h, long long ell, long long eps, long long alpha, std::uint64_t r,
                                  long long t, const BoundOptions& opts = {});

// Lower bounds on log2(q_s) - log2(q_v).
BoundReport gap_lower_bound(long long h, long long ell, long long eps, long long alpha, std::uint64_t r,
                            const BoundOptions& opts = {});
BoundReport gap_lower_bound_closed_form(long long h, long long ell, long long eps, long long alpha, std::uint64_t r,
                                        const BoundOptions& opts = {});

}  // namespace covnet
