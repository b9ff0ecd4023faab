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

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace covnet {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(std::uint64_t base, unsigned exponent);

/// Ordinary binomial coefficient; zero when k < 0 or k > n (so C(0, k) = 0
/// for k >= 1).
BigInt binomial(long long n, long long k);

/// Number of k-dimensional subspaces of GF(q)^n,
///   prod_{i<k} (q^(n-i) - 1) / (q^(k-i) - 1).
/// Returns 0 for k < 0 or k > n.
BigInt gaussian_binomial(long long n, long long k, std::uint64_t q);

/// Number of m x n matrices over GF(q) of rank s,
///   prod_{j<s} (q^m - q^j)(q^n - q^j) / (q^s - q^j).
/// Returns 0 when s is outside [0, min(m, n)].
BigInt count_rank_matrices(long long m, long long n, long long s, std::uint64_t q);

/// Lossy conversion for reporting.
double to_double(const BigInt& v);
double to_double(const Rational& v);

}  // namespace covnet
