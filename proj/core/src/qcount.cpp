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

#include "covnet/qcount.hpp"

#include <stdexcept>

namespace covnet {

BigInt ipow(std::uint64_t base, unsigned exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt gaussian_binomial(long long n, long long k, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("covnet: gaussian_binomial needs q >= 2");
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= ipow(q, static_cast<unsigned>(n - i)) - 1;
    den *= ipow(q, static_cast<unsigned>(k - i)) - 1;
  }
  return num / den;
}

BigInt count_rank_matrices(long long m, long long n, long long s, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("covnet: count_rank_matrices needs q >= 2");
  if (m < 0 || n < 0 || s < 0 || s > std::min(m, n)) return 0;
  BigInt num = 1;
  BigInt den = 1;
  const BigInt qm = ipow(q, static_cast<unsigned>(m));
  const BigInt qn = ipow(q, static_cast<unsigned>(n));
  const BigInt qs = ipow(q, static_cast<unsigned>(s));
  for (long long j = 0; j < s; ++j) {
    const BigInt qj = ipow(q, static_cast<unsigned>(j));
    num *= (qm - qj) * (qn - qj);
    den *= qs - qj;
  }
  return num / den;
}

double to_double(const BigInt& v) { return v.convert_to<double>(); }

double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace covnet
