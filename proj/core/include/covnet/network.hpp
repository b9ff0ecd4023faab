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
#include <string_view>
#include <vector>

#include "covnet/covering.hpp"
#include "covnet/matrix.hpp"
#include "covnet/qcount.hpp"

namespace covnet {

/// Generalized combination network: a source with h messages, r middle
/// nodes each fed by ell parallel links, one receiver per alpha-subset of
/// middle nodes (ell links from each), and epsilon direct links from the
/// source to every receiver.
struct NetworkParams {
  std::size_t h = 0;
  std::size_t r = 0;
  std::size_t alpha = 0;
  std::size_t ell = 0;
  std::size_t epsilon = 0;

  /// Throws std::invalid_argument unless alpha >= 2, r >= alpha and h, ell >= 1.
  void validate() const;
  BigInt receiver_count() const { return binomial(static_cast<long long>(r), static_cast<long long>(alpha)); }

  friend bool operator==(const NetworkParams&, const NetworkParams&) = default;
};

enum class Solvability { kTrivial, kNontrivial, kUnsolvable };

std::string_view to_string(Solvability s);

/// Trivial iff h <= ell + epsilon; unsolvable iff h > alpha * ell + epsilon.
Solvability classify(const NetworkParams& params);

/// (q, t)-linear solution: one ell*t x h*t coding matrix per middle node.
class LinearSolution {
 public:
  LinearSolution(NetworkParams params, Field field, std::size_t t, std::vector<Matrix> coding);

  const NetworkParams& params() const { return params_; }
  const Field& field() const { return field_; }
  std::size_t t() const { return t_; }
  const std::vector<Matrix>& coding() const { return coding_; }
  /// Rows every receiver must collect from its middle nodes: (h - epsilon) t.
  std::size_t required_rank() const;

 private:
  NetworkParams params_;
  Field field_;
  std::size_t t_;
  std::vector<Matrix> coding_;
};

struct SolutionCheck {
  bool valid = false;
  std::optional<std::vector<std::size_t>> failing_receiver;  // middle-node indices, 0-based
};

/// Every receiver's stacked alpha*ell*t x h*t matrix must have rank at least
/// (h - epsilon) t. Reports the lexicographically first failing receiver.
/// Throws std::invalid_argument for unsolvable parameters.
SolutionCheck verify_solution(const LinearSolution& sol, unsigned threads = 1);

/// Coding matrices from a covering code: codeword bases padded with zero rows
/// to ell*t rows. The code must be an alpha-(h t, ell t, (h - ell - epsilon) t)
/// code with exactly r codewords.
LinearSolution solution_from_code(const CoveringCode& code, const NetworkParams& params, std::size_t t);

/// Row spaces of the coding matrices as an alpha-(h t, ell t, (h - ell - epsilon) t) code.
CoveringCode code_from_solution(const LinearSolution& sol);

/// Direct-link matrices B_1..B_N, one per receiver in lexicographic order,
/// each epsilon*t x h*t. Rows complete the receiver's middle-node rows to full
/// rank with standard basis vectors taken in index order; unused rows are
/// zero. Throws std::invalid_argument if the solution does not verify.
std::vector<Matrix> derive_direct_link_matrices(const LinearSolution& sol);

struct ReceiverOutcome {
  std::vector<std::size_t> middle_nodes;
  /// Recovered messages (h vectors of length t); nullopt when the
  /// receiver's linear system is underdetermined.
  std::optional<std::vector<std::vector<Elem>>> decoded;
};

/// Sends `messages` (h vectors of length t) through the network: every
/// receiver collects y = [A_i1; ...; A_ialpha; B_i] x and solves for x. Direct
/// links are completed greedily per receiver, so an invalid solution shows
/// up as receivers with `decoded == nullopt`.
std::vector<ReceiverOutcome> simulate(const LinearSolution& sol, const std::vector<std::vector<Elem>>& messages);

/// Draws all r coding matrices uniformly at random for each trial and returns
/// the first draw that verifies. Trial i uses its own generator seeded from
/// (seed, i), so the result does not depend on `threads`. Requires a
/// nontrivial network. On success `winning_trial`, if given, receives i.
std::optional<LinearSolution> random_solution_search(const NetworkParams& params, const Field& field, std::size_t t,
                                                     std::uint64_t trials, std::uint64_t seed, unsigned threads = 1,
                                                     std::uint64_t* winning_trial = nullptr);

/// Monte-Carlo estimate of the probability that alpha independent uniform
/// ell*t x h*t matrices stack to rank below (h - epsilon) t.
double estimate_receiver_failure_probability(const NetworkParams& params, const Field& field, std::size_t t,
                                             std::uint64_t draws, std::uint64_t seed);

/// Exact value of the same probability:
///   sum_{i < (h-eps)t} M(alpha ell t, h t, i) / q^(alpha ell h t^2).
Rational receiver_failure_probability(const NetworkParams& params, std::uint64_t q, std::size_t t);

struct FieldSizeResult {
  std::optional<std::uint64_t> value;
  bool exact = false;
  bool trivial = false;  // network is trivially solvable; value fixed at 2
  std::size_t t = 1;     // blocklength achieving `value`
};

/// Smallest field size q <= q_cap admitting a scalar solution, found by
/// exhaustive covering-code search over prime powers in increasing order.
/// `exact` is false if any smaller q could not be decided within the node
/// limit, or if no q up to the cap works.
FieldSizeResult compute_qs(const NetworkParams& params, std::uint64_t q_cap,
                           std::uint64_t node_limit = kDefaultNodeLimit,
                           std::uint64_t enumeration_cap = kDefaultEnumerationCap);

/// Smallest q^t <= qt_cap admitting a (q, t)-linear solution; candidates in
/// increasing q^t, ties broken by smaller t.
FieldSizeResult compute_qv(const NetworkParams& params, std::uint64_t qt_cap,
                           std::uint64_t node_limit = kDefaultNodeLimit,
                           std::uint64_t enumeration_cap = kDefaultEnumerationCap);

struct GapEstimate {
  FieldSizeResult qs;
  FieldSizeResult qv;
  std::uint64_t cap = 0;
  /// log2(qs) - log2(qv) when both values were found.
  std::optional<double> gap;
  bool exact() const { return qs.exact && qv.exact; }
};

GapEstimate estimate_gap(const NetworkParams& params, std::uint64_t cap, std::uint64_t node_limit = kDefaultNodeLimit,
                         std::uint64_t enumeration_cap = kDefaultEnumerationCap);

}  // namespace covnet
