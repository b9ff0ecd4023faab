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

#include "covnet/network.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "covnet/combinations.hpp"

namespace covnet {

void NetworkParams::validate() const {
  if (alpha < 2) throw std::invalid_argument("covnet: network needs alpha >= 2");
  if (r < alpha) throw std::invalid_argument("covnet: network needs r >= alpha");
  if (h < 1 || ell < 1) throw std::invalid_argument("covnet: network needs h >= 1 and ell >= 1");
}

std::string_view to_string(Solvability s) {
  switch (s) {
    case Solvability::kTrivial:
      return "trivial";
    case Solvability::kNontrivial:
      return "nontrivial";
    case Solvability::kUnsolvable:
      return "unsolvable";
  }
  return "unknown";
}

Solvability classify(const NetworkParams& params) {
  params.validate();
  if (params.h <= params.ell + params.epsilon) return Solvability::kTrivial;
  if (params.h > params.alpha * params.ell + params.epsilon) return Solvability::kUnsolvable;
  return Solvability::kNontrivial;
}

LinearSolution::LinearSolution(NetworkParams params, Field field, std::size_t t, std::vector<Matrix> coding)
    : params_(params), field_(std::move(field)), t_(t), coding_(std::move(coding)) {
  params_.validate();
  if (t_ < 1) throw std::invalid_argument("covnet: blocklength t must be at least 1");
  if (coding_.size() != params_.r) {
    throw std::invalid_argument("covnet: expected " + std::to_string(params_.r) + " coding matrices, got " +
                                std::to_string(coding_.size()));
  }
  const std::size_t rows = params_.ell * t_;
  const std::size_t cols = params_.h * t_;
  for (std::size_t i = 0; i < coding_.size(); ++i) {
    const auto& a = coding_[i];
    if (!(a.field() == field_)) throw std::invalid_argument("covnet: coding matrix over a different field");
    if (a.rows() != rows || a.cols() != cols) {
      throw std::invalid_argument("covnet: coding matrix " + std::to_string(i) + " is " + std::to_string(a.rows()) +
                                  "x" + std::to_string(a.cols()) + ", expected " + std::to_string(rows) + "x" +
                                  std::to_string(cols));
    }
  }
}

std::size_t LinearSolution::required_rank() const {
  return params_.h > params_.epsilon ? (params_.h - params_.epsilon) * t_ : 0;
}

namespace {

Matrix stack_receiver(const LinearSolution& sol, std::span<const std::size_t> nodes) {
  std::vector<Matrix> blocks;
  blocks.reserve(nodes.size());
  for (auto i : nodes) blocks.push_back(sol.coding()[i]);
  return vstack(blocks);
}

// Standard basis vectors, in index order, that raise the rank of `a`; at most
// `limit` of them. Returned as rows of a `limit` x cols matrix, zero padded.
Matrix greedy_completion(const Matrix& a, std::size_t limit) {
  const Field& f = a.field();
  const std::size_t cols = a.cols();
  Matrix out(f, limit, cols);
  std::size_t used = 0;
  std::size_t current = rank(a);
  for (std::size_t j = 0; j < cols && used < limit && current < cols; ++j) {
    Matrix e(f, 1, cols);
    e(0, j) = 1;
    Matrix trial = vstack({a, out.row_block(0, used), e});
    const std::size_t r = rank(trial);
    if (r > current) {
      out(used, j) = 1;
      ++used;
      current = r;
    }
  }
  return out;
}

Elem uniform_element(std::mt19937_64& rng, Elem q) {
  std::uniform_int_distribution<Elem> dist(0, q - 1);
  return dist(rng);
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform_element(rng, f.size());
  }
  return m;
}

std::mt19937_64 trial_generator(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

void require_solvable(const NetworkParams& params) {
  if (classify(params) == Solvability::kUnsolvable) {
    throw std::invalid_argument("covnet: network is unsolvable (h > alpha * ell + epsilon)");
  }
}

}  // namespace

SolutionCheck verify_solution(const LinearSolution& sol, unsigned threads) {
  const auto& p = sol.params();
  require_solvable(p);
  const std::size_t need = sol.required_rank();
  if (need == 0) return {true, std::nullopt};

  using Witness = std::vector<std::size_t>;
  std::atomic<std::size_t> cutoff{std::numeric_limits<std::size_t>::max()};
  auto task = [&](std::size_t first) {
    std::optional<Witness> found;
    for_each_combination_with_first(p.r, p.alpha, first, [&](std::span<const std::size_t> idx) {
      if (rank(stack_receiver(sol, idx)) < need) {
        found = Witness(idx.begin(), idx.end());
        return false;
      }
      return true;
    });
    if (found) {
      std::size_t cur = cutoff.load();
      while (first < cur && !cutoff.compare_exchange_weak(cur, first)) {
      }
    }
    return found;
  };
  auto results = detail::run_by_first_index<std::optional<Witness>>(p.r - p.alpha + 1, threads, task, &cutoff);
  for (auto& r : results) {
    if (r && *r) return {false, std::move(**r)};
  }
  return {true, std::nullopt};
}

LinearSolution solution_from_code(const CoveringCode& code, const NetworkParams& params, std::size_t t) {
  params.validate();
  if (t < 1) throw std::invalid_argument("covnet: blocklength t must be at least 1");
  const std::size_t n = params.h * t;
  const std::size_t k = params.ell * t;
  const long long delta = (static_cast<long long>(params.h) - static_cast<long long>(params.ell) -
                           static_cast<long long>(params.epsilon)) *
                          static_cast<long long>(t);
  if (code.n() != n || code.k() != k || code.delta() != delta || code.alpha() != params.alpha) {
    throw std::invalid_argument("covnet: code parameters alpha-(" + std::to_string(code.n()) + "," +
                                std::to_string(code.k()) + "," + std::to_string(code.delta()) + ") with alpha " +
                                std::to_string(code.alpha()) + " do not match the network, expected " +
                                std::to_string(params.alpha) + "-(" + std::to_string(n) + "," + std::to_string(k) +
                                "," + std::to_string(delta) + ")");
  }
  if (code.size() != params.r) {
    throw std::invalid_argument("covnet: code has " + std::to_string(code.size()) + " codewords, network has r = " +
                                std::to_string(params.r));
  }
  std::vector<Matrix> coding;
  coding.reserve(code.size());
  for (const auto& s : code.codewords()) coding.push_back(s.basis().padded_to(k));
  return LinearSolution(params, code.field(), t, std::move(coding));
}

CoveringCode code_from_solution(const LinearSolution& sol) {
  const auto& p = sol.params();
  const std::size_t t = sol.t();
  const long long delta =
      (static_cast<long long>(p.h) - static_cast<long long>(p.ell) - static_cast<long long>(p.epsilon)) *
      static_cast<long long>(t);
  CoveringCode code(sol.field(), p.h * t, p.ell * t, delta, p.alpha);
  for (const auto& a : sol.coding()) code.add(Subspace::span(a));
  return code;
}

std::vector<Matrix> derive_direct_link_matrices(const LinearSolution& sol) {
  const auto check = verify_solution(sol);
  if (!check.valid) throw std::invalid_argument("covnet: direct links requested for a solution that does not verify");
  const auto& p = sol.params();
  const std::size_t rows = p.epsilon * sol.t();
  std::vector<Matrix> out;
  for_each_combination(p.r, p.alpha, [&](std::span<const std::size_t> idx) {
    out.push_back(greedy_completion(stack_receiver(sol, idx), rows));
    return true;
  });
  return out;
}

std::vector<ReceiverOutcome> simulate(const LinearSolution& sol, const std::vector<std::vector<Elem>>& messages) {
  const auto& p = sol.params();
  const Field& f = sol.field();
  const std::size_t t = sol.t();
  if (messages.size() != p.h) {
    throw std::invalid_argument("covnet: expected " + std::to_string(p.h) + " messages, got " +
                                std::to_string(messages.size()));
  }
  std::vector<Elem> x;
  x.reserve(p.h * t);
  for (const auto& m : messages) {
    if (m.size() != t) throw std::invalid_argument("covnet: every message must have length t");
    for (auto v : m) {
      if (v >= f.size()) throw std::invalid_argument("covnet: message symbol outside the field");
      x.push_back(v);
    }
  }

  std::vector<ReceiverOutcome> out;
  for_each_combination(p.r, p.alpha, [&](std::span<const std::size_t> idx) {
    const Matrix a = stack_receiver(sol, idx);
    const Matrix full = vstack({a, greedy_completion(a, p.epsilon * t)});
    const auto y = multiply(full, std::span<const Elem>(x));
    ReceiverOutcome rec{{idx.begin(), idx.end()}, std::nullopt};
    if (auto solved = solve_unique(full, y)) {
      std::vector<std::vector<Elem>> decoded(p.h);
      for (std::size_t i = 0; i < p.h; ++i) decoded[i].assign(solved->begin() + i * t, solved->begin() + (i + 1) * t);
      rec.decoded = std::move(decoded);
    }
    out.push_back(std::move(rec));
    return true;
  });
  return out;
}

std::optional<LinearSolution> random_solution_search(const NetworkParams& params, const Field& field, std::size_t t,
                                                     std::uint64_t trials, std::uint64_t seed, unsigned threads,
                                                     std::uint64_t* winning_trial) {
  if (classify(params) != Solvability::kNontrivial) {
    throw std::invalid_argument("covnet: random search needs a nontrivial network");
  }
  if (t < 1) throw std::invalid_argument("covnet: blocklength t must be at least 1");
  const std::size_t rows = params.ell * t;
  const std::size_t cols = params.h * t;

  auto attempt = [&](std::uint64_t trial) -> std::optional<LinearSolution> {
    auto rng = trial_generator(seed, trial);
    std::vector<Matrix> coding;
    coding.reserve(params.r);
    for (std::size_t i = 0; i < params.r; ++i) coding.push_back(random_matrix(field, rows, cols, rng));
    LinearSolution sol(params, field, t, std::move(coding));
    if (verify_solution(sol).valid) return sol;
    return std::nullopt;
  };

  if (threads <= 1) {
    for (std::uint64_t i = 0; i < trials; ++i) {
      if (auto sol = attempt(i)) {
        if (winning_trial) *winning_trial = i;
        return sol;
      }
    }
    return std::nullopt;
  }

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best_trial{std::numeric_limits<std::uint64_t>::max()};
  std::optional<LinearSolution> best;
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= trials || i > best_trial.load()) return;
      if (auto sol = attempt(i)) {
        std::lock_guard lock(mu);
        if (i < best_trial.load()) {
          best_trial.store(i);
          best = std::move(sol);
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  }
  if (best && winning_trial) *winning_trial = best_trial.load();
  return best;
}

double estimate_receiver_failure_probability(const NetworkParams& params, const Field& field, std::size_t t,
                                             std::uint64_t draws, std::uint64_t seed) {
  params.validate();
  if (draws == 0) throw std::invalid_argument("covnet: need at least one draw");
  const std::size_t rows = params.ell * t;
  const std::size_t cols = params.h * t;
  const std::size_t need = params.h > params.epsilon ? (params.h - params.epsilon) * t : 0;
  std::mt19937_64 rng = trial_generator(seed, 0);
  std::uint64_t bad = 0;
  for (std::uint64_t d = 0; d < draws; ++d) {
    const Matrix m = random_matrix(field, rows * params.alpha, cols, rng);
    if (rank(m) < need) ++bad;
  }
  return static_cast<double>(bad) / static_cast<double>(draws);
}

Rational receiver_failure_probability(const NetworkParams& params, std::uint64_t q, std::size_t t) {
  params.validate();
  const long long rows = static_cast<long long>(params.alpha * params.ell * t);
  const long long cols = static_cast<long long>(params.h * t);
  const long long need = params.h > params.epsilon ? static_cast<long long>((params.h - params.epsilon) * t) : 0;
  BigInt bad = 0;
  for (long long i = 0; i < need; ++i) bad += count_rank_matrices(rows, cols, i, q);
  return Rational(bad, ipow(q, static_cast<unsigned>(rows * cols)));
}

namespace {

SearchStatus decide(const NetworkParams& p, unsigned q, std::size_t t, std::uint64_t node_limit,
                    std::uint64_t enumeration_cap) {
  const Field field = Field::of_size(q, std::max<unsigned>(q, kDefaultFieldCap));
  const long long delta =
      (static_cast<long long>(p.h) - static_cast<long long>(p.ell) - static_cast<long long>(p.epsilon)) *
      static_cast<long long>(t);
  try {
    return find_covering_code(p.h * t, p.ell * t, delta, p.alpha, field, p.r, node_limit, enumeration_cap).status;
  } catch (const std::length_error&) {
    return SearchStatus::kInconclusive;
  }
}

FieldSizeResult trivial_result() { return {2, true, true, 1}; }

}  // namespace

FieldSizeResult compute_qs(const NetworkParams& params, std::uint64_t q_cap, std::uint64_t node_limit,
                           std::uint64_t enumeration_cap) {
  const auto cls = classify(params);
  require_solvable(params);
  if (cls == Solvability::kTrivial) return trivial_result();
  const unsigned cap = static_cast<unsigned>(std::min<std::uint64_t>(q_cap, kDefaultFieldCap));
  bool all_conclusive = true;
  for (unsigned q : prime_powers_up_to(cap)) {
    const auto status = decide(params, q, 1, node_limit, enumeration_cap);
    if (status == SearchStatus::kFound) return {q, all_conclusive, false, 1};
    if (status == SearchStatus::kInconclusive) all_conclusive = false;
  }
  return {std::nullopt, false, false, 1};
}

FieldSizeResult compute_qv(const NetworkParams& params, std::uint64_t qt_cap, std::uint64_t node_limit,
                           std::uint64_t enumeration_cap) {
  const auto cls = classify(params);
  require_solvable(params);
  if (cls == Solvability::kTrivial) return trivial_result();

  struct Candidate {
    std::uint64_t size;
    std::size_t t;
    unsigned q;
  };
  std::vector<Candidate> candidates;
  const unsigned q_max = static_cast<unsigned>(std::min<std::uint64_t>(qt_cap, kDefaultFieldCap));
  for (unsigned q : prime_powers_up_to(q_max)) {
    std::uint64_t size = q;
    for (std::size_t t = 1; size <= qt_cap; ++t) {
      candidates.push_back({size, t, q});
      if (size > qt_cap / q) break;
      size *= q;
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    return a.size != b.size ? a.size < b.size : a.t < b.t;
  });

  bool all_conclusive = true;
  for (const auto& c : candidates) {
    const auto status = decide(params, c.q, c.t, node_limit, enumeration_cap);
    if (status == SearchStatus::kFound) return {c.size, all_conclusive, false, c.t};
    if (status == SearchStatus::kInconclusive) all_conclusive = false;
  }
  return {std::nullopt, false, false, 1};
}

GapEstimate estimate_gap(const NetworkParams& params, std::uint64_t cap, std::uint64_t node_limit,
                         std::uint64_t enumeration_cap) {
  GapEstimate est;
  est.cap = cap;
  est.qs = compute_qs(params, cap, node_limit, enumeration_cap);
  est.qv = compute_qv(params, cap, node_limit, enumeration_cap);
  if (est.qs.value && est.qv.value) {
    est.gap = std::log2(static_cast<double>(*est.qs.value)) - std::log2(static_cast<double>(*est.qv.value));
  }
  return est;
}

}  // namespace covnet
