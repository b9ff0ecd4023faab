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
#include <vector>

#include "covnet/subspace.hpp"

namespace covnet {

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;
inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

/// All k-dimensional subspaces of GF(q)^n in canonical order (see
/// `Subspace::operator<=>`). Throws std::length_error when the Grassmannian
/// has more than `cap` elements.
std::vector<Subspace> enumerate_grassmannian(std::size_t n, std::size_t k, const Field& field,
                                             std::uint64_t cap = kDefaultEnumerationCap);

/// Multiset of subspaces of GF(q)^n, each of dimension at most k, carrying
/// the covering parameters: every alpha codewords (as a sub-multiset, so
/// repeated codewords count as distinct picks) should span at least
/// delta + k dimensions.
class CoveringCode {
 public:
  CoveringCode(Field field, std::size_t n, std::size_t k, long long delta, std::size_t alpha,
               std::vector<Subspace> codewords = {});

  const Field& field() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  long long delta() const { return delta_; }
  std::size_t alpha() const { return alpha_; }
  /// delta + k, clamped at zero.
  std::size_t required_dim() const;

  std::size_t size() const { return codewords_.size(); }
  const std::vector<Subspace>& codewords() const { return codewords_; }
  const Subspace& operator[](std::size_t i) const { return codewords_[i]; }

  void add(Subspace s);

 private:
  void check(const Subspace& s) const;

  Field field_;
  std::size_t n_;
  std::size_t k_;
  long long delta_;
  std::size_t alpha_;
  std::vector<Subspace> codewords_;
};

struct CoverWitness {
  std::vector<std::size_t> indices;  // codeword positions, increasing
  std::size_t achieved_dim = 0;
};

struct CoverCheck {
  bool covering = false;
  std::optional<CoverWitness> witness;  // set iff !covering
};

/// Checks every alpha-subset of codeword positions. On failure the witness
/// is the lexicographically first subset among those with the smallest span.
/// Throws std::invalid_argument when the code has fewer than alpha codewords.
CoverCheck is_covering_code(const CoveringCode& code, unsigned threads = 1);

struct MaxCodeResult {
  std::size_t size = 0;
  CoveringCode code;
  bool exact = false;  // false when the node limit cut the search short
  std::uint64_t nodes = 0;
};

enum class SearchStatus { kFound, kRefuted, kInconclusive };

struct ExistenceResult {
  SearchStatus status = SearchStatus::kInconclusive;
  std::optional<CoveringCode> code;
  std::uint64_t nodes = 0;
};

/// Exhaustive depth-first search for the largest alpha-(n, k, delta)
/// covering multiset. Codewords are drawn from the Grassmannian in canonical
/// order, each at most alpha - 1 times; the first codeword is fixed to the
/// first Grassmannian element (GL(n, q) acts transitively on G(n, k)).
/// Multisets smaller than alpha satisfy the covering condition vacuously.
///
/// Requires alpha >= 2, delta >= 1 and delta + k <= n.
MaxCodeResult max_covering_code(std::size_t n, std::size_t k, long long delta, std::size_t alpha, const Field& field,
                                std::uint64_t node_limit = kDefaultNodeLimit,
                                std::uint64_t enumeration_cap = kDefaultEnumerationCap);

/// Same search, stopping as soon as a code with `target` codewords exists.
ExistenceResult find_covering_code(std::size_t n, std::size_t k, long long delta, std::size_t alpha,
                                   const Field& field, std::size_t target,
                                   std::uint64_t node_limit = kDefaultNodeLimit,
                                   std::uint64_t enumeration_cap = kDefaultEnumerationCap);

}  // namespace covnet
