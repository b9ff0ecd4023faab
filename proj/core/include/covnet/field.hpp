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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace covnet {

/// Dense index of a field element: the residue polynomial's coefficients
/// written as base-b digits, b being the size of the field the modulus is
/// defined over (the constant term is the least significant digit).
using Elem = std::uint32_t;

inline constexpr unsigned kDefaultFieldCap = 1024;

/// Elements up to this size get full addition/multiplication tables.
inline constexpr unsigned kTableFieldLimit = 256;

namespace detail {
struct FieldImpl;
}

class Field;

/// A field element tagged with the field it came from. The checked overloads
/// of `Field` arithmetic reject operands from a different field; matrix code
/// works on raw `Elem` values instead.
struct FieldElement {
  Elem value = 0;
  unsigned field_size = 0;
  unsigned base_size = 0;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Finite field GF(b^m) represented as GF(b)[x] / (f), with f the
/// lexicographically smallest monic irreducible polynomial of degree m.
///
/// `Field` is a cheap, immutable handle; copies share the same tables and
/// can be used from several threads at once.
class Field {
 public:
  /// GF(p^m) over the prime field GF(p).
  static Field create(unsigned p, unsigned m, unsigned cap = kDefaultFieldCap);

  /// GF(q) for a prime power q, built over its prime subfield.
  static Field of_size(unsigned q, unsigned cap = kDefaultFieldCap);

  /// Parses "p^m" (e.g. "2^2") or a bare prime power ("4").
  static Field parse(std::string_view descriptor, unsigned cap = kDefaultFieldCap);

  /// GF(q^degree) built directly over `base` = GF(q); digits of an element
  /// are its coordinates in the polynomial basis {1, x, ..., x^(degree-1)}.
  static Field extension(const Field& base, unsigned degree, unsigned cap = kDefaultFieldCap);

  unsigned characteristic() const;
  unsigned size() const;
  /// Size of the field the modulus is written over (p for `create`).
  unsigned base_size() const;
  /// Degree of the modulus over the base field.
  unsigned degree() const;
  /// The base field; for prime fields this is the field itself.
  Field base() const;
  bool is_prime_field() const;

  /// Monic modulus coefficients, constant term first, `degree() + 1` entries.
  std::span<const Elem> modulus() const;
  /// Modulus as a readable polynomial, e.g. "x^2 + x + 1".
  std::string modulus_string() const;
  /// "p^m" for fields built with `create`, "q^m/q" style for extensions.
  std::string descriptor() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool contains(Elem a) const { return a < size(); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws std::domain_error for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  /// Negative exponents invert first.
  Elem pow(Elem a, long long e) const;

  /// Base-field digits of `a`, least significant first; always degree() long.
  std::vector<Elem> digits(Elem a) const;
  Elem from_digits(std::span<const Elem> digits) const;

  /// Element of the embedded base field with index `b`.
  Elem embed_base(Elem b) const { return b; }

  FieldElement element(Elem value) const;
  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, long long e) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  void check_operand(FieldElement a) const;

  std::shared_ptr<const detail::FieldImpl> impl_;
};

bool is_prime(unsigned n);

/// If `q` is a prime power p^m returns {p, m}, otherwise {0, 0}.
std::pair<unsigned, unsigned> prime_power_decompose(unsigned q);

bool is_prime_power(unsigned q);

/// Prime powers in [2, cap], ascending.
std::vector<unsigned> prime_powers_up_to(unsigned cap);

}  // namespace covnet
