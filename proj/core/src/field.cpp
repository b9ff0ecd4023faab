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

#include "covnet/field.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace covnet {

namespace detail {

struct FieldImpl {
  unsigned p = 0;
  unsigned q = 0;
  unsigned base_q = 0;
  unsigned degree = 0;
  std::vector<Elem> modulus;
  std::shared_ptr<const FieldImpl> base;  // null for prime fields

  bool tabulated = false;
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<Elem> neg_table;
  std::vector<Elem> inv_table;
};

}  // namespace detail

namespace {

using detail::FieldImpl;

Elem raw_add(const FieldImpl& f, Elem a, Elem b);
Elem raw_neg(const FieldImpl& f, Elem a);
Elem raw_mul(const FieldImpl& f, Elem a, Elem b);

std::vector<Elem> to_digits(Elem a, unsigned base, unsigned count) {
  std::vector<Elem> d(count, 0);
  for (unsigned i = 0; i < count; ++i) {
    d[i] = a % base;
    a /= base;
  }
  return d;
}

Elem from_digits_impl(std::span<const Elem> d, unsigned base) {
  Elem v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * base + d[i];
  return v;
}

Elem slow_add(const FieldImpl& f, Elem a, Elem b) {
  if (!f.base) return (a + b) % f.p;
  Elem v = 0;
  Elem scale = 1;
  for (unsigned i = 0; i < f.degree; ++i) {
    v += raw_add(*f.base, a % f.base_q, b % f.base_q) * scale;
    a /= f.base_q;
    b /= f.base_q;
    scale *= f.base_q;
  }
  return v;
}

Elem slow_neg(const FieldImpl& f, Elem a) {
  if (!f.base) return a == 0 ? 0 : f.p - a;
  Elem v = 0;
  Elem scale = 1;
  for (unsigned i = 0; i < f.degree; ++i) {
    v += raw_neg(*f.base, a % f.base_q) * scale;
    a /= f.base_q;
    scale *= f.base_q;
  }
  return v;
}

// Remainder of `num` modulo the monic polynomial `den`, coefficients over `f`.
void poly_reduce(const FieldImpl& f, std::vector<Elem>& num, std::span<const Elem> den) {
  const std::size_t m = den.size() - 1;
  for (std::size_t i = num.size(); i-- > m;) {
    const Elem c = num[i];
    if (c == 0) continue;
    const Elem nc = raw_neg(f, c);
    for (std::size_t j = 0; j <= m; ++j) {
      num[i - m + j] = raw_add(f, num[i - m + j], raw_mul(f, nc, den[j]));
    }
  }
  num.resize(std::min(num.size(), m));
}

Elem slow_mul(const FieldImpl& f, Elem a, Elem b) {
  if (!f.base) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % f.p);
  const auto da = to_digits(a, f.base_q, f.degree);
  const auto db = to_digits(b, f.base_q, f.degree);
  std::vector<Elem> prod(2 * f.degree - 1, 0);
  for (unsigned i = 0; i < f.degree; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < f.degree; ++j) {
      prod[i + j] = raw_add(*f.base, prod[i + j], raw_mul(*f.base, da[i], db[j]));
    }
  }
  poly_reduce(*f.base, prod, f.modulus);
  prod.resize(f.degree, 0);
  return from_digits_impl(prod, f.base_q);
}

Elem slow_pow(const FieldImpl& f, Elem a, std::uint64_t e) {
  Elem result = 1;
  while (e > 0) {
    if (e & 1u) result = raw_mul(f, result, a);
    a = raw_mul(f, a, a);
    e >>= 1;
  }
  return result;
}

Elem raw_add(const FieldImpl& f, Elem a, Elem b) {
  if (f.tabulated) return f.add_table[a * f.q + b];
  return slow_add(f, a, b);
}

Elem raw_neg(const FieldImpl& f, Elem a) {
  if (f.tabulated) return f.neg_table[a];
  return slow_neg(f, a);
}

Elem raw_mul(const FieldImpl& f, Elem a, Elem b) {
  if (f.tabulated) return f.mul_table[a * f.q + b];
  return slow_mul(f, a, b);
}

Elem raw_inv(const FieldImpl& f, Elem a) {
  if (a == 0) throw std::domain_error("covnet: inverse of zero");
  if (f.tabulated) return f.inv_table[a];
  return slow_pow(f, a, f.q - 2);
}

bool is_irreducible(const FieldImpl& base, std::span<const Elem> poly) {
  const unsigned m = static_cast<unsigned>(poly.size() - 1);
  for (unsigned d = 1; d <= m / 2; ++d) {
    Elem count = 1;
    for (unsigned i = 0; i < d; ++i) count *= base.q;
    for (Elem v = 0; v < count; ++v) {
      auto divisor = to_digits(v, base.q, d);
      divisor.push_back(1);
      std::vector<Elem> rem(poly.begin(), poly.end());
      poly_reduce(base, rem, divisor);
      bool zero = true;
      for (Elem c : rem) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

void build_tables(FieldImpl& f) {
  const unsigned q = f.q;
  f.add_table.resize(static_cast<std::size_t>(q) * q);
  f.mul_table.resize(static_cast<std::size_t>(q) * q);
  f.neg_table.resize(q);
  f.inv_table.assign(q, 0);
  for (Elem a = 0; a < q; ++a) {
    f.neg_table[a] = slow_neg(f, a);
    for (Elem b = 0; b < q; ++b) {
      f.add_table[a * q + b] = static_cast<std::uint16_t>(slow_add(f, a, b));
      f.mul_table[a * q + b] = static_cast<std::uint16_t>(slow_mul(f, a, b));
    }
  }
  for (Elem a = 1; a < q; ++a) {
    for (Elem b = 1; b < q; ++b) {
      if (f.mul_table[a * q + b] == 1) {
        f.inv_table[a] = b;
        break;
      }
    }
  }
  f.tabulated = true;
}

std::shared_ptr<const FieldImpl> make_prime(unsigned p, unsigned cap) {
  if (!is_prime(p)) throw std::invalid_argument("covnet: field characteristic " + std::to_string(p) + " is not prime");
  if (p > cap) throw std::invalid_argument("covnet: field size " + std::to_string(p) + " exceeds cap " + std::to_string(cap));
  auto f = std::make_shared<FieldImpl>();
  f->p = p;
  f->q = p;
  f->base_q = p;
  f->degree = 1;
  f->modulus = {0, 1};
  if (p <= kTableFieldLimit) build_tables(*f);
  return f;
}

std::shared_ptr<const FieldImpl> make_extension(std::shared_ptr<const FieldImpl> base, unsigned degree, unsigned cap) {
  if (degree == 0) throw std::invalid_argument("covnet: extension degree must be at least 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < degree; ++i) {
    q *= base->q;
    if (q > cap) {
      throw std::invalid_argument("covnet: field size " + std::to_string(base->q) + "^" + std::to_string(degree) +
                                  " exceeds cap " + std::to_string(cap));
    }
  }
  if (degree == 1) return base;

  auto f = std::make_shared<FieldImpl>();
  f->p = base->p;
  f->q = static_cast<unsigned>(q);
  f->base_q = base->q;
  f->degree = degree;
  f->base = base;

  // Candidates in increasing order of their low coefficients read as a
  // base-q integer; the first irreducible one wins.
  const Elem candidates = static_cast<Elem>(q);
  for (Elem v = 0; v < candidates; ++v) {
    auto poly = to_digits(v, base->q, degree);
    poly.push_back(1);
    if (is_irreducible(*base, poly)) {
      f->modulus = std::move(poly);
      break;
    }
  }
  if (f->modulus.empty()) throw std::logic_error("covnet: no irreducible polynomial found");
  if (f->q <= kTableFieldLimit) build_tables(*f);
  return f;
}

bool same_field(const FieldImpl* a, const FieldImpl* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->q != b->q || a->base_q != b->base_q || a->degree != b->degree || a->modulus != b->modulus) return false;
  return same_field(a->base.get(), b->base.get());
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<unsigned, unsigned> prime_power_decompose(unsigned q) {
  if (q < 2) return {0, 0};
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return {0, 0};
  return {p, m};
}

bool is_prime_power(unsigned q) { return prime_power_decompose(q).first != 0; }

std::vector<unsigned> prime_powers_up_to(unsigned cap) {
  std::vector<unsigned> out;
  for (unsigned q = 2; q <= cap; ++q) {
    if (is_prime_power(q)) out.push_back(q);
  }
  return out;
}

Field Field::create(unsigned p, unsigned m, unsigned cap) {
  if (m == 0) throw std::invalid_argument("covnet: extension degree must be at least 1");
  auto prime = make_prime(p, cap);
  return Field(make_extension(prime, m, cap));
}

Field Field::of_size(unsigned q, unsigned cap) {
  const auto [p, m] = prime_power_decompose(q);
  if (p == 0) throw std::invalid_argument("covnet: " + std::to_string(q) + " is not a prime power");
  return create(p, m, cap);
}

Field Field::parse(std::string_view descriptor, unsigned cap) {
  auto parse_uint = [&](std::string_view s) {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("covnet: malformed field descriptor '" + std::string(descriptor) + "'");
    }
    return v;
  };
  const auto caret = descriptor.find('^');
  if (caret == std::string_view::npos) return of_size(parse_uint(descriptor), cap);
  return create(parse_uint(descriptor.substr(0, caret)), parse_uint(descriptor.substr(caret + 1)), cap);
}

Field Field::extension(const Field& base, unsigned degree, unsigned cap) {
  return Field(make_extension(base.impl_, degree, cap));
}

unsigned Field::characteristic() const { return impl_->p; }
unsigned Field::size() const { return impl_->q; }
unsigned Field::base_size() const { return impl_->base_q; }
unsigned Field::degree() const { return impl_->degree; }
Field Field::base() const { return impl_->base ? Field(impl_->base) : *this; }
bool Field::is_prime_field() const { return !impl_->base; }
std::span<const Elem> Field::modulus() const { return impl_->modulus; }

std::string Field::modulus_string() const {
  std::string out;
  const auto& mod = impl_->modulus;
  for (std::size_t i = mod.size(); i-- > 0;) {
    if (mod[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool show_coef = mod[i] != 1 || i == 0;
    if (show_coef) {
      out += impl_->base_q == impl_->p ? std::to_string(mod[i]) : "[" + std::to_string(mod[i]) + "]";
    }
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string Field::descriptor() const { return std::to_string(impl_->base_q) + "^" + std::to_string(impl_->degree); }

Elem Field::add(Elem a, Elem b) const { return raw_add(*impl_, a, b); }
Elem Field::neg(Elem a) const { return raw_neg(*impl_, a); }
Elem Field::sub(Elem a, Elem b) const { return raw_add(*impl_, a, raw_neg(*impl_, b)); }
Elem Field::mul(Elem a, Elem b) const { return raw_mul(*impl_, a, b); }
Elem Field::inv(Elem a) const { return raw_inv(*impl_, a); }
Elem Field::div(Elem a, Elem b) const { return raw_mul(*impl_, a, raw_inv(*impl_, b)); }

Elem Field::pow(Elem a, long long e) const {
  if (e < 0) {
    a = raw_inv(*impl_, a);
    e = -e;
  }
  return slow_pow(*impl_, a, static_cast<std::uint64_t>(e));
}

std::vector<Elem> Field::digits(Elem a) const { return to_digits(a, impl_->base_q, impl_->degree); }

Elem Field::from_digits(std::span<const Elem> d) const {
  if (d.size() > impl_->degree) throw std::invalid_argument("covnet: too many digits for field element");
  for (Elem c : d) {
    if (c >= impl_->base_q) throw std::invalid_argument("covnet: digit outside base field");
  }
  return from_digits_impl(d, impl_->base_q);
}

FieldElement Field::element(Elem value) const {
  if (value >= impl_->q) {
    throw std::out_of_range("covnet: element " + std::to_string(value) + " outside GF(" + std::to_string(impl_->q) + ")");
  }
  return {value, impl_->q, impl_->base_q};
}

void Field::check_operand(FieldElement a) const {
  if (a.field_size != impl_->q || a.base_size != impl_->base_q) {
    throw std::invalid_argument("covnet: operand belongs to GF(" + std::to_string(a.field_size) + "), expected GF(" +
                                std::to_string(impl_->q) + ")");
  }
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  check_operand(a);
  check_operand(b);
  return element(add(a.value, b.value));
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  check_operand(a);
  check_operand(b);
  return element(sub(a.value, b.value));
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  check_operand(a);
  check_operand(b);
  return element(mul(a.value, b.value));
}

FieldElement Field::inv(FieldElement a) const {
  check_operand(a);
  return element(inv(a.value));
}

FieldElement Field::pow(FieldElement a, long long e) const {
  check_operand(a);
  return element(pow(a.value, e));
}

bool operator==(const Field& a, const Field& b) { return same_field(a.impl_.get(), b.impl_.get()); }

}  // namespace covnet
