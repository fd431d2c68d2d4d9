/* Copyright 2026 The wittc Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "wittc/finite_field.hpp"

#include <sstream>

namespace wittc {

namespace {

using Poly = std::vector<std::uint32_t>;

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t n = p - 2;
  while (n > 0) {
    if (n & 1) result = result * base % p;
    base = base * base % p;
    n >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo g over F_p; g must be nonzero.
Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = mod_inverse(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = c * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

Poly decode(std::uint64_t index, std::uint32_t p, std::uint32_t len) {
  Poly out(len, 0);
  for (std::uint32_t i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return out;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::string to_string(SquareClass c) {
  return c == SquareClass::One ? "1" : "s";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p) {
  if (monic.size() < 2 || monic.back() != 1) {
    throw WittError("is_irreducible: expected a monic polynomial of degree >= 1");
  }
  const std::uint32_t deg = static_cast<std::uint32_t>(monic.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly divisor = decode(idx, p, d);
      divisor.push_back(1);
      if (poly_mod(monic, divisor, p).empty()) return false;
    }
  }
  return true;
}

FiniteField FiniteField::make(std::uint32_t p, std::uint32_t e,
                              std::uint64_t bound) {
  if (p % 2 == 0) {
    throw WittError("q = " + std::to_string(p) + (e > 1 ? "^" + std::to_string(e) : "") +
                    " is even; only odd characteristic (nondyadic) fields are supported");
  }
  if (!is_prime(p)) {
    throw WittError("characteristic " + std::to_string(p) + " is not prime");
  }
  if (e < 1) throw WittError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > bound) {
      throw WittError("field order " + std::to_string(p) + "^" +
                      std::to_string(e) + " exceeds bound " +
                      std::to_string(bound));
    }
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = static_cast<std::uint32_t>(q);
  if (e == 1) {
    impl->modulus = {0, 1};
  } else {
    const std::uint64_t count = ipow(p, e);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly candidate = decode(idx, p, e);
      candidate.push_back(1);
      if (is_irreducible(candidate, p)) {
        impl->modulus = std::move(candidate);
        break;
      }
    }
  }

  FiniteField field(impl);
  for (std::uint32_t v = 1; v < impl->q; ++v) {
    if (field.pow_raw(v, (q - 1) / 2) != 1) {
      impl->nonsquare = v;
      break;
    }
  }
  return field;
}

FiniteField FiniteField::parse(const std::string& text, std::uint64_t bound) {
  const auto caret = text.find('^');
  try {
    std::size_t used = 0;
    const unsigned long p = std::stoul(text.substr(0, caret), &used);
    if (used != (caret == std::string::npos ? text.size() : caret)) {
      throw std::invalid_argument(text);
    }
    unsigned long e = 1;
    if (caret != std::string::npos) {
      const std::string tail = text.substr(caret + 1);
      e = std::stoul(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(text);
    } else if (p > 2 && !is_prime(p)) {
      // A bare prime power q = p^e.
      unsigned long d = 3;
      while (d * d <= p && p % d != 0) d += 2;
      if (p % d == 0) {
        unsigned long rest = p;
        unsigned long k = 0;
        while (rest % d == 0) {
          rest /= d;
          ++k;
        }
        if (rest == 1) return make(static_cast<std::uint32_t>(d),
                                   static_cast<std::uint32_t>(k), bound);
      }
    }
    if (p > 0xffffffffUL || e > 64) throw std::out_of_range(text);
    return make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e),
                bound);
  } catch (const std::logic_error&) {
    throw WittError("malformed field size '" + text + "', expected p or p^e");
  }
}

FieldElement FiniteField::zero() const { return FieldElement(*this, 0); }
FieldElement FiniteField::one() const { return FieldElement(*this, 1); }

FieldElement FiniteField::at(std::uint32_t index) const {
  if (index >= impl_->q) {
    throw WittError("element index " + std::to_string(index) +
                    " out of range for " + name());
  }
  return FieldElement(*this, index);
}

FieldElement FiniteField::from_int(std::int64_t v) const {
  const std::int64_t p = impl_->p;
  return FieldElement(*this, static_cast<std::uint32_t>(((v % p) + p) % p));
}

FieldElement FiniteField::from_coeffs(
    const std::vector<std::int64_t>& coeffs) const {
  if (coeffs.size() > impl_->e) {
    throw WittError("too many coefficients for " + name());
  }
  const std::int64_t p = impl_->p;
  std::uint64_t index = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    index = index * impl_->p +
            static_cast<std::uint64_t>(((coeffs[i] % p) + p) % p);
  }
  return FieldElement(*this, static_cast<std::uint32_t>(index));
}

FieldElement FiniteField::canonical_nonsquare() const {
  return FieldElement(*this, impl_->nonsquare);
}

std::vector<FieldElement> FiniteField::units() const {
  std::vector<FieldElement> out;
  out.reserve(impl_->q - 1);
  for (std::uint32_t v = 1; v < impl_->q; ++v) out.emplace_back(*this, v);
  return out;
}

std::string FiniteField::name() const {
  std::string n = "F_" + std::to_string(impl_->p);
  if (impl_->e > 1) n += "^" + std::to_string(impl_->e);
  return n;
}

bool operator==(const FiniteField& a, const FiniteField& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->p == b.impl_->p && a.impl_->e == b.impl_->e &&
         a.impl_->modulus == b.impl_->modulus;
}

std::uint32_t FiniteField::add_raw(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = impl_->p;
  if (impl_->e == 1) return (a + b) % p;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < impl_->e; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t FiniteField::neg_raw(std::uint32_t a) const {
  const std::uint32_t p = impl_->p;
  if (impl_->e == 1) return (p - a) % p;
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  for (std::uint32_t i = 0; i < impl_->e; ++i) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

std::uint32_t FiniteField::mul_raw(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t p = impl_->p;
  if (impl_->e == 1) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  }
  const std::uint32_t e = impl_->e;
  const Poly fa = decode(a, p, e);
  const Poly fb = decode(b, p, e);
  Poly prod(2 * e - 1, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    if (fa[i] == 0) continue;
    for (std::uint32_t j = 0; j < e; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + std::uint64_t{fa[i]} * fb[j]) % p);
    }
  }
  const Poly r = poly_mod(std::move(prod), impl_->modulus, p);
  std::uint32_t out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p + r[i];
  return out;
}

std::uint32_t FiniteField::pow_raw(std::uint32_t a, std::uint64_t n) const {
  std::uint32_t result = 1;
  while (n > 0) {
    if (n & 1) result = mul_raw(result, a);
    a = mul_raw(a, a);
    n >>= 1;
  }
  return result;
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
  return decode(value_, field_.characteristic(), field_.degree());
}

void FieldElement::require_same_field(const FieldElement& o) const {
  if (!(field_ == o.field_)) {
    throw WittError("mixed fields: " + field_.name() + " and " +
                    o.field_.name());
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(o);
  return FieldElement(field_, field_.add_raw(value_, o.value_));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(o);
  return FieldElement(field_, field_.add_raw(value_, field_.neg_raw(o.value_)));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(o);
  return FieldElement(field_, field_.mul_raw(value_, o.value_));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(o);
  return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
  return FieldElement(field_, field_.neg_raw(value_));
}

FieldElement FieldElement::pow(std::uint64_t n) const {
  return FieldElement(field_, field_.pow_raw(value_, n));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw WittError("division by zero in " + field_.name());
  return pow(field_.order() - 2);
}

bool FieldElement::is_square() const {
  if (is_zero()) {
    throw WittError("zero has no square class");
  }
  return pow((field_.order() - 1) / 2).is_one();
}

SquareClass FieldElement::square_class() const {
  return is_square() ? SquareClass::One : SquareClass::NonSquare;
}

std::string FieldElement::to_string() const {
  if (field_.degree() == 1) return std::to_string(value_);
  const auto c = coeffs();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i] << '*';
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace wittc
