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

#ifndef WITTC_FINITE_FIELD_HPP_
#define WITTC_FINITE_FIELD_HPP_

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace wittc {

/// Raised for every contract violation in the library (bad parameters,
/// mixed fields, degenerate input, exceeded bounds).
class WittError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultFieldBound = std::uint64_t{1} << 20;

/// The two square classes of F_q^x. Multiplication is the group law of
/// order two, One is the identity.
enum class SquareClass : std::uint8_t { One = 0, NonSquare = 1 };

constexpr SquareClass operator*(SquareClass a, SquareClass b) {
  return a == b ? SquareClass::One : SquareClass::NonSquare;
}

std::string to_string(SquareClass c);

class FieldElement;

/// F_q for an odd prime power q = p^e.
///
/// Elements are stored as integers in [0, q): the coefficient vector
/// (c_0, ..., c_{e-1}) of the polynomial representative is encoded as
/// sum c_i p^i. Enumeration order everywhere in the library is ascending
/// integer order, i.e. lexicographic on (c_{e-1}, ..., c_0).
///
/// The field is a cheap handle to immutable shared data; copies compare
/// equal and elements remember the field they came from.
class FiniteField {
 public:
  /// Builds F_{p^e}. The modulus is the first monic irreducible polynomial
  /// of degree e in the enumeration order above (x itself when e = 1).
  static FiniteField make(std::uint32_t p, std::uint32_t e = 1,
                          std::uint64_t bound = kDefaultFieldBound);

  /// Accepts "p^e" or the order q itself, e.g. "7", "9" or "3^2".
  static FiniteField parse(const std::string& text,
                           std::uint64_t bound = kDefaultFieldBound);

  std::uint32_t characteristic() const { return impl_->p; }
  std::uint32_t degree() const { return impl_->e; }
  std::uint32_t order() const { return impl_->q; }

  /// Coefficients c_0..c_e of the monic modulus (c_e = 1).
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

  FieldElement zero() const;
  FieldElement one() const;
  /// The element with integer encoding `index` (must be < q).
  FieldElement at(std::uint32_t index) const;
  /// The image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_coeffs(const std::vector<std::int64_t>& coeffs) const;

  /// First non-square in ascending enumeration order.
  FieldElement canonical_nonsquare() const;

  /// q mod 4, always 1 or 3.
  int residue_mod4() const { return static_cast<int>(impl_->q % 4); }

  /// All nonzero elements in enumeration order.
  std::vector<FieldElement> units() const;

  std::string name() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b);

 private:
  friend class FieldElement;

  struct Impl {
    std::uint32_t p = 0;
    std::uint32_t e = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::uint32_t nonsquare = 0;
  };

  explicit FiniteField(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}

  std::uint32_t add_raw(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_raw(std::uint32_t a) const;
  std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_raw(std::uint32_t a, std::uint64_t n) const;

  std::shared_ptr<const Impl> impl_;
};

/// An element of a specific FiniteField. Mixing elements of different
/// fields in arithmetic throws WittError.
class FieldElement {
 public:
  FieldElement(FiniteField field, std::uint32_t value)
      : field_(std::move(field)), value_(value) {}

  const FiniteField& field() const { return field_; }
  std::uint32_t value() const { return value_; }
  std::vector<std::uint32_t> coeffs() const;

  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement pow(std::uint64_t n) const;
  FieldElement inverse() const;

  /// Euler's criterion: x^((q-1)/2) == 1. Throws on zero.
  bool is_square() const;
  SquareClass square_class() const;

  /// "3" for prime fields, "2+x" style polynomial text otherwise.
  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.value_ == b.value_ && a.field_ == b.field_;
  }

 private:
  void require_same_field(const FieldElement& o) const;

  FiniteField field_;
  std::uint32_t value_;
};

bool is_prime(std::uint64_t n);

/// Irreducibility of a monic polynomial over F_p by trial division with
/// every monic polynomial of degree <= deg/2.
bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

}  // namespace wittc

#endif  // WITTC_FINITE_FIELD_HPP_
