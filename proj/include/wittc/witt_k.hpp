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

#ifndef WITTC_WITT_K_HPP_
#define WITTC_WITT_K_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "wittc/bilinear_forms.hpp"
#include "wittc/finite_field.hpp"

namespace wittc {

/// q mod 4 for the base field. Selects which of the two non-isomorphic
/// four-element Witt rings is in play.
enum class Mod4 : std::uint8_t { One = 1, Three = 3 };

Mod4 mod4_of(const FiniteField& field);
Mod4 mod4_from_int(int residue);
std::string to_string(Mod4 c);

/// Square class of -1: One iff q = 1 mod 4.
constexpr SquareClass minus_one_class(Mod4 c) {
  return c == Mod4::One ? SquareClass::One : SquareClass::NonSquare;
}

/// An element of W(F_q), stored as its complete invariant pair
/// (rank parity, signed discriminant) plus the q mod 4 context.
///
/// Note that the signed discriminant of <u> is <-u>, so for q = 3 mod 4
/// the identity <1> has disc NonSquare.
class WittK {
 public:
  WittK(int rank_parity, SquareClass disc, Mod4 context);

  static WittK zero(Mod4 c) { return {0, SquareClass::One, c}; }
  /// The rank-one class <u>.
  static WittK rank_one(Mod4 c, SquareClass u) {
    return {1, minus_one_class(c) * u, c};
  }
  static WittK one(Mod4 c) { return rank_one(c, SquareClass::One); }
  static WittK s(Mod4 c) { return rank_one(c, SquareClass::NonSquare); }
  /// The nontrivial even class: <1,s> for q = 1 mod 4, <1,1> for q = 3.
  static WittK even(Mod4 c) { return {0, SquareClass::NonSquare, c}; }

  /// [0, <1>, <s>, e] in that order.
  static std::array<WittK, 4> all(Mod4 c);

  int rank_parity() const { return parity_; }
  SquareClass disc() const { return disc_; }
  Mod4 context() const { return context_; }

  bool is_zero() const { return parity_ == 0 && disc_ == SquareClass::One; }
  /// For odd classes, the u with this == <u>.
  SquareClass rank_one_class() const;

  /// "0", "1", "s" or "e".
  std::string symbol() const;
  static WittK from_symbol(Mod4 c, const std::string& symbol);
  /// Position in all(): 0, 1, 2, 3.
  int index() const;

  friend bool operator==(const WittK&, const WittK&) = default;

 private:
  std::uint8_t parity_;
  SquareClass disc_;
  Mod4 context_;
};

WittK wk_add(const WittK& a, const WittK& b);
WittK wk_mul(const WittK& a, const WittK& b);
WittK wk_neg(const WittK& a);
inline WittK wk_sub(const WittK& a, const WittK& b) {
  return wk_add(a, wk_neg(b));
}

/// (rank mod 2, signed discriminant) of a concrete form.
WittK from_concrete_form(const DiagonalForm& f);

/// A representative diagonal form: <> , <1>, <s>, and <1,s> or <1,1>.
DiagonalForm representative(const WittK& a, const FiniteField& field);

struct BulletCheck {
  std::string identity;
  bool applicable = true;
  bool passed = false;
  std::string detail;
};

/// Checks the four standard identities of W(F_q) with concrete forms and
/// witt_decompose. Identities whose q mod 4 hypothesis does not hold for
/// this field are reported as not applicable (and pass vacuously).
std::vector<BulletCheck> verify_bullets(const FiniteField& field);

}  // namespace wittc

#endif  // WITTC_WITT_K_HPP_
