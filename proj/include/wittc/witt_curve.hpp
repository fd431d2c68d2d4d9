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

#ifndef WITTC_WITT_CURVE_HPP_
#define WITTC_WITT_CURVE_HPP_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wittc/picard2.hpp"
#include "wittc/witt_k.hpp"

namespace wittc {

inline constexpr unsigned kDefaultVerificationRank = 8;

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

/// A class in W(C), in canonical form.
///
///   odd(u, L)  is the rank-one class <L_u>: the line bundle L with its
///              fixed base form twisted by the square class u.
///   even(w, N) is <1, -N_w>.
///
/// The base form on each L is the one induced by L ⊗ L ≅ O and carries
/// the label One. Zero is even(One, O), the hyperbolic plane. Distinct
/// triples (parity, u, L) are distinct classes.
class WittClass {
 public:
  WittClass(Parity parity, SquareClass u, PicElement line, Mod4 context)
      : parity_(parity), u_(u), line_(line), context_(context) {}

  static WittClass odd(Mod4 c, SquareClass u, PicElement line) {
    return {Parity::Odd, u, line, c};
  }
  static WittClass even(Mod4 c, SquareClass w, PicElement line) {
    return {Parity::Even, w, line, c};
  }
  static WittClass zero(Mod4 c, unsigned rank) {
    return even(c, SquareClass::One, PicElement::identity(rank));
  }
  static WittClass one(Mod4 c, unsigned rank) {
    return odd(c, SquareClass::One, PicElement::identity(rank));
  }

  Parity parity() const { return parity_; }
  bool is_odd() const { return parity_ == Parity::Odd; }
  SquareClass u() const { return u_; }
  const PicElement& line() const { return line_; }
  Mod4 context() const { return context_; }
  unsigned rank() const { return line_.rank(); }
  bool is_zero() const { return *this == zero(context_, rank()); }

  /// "<L_u>" or "<1,-L_u>", with O for the trivial bundle.
  std::string to_string() const;

  friend bool operator==(const WittClass&, const WittClass&) = default;

 private:
  Parity parity_;
  SquareClass u_;
  PicElement line_;
  Mod4 context_;
};

WittClass wc_add(const WittClass& a, const WittClass& b);
WittClass wc_mul(const WittClass& a, const WittClass& b);
WittClass wc_neg(const WittClass& a);
inline WittClass wc_sub(const WittClass& a, const WittClass& b) {
  return wc_add(a, wc_neg(b));
}

/// d± as a rank-one class <L_u>, returned as (u, L).
std::pair<SquareClass, PicElement> signed_discriminant_class(
    const WittClass& a);

/// All 4 * 2^r classes: odd(1, L), odd(s, L) for every L, then
/// even(1, N), even(s, N) for every N. Zero is the first even class.
std::vector<WittClass> enumerate_classes(
    Mod4 c, const Pic2Group& group,
    unsigned max_rank = kDefaultVerificationRank);

/// A rank-one letter <L_u> of an orthogonal sum.
struct Letter {
  SquareClass u = SquareClass::One;
  PicElement line;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Folds <L_1,u_1> ⊥ ... ⊥ <L_n,u_n> left to right. The empty word is zero
/// in W(C) with Picard rank `rank`.
WittClass reduce_word(std::span<const Letter> word, Mod4 c, unsigned rank);

/// Parses "(u,L);(v,M);..." with u in {1,s} and L a bit string.
std::vector<Letter> parse_word(const std::string& text);

}  // namespace wittc

#endif  // WITTC_WITT_CURVE_HPP_
