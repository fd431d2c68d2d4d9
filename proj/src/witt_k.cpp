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

#include "wittc/witt_k.hpp"

namespace wittc {

namespace {

void require_same_context(const WittK& a, const WittK& b) {
  if (a.context() != b.context()) {
    throw WittError("W(k) elements from different contexts (q = 1 and q = 3 mod 4)");
  }
}

}  // namespace

Mod4 mod4_of(const FiniteField& field) {
  return mod4_from_int(field.residue_mod4());
}

Mod4 mod4_from_int(int residue) {
  switch (residue) {
    case 1:
      return Mod4::One;
    case 3:
      return Mod4::Three;
    default:
      throw WittError("q mod 4 must be 1 or 3, got " + std::to_string(residue));
  }
}

std::string to_string(Mod4 c) { return c == Mod4::One ? "1" : "3"; }

WittK::WittK(int rank_parity, SquareClass disc, Mod4 context)
    : parity_(static_cast<std::uint8_t>(((rank_parity % 2) + 2) % 2)),
      disc_(disc),
      context_(context) {}

std::array<WittK, 4> WittK::all(Mod4 c) {
  return {zero(c), one(c), s(c), even(c)};
}

SquareClass WittK::rank_one_class() const {
  if (parity_ == 0) throw WittError("even W(k) class has no rank-one form");
  return minus_one_class(context_) * disc_;
}

std::string WittK::symbol() const {
  if (parity_ == 1) return rank_one_class() == SquareClass::One ? "1" : "s";
  return disc_ == SquareClass::One ? "0" : "e";
}

WittK WittK::from_symbol(Mod4 c, const std::string& symbol) {
  if (symbol == "0") return zero(c);
  if (symbol == "1") return one(c);
  if (symbol == "s") return s(c);
  if (symbol == "e") return even(c);
  throw WittError("unknown W(k) symbol '" + symbol + "', expected 0, 1, s or e");
}

int WittK::index() const {
  if (parity_ == 1) return rank_one_class() == SquareClass::One ? 1 : 2;
  return disc_ == SquareClass::One ? 0 : 3;
}

// With sigma the class of -1, d(f ⊥ g) = sigma^(mn) d(f) d(g) for ranks m, n.
WittK wk_add(const WittK& a, const WittK& b) {
  require_same_context(a, b);
  SquareClass d = a.disc() * b.disc();
  if (a.rank_parity() == 1 && b.rank_parity() == 1) {
    d = d * minus_one_class(a.context());
  }
  return {a.rank_parity() + b.rank_parity(), d, a.context()};
}

WittK wk_mul(const WittK& a, const WittK& b) {
  require_same_context(a, b);
  const Mod4 c = a.context();
  if (a.rank_parity() == 1 && b.rank_parity() == 1) {
    return {1, minus_one_class(c) * a.disc() * b.disc(), c};
  }
  if (a.rank_parity() == 1) return b;
  if (b.rank_parity() == 1) return a;
  return WittK::zero(c);
}

WittK wk_neg(const WittK& a) {
  if (a.rank_parity() == 0) return a;
  return {1, minus_one_class(a.context()) * a.disc(), a.context()};
}

WittK from_concrete_form(const DiagonalForm& f) {
  return {static_cast<int>(f.rank() % 2), signed_discriminant(f),
          mod4_of(f.field())};
}

DiagonalForm representative(const WittK& a, const FiniteField& field) {
  if (mod4_of(field) != a.context()) {
    throw WittError("field " + field.name() + " does not match W(k) context");
  }
  const FieldElement one = field.one();
  const FieldElement s = field.canonical_nonsquare();
  switch (a.index()) {
    case 0:
      return DiagonalForm(field);
    case 1:
      return DiagonalForm(field, {one});
    case 2:
      return DiagonalForm(field, {s});
    default:
      return a.context() == Mod4::One ? DiagonalForm(field, {one, s})
                                      : DiagonalForm(field, {one, one});
  }
}

std::vector<BulletCheck> verify_bullets(const FiniteField& field) {
  const FieldElement one = field.one();
  const FieldElement s = field.canonical_nonsquare();
  const FieldElement minus_one = -one;
  const DiagonalForm d11(field, {one, one});
  const DiagonalForm dss(field, {s, s});
  const DiagonalForm d111(field, {one, one, one});
  const DiagonalForm d1111(field, {one, one, one, one});
  const DiagonalForm d1(field, {one});
  const DiagonalForm ds(field, {s});
  const DiagonalForm dm1(field, {minus_one});
  const bool q1 = field.residue_mod4() == 1;

  std::vector<BulletCheck> out;

  {
    BulletCheck b{"<1,1> = <s,s>", true, false, ""};
    b.passed = witt_equal(d11, dss);
    b.detail = "witt_equal(<1,1>, " + dss.to_string() + ")";
    out.push_back(b);
  }

  auto odd_bullet = [&](const std::string& name, bool applicable,
                        const DiagonalForm& target) {
    BulletCheck b{name, applicable, false, ""};
    const auto dec = witt_decompose(d111);
    const bool split = dec.hyperbolic_count == 1 && dec.anisotropic.rank() == 1 &&
                       witt_equal(dec.anisotropic, target);
    const bool holds = split && witt_equal(d111, target) &&
                       witt_equal(target, dm1);
    if (applicable) {
      b.passed = holds;
      b.detail = "<1,1,1> splits as H + " + dec.anisotropic.to_string();
    } else {
      b.passed = true;
      b.detail = "q = " + std::string(q1 ? "1" : "3") +
                 " mod 4, hypothesis false (identity " +
                 (holds ? "holds" : "does not hold") + " here)";
    }
    out.push_back(b);
  };
  odd_bullet("<1,1,1> = <1> = <-1> when q = 1 mod 4", q1, d1);
  odd_bullet("<1,1,1> = <s> = <-1> when q = 3 mod 4", !q1, ds);

  {
    BulletCheck b{"<1,1,1,1> = 0", true, false, ""};
    const auto dec = witt_decompose(d1111);
    b.passed = dec.hyperbolic_count == 2 && dec.anisotropic.rank() == 0;
    b.detail = std::to_string(dec.hyperbolic_count) +
               " hyperbolic planes, anisotropic part " +
               dec.anisotropic.to_string();
    out.push_back(b);
  }
  return out;
}

}  // namespace wittc
