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

#include "wittc/verification.hpp"

#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "wittc/bilinear_forms.hpp"
#include "wittc/group_ring.hpp"
#include "wittc/witt_curve.hpp"
#include "wittc/witt_k.hpp"

namespace wittc {

namespace {

constexpr Mod4 kContexts[] = {Mod4::One, Mod4::Three};
constexpr SquareClass kClasses[] = {SquareClass::One, SquareClass::NonSquare};

// Representative fields for the two contexts.
FiniteField context_field(Mod4 c) {
  return FiniteField::make(c == Mod4::One ? 5 : 7);
}

// Collects the first failure; later failures are only counted.
struct Failures {
  std::string first;
  std::uint64_t count = 0;

  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  bool ok() const { return count == 0; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    return std::to_string(count) + " failure(s); first: " + first;
  }
};

std::vector<DiagonalForm> forms_up_to_square_class(const FiniteField& field,
                                                   std::size_t max_rank) {
  const FieldElement reps[] = {field.one(), field.canonical_nonsquare()};
  std::vector<DiagonalForm> out;
  for (std::size_t n = 0; n <= max_rank; ++n) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      Vector v;
      for (std::size_t i = 0; i < n; ++i) v.push_back(reps[(mask >> i) & 1U]);
      out.emplace_back(field, std::move(v));
    }
  }
  return out;
}

CheckResult check_bullets() {
  Failures f;
  const std::pair<unsigned, unsigned> fields[] = {{3, 1}, {5, 1},  {7, 1},
                                                  {3, 2}, {11, 1}, {13, 1},
                                                  {5, 2}, {3, 3}};
  for (auto [p, e] : fields) {
    const auto field = FiniteField::make(p, e);
    for (const auto& b : verify_bullets(field)) {
      if (!b.passed) f.add(field.name() + ": " + b.identity + " (" + b.detail + ")");
    }
  }
  return {1, "W(k) identities for q in {3,5,7,9,11,13,25,27}", f.ok(),
          f.summary("all four identities hold in 8 fields")};
}

CheckResult check_wk_order() {
  Failures f;
  std::ostringstream counts;
  for (auto [p, e] : std::initializer_list<std::pair<unsigned, unsigned>>{
           {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
    const auto field = FiniteField::make(p, e);
    std::vector<DiagonalForm> anisotropic;
    const auto units = field.units();
    anisotropic.emplace_back(field);
    for (const auto& a : units) anisotropic.emplace_back(field, Vector{a});
    for (const auto& a : units) {
      for (const auto& b : units) {
        DiagonalForm g(field, {a, b});
        if (!find_isotropic_vector(g)) anisotropic.push_back(g);
      }
    }
    std::vector<DiagonalForm> classes;
    for (const auto& g : anisotropic) {
      bool seen = false;
      for (const auto& h : classes) {
        if (witt_equal(g, h)) {
          seen = true;
          break;
        }
      }
      if (!seen) classes.push_back(g);
    }
    counts << field.name() << ":" << classes.size() << " ";
    if (classes.size() != 4) {
      f.add(field.name() + " has " + std::to_string(classes.size()) + " classes");
    }
  }
  return {2, "|W(k)| = 4", f.ok(), f.summary(counts.str())};
}

CheckResult check_wk_additive() {
  Failures f;
  for (Mod4 c : kContexts) {
    const auto field = context_field(c);
    if (c == Mod4::One) {
      for (const auto& a : WittK::all(c)) {
        if (!wk_add(a, a).is_zero()) f.add("x + x != 0 for " + a.symbol());
        const DiagonalForm rep = representative(a, field);
        if (witt_decompose(orthogonal_sum(rep, rep)).anisotropic.rank() != 0) {
          f.add(field.name() + ": " + rep.to_string() + " twice is not hyperbolic");
        }
      }
    } else {
      const WittK one = WittK::one(c);
      WittK acc = WittK::zero(c);
      for (int k = 1; k <= 4; ++k) {
        acc = wk_add(acc, one);
        if (acc.is_zero() != (k == 4)) {
          f.add("<1> has wrong additive order at k = " + std::to_string(k));
        }
        const DiagonalForm ones(field, Vector(static_cast<std::size_t>(k), field.one()));
        const bool hyperbolic = witt_decompose(ones).anisotropic.rank() == 0;
        if (hyperbolic != (k == 4)) {
          f.add(field.name() + ": " + ones.to_string() + " hyperbolic = " +
                (hyperbolic ? "true" : "false"));
        }
      }
      if (!(wk_add(wk_add(one, one), one) == WittK::s(c))) {
        f.add("<1>+<1>+<1> != <s>");
      }
    }
  }
  return {3, "W(k) additive exponent 2 (q=1) / order 4 (q=3)", f.ok(),
          f.summary("exponent 2 for q = 1 mod 4, <1> of order 4 for q = 3 mod 4")};
}

CheckResult check_isotropy() {
  Failures f;
  std::uint64_t forms = 0;
  for (unsigned p : {3U, 5U, 7U, 11U}) {
    const auto field = FiniteField::make(p);
    for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
      for (const auto& g : forms_up_to_square_class(field, n)) {
        if (g.rank() != n) continue;
        ++forms;
        const auto v = find_isotropic_vector(g);
        if (!v || !g.evaluate(*v).is_zero()) {
          f.add(field.name() + ": " + g.to_string() + " not isotropic");
        }
      }
    }
    for (const auto& g : forms_up_to_square_class(field, 6)) {
      const auto dec = witt_decompose(g);
      if (dec.anisotropic.rank() > 2 ||
          2 * dec.hyperbolic_count + dec.anisotropic.rank() != g.rank()) {
        f.add(field.name() + ": " + g.to_string() + " anisotropic kernel " +
              dec.anisotropic.to_string());
      }
    }
  }
  return {4, "rank 3 and 4 forms are isotropic", f.ok(),
          f.summary(std::to_string(forms) + " forms isotropic, kernels rank <= 2")};
}

CheckResult check_invariant_completeness() {
  Failures f;
  std::uint64_t pairs = 0;
  for (auto [p, e] : std::initializer_list<std::pair<unsigned, unsigned>>{
           {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
    const auto field = FiniteField::make(p, e);
    const auto forms = forms_up_to_square_class(field, 4);
    for (const auto& g : forms) {
      for (const auto& h : forms) {
        ++pairs;
        const bool equal = witt_equal(g, h);
        const bool same_inv = witt_invariants(g) == witt_invariants(h);
        if (equal != same_inv) {
          f.add(field.name() + ": " + g.to_string() + " vs " + h.to_string());
        }
      }
    }
  }
  return {5, "witt_equal <=> (rank parity, d±)", f.ok(),
          f.summary(std::to_string(pairs) + " pairs agree")};
}

// A table cell <1, X_t> equals <1, -X_{-t}>.
WittClass one_plus(Mod4 c, SquareClass t, PicElement x) {
  return WittClass::even(c, minus_one_class(c) * t, x);
}

CheckResult check_curve_tables() {
  Failures f;
  std::uint64_t cells = 0;
  for (Mod4 c : kContexts) {
    const SquareClass s = SquareClass::NonSquare;
    for (unsigned r = 0; r <= 3; ++r) {
      const auto lines = Pic2Group(r).enumerate();
      const PicElement o = PicElement::identity(r);
      for (const auto& l : lines) {
        for (const auto& m : lines) {
          for (SquareClass u : kClasses) {
            for (SquareClass v : kClasses) {
              const auto ol = WittClass::odd(c, u, l);
              const auto om = WittClass::odd(c, v, m);
              const auto el = WittClass::even(c, u, l);
              const auto em = WittClass::even(c, v, m);
              const PicElement lm = pic_mul(l, m);
              const struct {
                WittClass got;
                WittClass want;
                const char* cell;
              } table[] = {
                  {wc_mul(om, ol), WittClass::odd(c, u * v, lm), "M*L"},
                  {wc_mul(om, el), el, "M*(1,-L')"},
                  {wc_mul(em, ol), em, "(1,-M')*L"},
                  {wc_mul(em, el), WittClass::zero(c, r), "(1,-M')*(1,-L')"},
                  {wc_add(om, ol), one_plus(c, u * v, lm), "M+L"},
                  {wc_add(om, el), WittClass::odd(c, v * u, lm), "M+(1,-L')"},
                  {wc_add(em, ol), WittClass::odd(c, v * u, lm), "(1,-M')+L"},
                  {wc_add(em, el), WittClass::even(c, v * u, lm), "(1,-M')+(1,-L')"},
              };
              for (const auto& cell : table) {
                ++cells;
                if (!(cell.got == cell.want)) {
                  f.add(std::string(cell.cell) + " at " + ol.to_string() + ", " +
                        om.to_string() + ": got " + cell.got.to_string() +
                        ", want " + cell.want.to_string());
                }
              }
            }
          }
        }
        for (SquareClass u : kClasses) {
          const auto a = WittClass::odd(c, u, l);
          const auto b = WittClass::odd(c, u * s, l);
          if (!(wc_mul(a, a) == WittClass::odd(c, SquareClass::One, o))) f.add("<L><L> != <1>");
          if (!(wc_mul(a, b) == WittClass::odd(c, s, o))) f.add("<L><L_s> != <s>");
          if (!(wc_add(a, a) == one_plus(c, SquareClass::One, o))) f.add("<L>+<L> != <1,1>");
          if (!(wc_add(a, b) == one_plus(c, s, o))) f.add("<L>+<L_s> != <1,s>");
          cells += 4;
        }
      }
    }
  }
  return {6, "W(C) addition and multiplication tables", f.ok(),
          f.summary(std::to_string(cells) + " cells match")};
}

template <typename Rng>
WittClass random_class(Rng& rng, Mod4 c, unsigned r) {
  const std::uint64_t x = rng();
  const auto bits = static_cast<std::uint32_t>((x >> 2) & ((std::uint64_t{1} << r) - 1));
  return WittClass((x & 1) ? Parity::Odd : Parity::Even,
                   (x & 2) ? SquareClass::NonSquare : SquareClass::One,
                   PicElement(r, bits), c);
}

void check_axioms(const WittClass& a, const WittClass& b, const WittClass& d,
                  Failures& f) {
  const auto zero = WittClass::zero(a.context(), a.rank());
  const auto one = WittClass::one(a.context(), a.rank());
  auto fail = [&](const char* what) {
    f.add(std::string(what) + " at " + a.to_string() + ", " + b.to_string() +
          ", " + d.to_string());
  };
  if (!(wc_add(wc_add(a, b), d) == wc_add(a, wc_add(b, d)))) fail("add assoc");
  if (!(wc_mul(wc_mul(a, b), d) == wc_mul(a, wc_mul(b, d)))) fail("mul assoc");
  if (!(wc_add(a, b) == wc_add(b, a))) fail("add comm");
  if (!(wc_mul(a, b) == wc_mul(b, a))) fail("mul comm");
  if (!(wc_mul(a, wc_add(b, d)) == wc_add(wc_mul(a, b), wc_mul(a, d)))) fail("distrib");
  if (!(wc_add(a, zero) == a)) fail("add identity");
  if (!(wc_mul(a, one) == a)) fail("mul identity");
  if (!(wc_add(a, wc_neg(a)) == zero)) fail("additive inverse");
}

CheckResult check_ring_axioms(const VerifyOptions& opts) {
  Failures f;
  std::uint64_t triples = 0;
  for (Mod4 c : kContexts) {
    for (unsigned r = 0; r <= 2; ++r) {
      const auto all = enumerate_classes(c, Pic2Group(r));
      for (const auto& a : all) {
        for (const auto& b : all) {
          for (const auto& d : all) {
            check_axioms(a, b, d, f);
            ++triples;
          }
        }
      }
    }
    std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(c));
    for (std::uint64_t i = 0; i < opts.random_triples; ++i) {
      check_axioms(random_class(rng, c, 8), random_class(rng, c, 8),
                   random_class(rng, c, 8), f);
      ++triples;
    }
  }
  return {7, "W(C) commutative ring axioms", f.ok(),
          f.summary(std::to_string(triples) + " triples")};
}

CheckResult check_classification() {
  Failures f;
  for (Mod4 c : kContexts) {
    for (unsigned r = 0; r <= 3; ++r) {
      const Pic2Group group(r);
      const auto classes = enumerate_classes(c, group);
      std::set<std::tuple<int, int, std::uint32_t>> invariants;
      for (const auto& a : classes) {
        const auto [u, l] = signed_discriminant_class(a);
        invariants.insert({a.is_odd(), static_cast<int>(u), l.index()});
      }
      if (invariants.size() != classes.size()) {
        f.add("(parity, d±) not injective for r = " + std::to_string(r));
      }

      std::set<std::string> reached;
      const auto lines = group.enumerate();
      std::vector<Letter> letters;
      for (const auto& l : lines) {
        for (SquareClass u : kClasses) letters.push_back({u, l});
      }
      reached.insert(reduce_word({}, c, r).to_string());
      for (const auto& x : letters) {
        reached.insert(reduce_word(std::vector<Letter>{x}, c, r).to_string());
        for (const auto& y : letters) {
          reached.insert(reduce_word(std::vector<Letter>{x, y}, c, r).to_string());
        }
      }
      for (const auto& a : classes) {
        if (!reached.count(a.to_string())) {
          f.add(a.to_string() + " not reachable by a word of length <= 2");
        }
      }
    }
  }
  return {8, "classification by (parity, d±); length-2 representatives", f.ok(),
          f.summary("injective and covered for r <= 3")};
}

CheckResult check_isomorphism() {
  Failures f;
  std::ostringstream sizes;
  for (Mod4 c : kContexts) {
    for (unsigned r = 0; r <= 3; ++r) {
      const auto rep = verify_isomorphism(c, Pic2Group(r));
      sizes << "q=" << to_string(c) << ",r=" << r << ":" << rep.quotient_size
            << " ";
      if (!rep.passed()) {
        f.add("q = " + to_string(c) + " mod 4, r = " + std::to_string(r) +
              (rep.counterexamples.empty() ? std::string(": size mismatch")
                                           : ": " + rep.counterexamples.front()));
      }
    }
  }
  return {9, "W(k)[2Pic]/R isomorphic to W(C)", f.ok(), f.summary(sizes.str())};
}

WittClass from_wk(const WittK& a) {
  const Mod4 c = a.context();
  const PicElement o = PicElement::identity(0);
  switch (a.index()) {
    case 0:
      return WittClass::zero(c, 0);
    case 1:
      return WittClass::odd(c, SquareClass::One, o);
    case 2:
      return WittClass::odd(c, SquareClass::NonSquare, o);
    default:
      return WittClass::even(c, SquareClass::NonSquare, o);
  }
}

CheckResult check_degeneration() {
  Failures f;
  for (Mod4 c : kContexts) {
    for (const auto& a : WittK::all(c)) {
      for (const auto& b : WittK::all(c)) {
        if (!(from_wk(wk_add(a, b)) == wc_add(from_wk(a), from_wk(b))) ||
            !(from_wk(wk_mul(a, b)) == wc_mul(from_wk(a), from_wk(b)))) {
          f.add("q = " + to_string(c) + " mod 4 at " + a.symbol() + ", " + b.symbol());
        }
      }
    }
  }
  return {10, "r = 0 degeneration to W(k)", f.ok(),
          f.summary("4x4 tables coincide in both contexts")};
}

}  // namespace

CheckResult run_check(int id, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    switch (id) {
      case 1: r = check_bullets(); break;
      case 2: r = check_wk_order(); break;
      case 3: r = check_wk_additive(); break;
      case 4: r = check_isotropy(); break;
      case 5: r = check_invariant_completeness(); break;
      case 6: r = check_curve_tables(); break;
      case 7: r = check_ring_axioms(opts); break;
      case 8: r = check_classification(); break;
      case 9: r = check_isomorphism(); break;
      case 10: r = check_degeneration(); break;
      default:
        throw WittError("unknown check id " + std::to_string(id));
    }
  } catch (const WittError& e) {
    if (id < 1 || id > 10) throw;
    r = {id, "check " + std::to_string(id), false,
         std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= 10; ++id) out.push_back(run_check(id, opts));
  return out;
}

}  // namespace wittc
