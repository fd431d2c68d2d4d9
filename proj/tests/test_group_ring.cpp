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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "wittc/group_ring.hpp"

using namespace wittc;

namespace {

const Mod4 kContexts[] = {Mod4::One, Mod4::Three};
constexpr SquareClass One = SquareClass::One;
constexpr SquareClass S = SquareClass::NonSquare;

GroupRingElement random_element(std::mt19937& rng, Mod4 c, unsigned rank) {
  std::uniform_int_distribution<int> pick(0, 3);
  GroupRingElement f(c, rank);
  for (std::uint32_t i = 0; i < (1u << rank); ++i) {
    f.set(PicElement(rank, i), WittK::all(c)[pick(rng)]);
  }
  return f;
}

}  // namespace

TEST_CASE("gr_add and gr_mul examples") {
  for (auto c : kContexts) {
    const auto l = PicElement::parse("10"), m = PicElement::parse("11");
    std::mt19937 rng(1);
    const auto f = random_element(rng, c, 2);
    CHECK(gr_add(f, GroupRingElement::zero(c, 2)) == f);
    const auto one_l = GroupRingElement::monomial(WittK::one(c), l);
    CHECK(gr_mul(one_l, one_l) == GroupRingElement::monomial(WittK::one(c), Pic2Group(2).identity()));
    CHECK(gr_mul(one_l, GroupRingElement::monomial(WittK::s(c), m)) ==
          GroupRingElement::monomial(WittK::s(c), pic_mul(l, m)));
  }
  CHECK_THROWS_AS(gr_add(GroupRingElement::zero(Mod4::One, 1), GroupRingElement::zero(Mod4::Three, 1)),
                  WittError);
  CHECK_THROWS_AS(gr_mul(GroupRingElement::zero(Mod4::One, 1), GroupRingElement::zero(Mod4::One, 2)),
                  WittError);
}

TEST_CASE("element accessors") {
  auto f = GroupRingElement::zero(Mod4::One, 2);
  CHECK(f.to_string() == "0");
  f.set(PicElement::parse("00"), WittK::one(Mod4::One));
  f.set(PicElement::parse("01"), WittK::s(Mod4::One));
  f.set(PicElement::parse("11"), WittK::even(Mod4::One));
  CHECK(f.to_string() == "<1>O + <s>01 + e11");
  f.accumulate(PicElement::parse("00"), WittK::one(Mod4::One));
  CHECK(f.coeff(0).is_zero());
  CHECK(GroupRingElement::from_key(Mod4::One, 2, f.key()) == f);
  CHECK_THROWS_AS(f.set(PicElement::parse("1"), WittK::one(Mod4::One)), WittError);
  CHECK_THROWS_AS(f.set(PicElement::parse("10"), WittK::one(Mod4::Three)), WittError);
  CHECK_THROWS_AS(GroupRingElement::zero(Mod4::One, 5).key(), WittError);
}

TEST_CASE("relation generator examples") {
  for (auto c : kContexts) {
    const auto o = PicElement::identity(0);
    CHECK(RelationGenerator{One, One, o, o}.materialize(c).is_zero());
    CHECK(relation_generators(c, Pic2Group(1)).size() == 16);
    CHECK(relation_generators(c, Pic2Group(2)).size() == 64);
  }
  const auto l = PicElement::parse("1");
  const RelationGenerator g{One, S, l, l};
  CHECK(g.to_string() == "<1> - <1>1 - <s>1 + <s>O");
  // q = 1 mod 4: <1,s> is anisotropic, so both coefficients are e.
  auto want = GroupRingElement::zero(Mod4::One, 1);
  want.set(PicElement::parse("0"), WittK::even(Mod4::One));
  want.set(l, WittK::even(Mod4::One));
  CHECK(g.materialize(Mod4::One) == want);
  // q = 3 mod 4: <1,s> is hyperbolic and the generator is zero.
  CHECK(g.materialize(Mod4::Three).is_zero());
  CHECK(witt_decompose(DiagonalForm::of(FiniteField::make(5), {1, 2})).hyperbolic_count == 0);
  CHECK(witt_decompose(DiagonalForm::of(FiniteField::make(7), {1, 3})).hyperbolic_count == 1);
}

TEST_CASE("ring axioms exhaustive for r <= 1") {
  for (auto c : kContexts) {
    for (unsigned r = 0; r <= 1; ++r) {
      const auto ring = enumerate_ring(c, Pic2Group(r));
      CHECK(ring.size() == (r == 0 ? 4u : 16u));
      const auto one = GroupRingElement::monomial(WittK::one(c), PicElement::identity(r));
      for (const auto& a : ring) {
        CHECK(gr_mul(a, one) == a);
        CHECK(gr_add(a, gr_neg(a)).is_zero());
        for (const auto& b : ring) {
          CHECK(gr_add(a, b) == gr_add(b, a));
          CHECK(gr_mul(a, b) == gr_mul(b, a));
          for (const auto& x : ring) {
            REQUIRE(gr_add(gr_add(a, b), x) == gr_add(a, gr_add(b, x)));
            REQUIRE(gr_mul(gr_mul(a, b), x) == gr_mul(a, gr_mul(b, x)));
            REQUIRE(gr_mul(a, gr_add(b, x)) == gr_add(gr_mul(a, b), gr_mul(a, x)));
          }
        }
      }
    }
  }
}

TEST_CASE("ring axioms on random elements for r <= 4") {
  std::mt19937 rng(4);
  for (auto c : kContexts) {
    for (unsigned r = 2; r <= 4; ++r) {
      for (int t = 0; t < 300; ++t) {
        const auto a = random_element(rng, c, r), b = random_element(rng, c, r),
                   x = random_element(rng, c, r);
        CHECK(gr_add(gr_add(a, b), x) == gr_add(a, gr_add(b, x)));
        CHECK(gr_mul(gr_mul(a, b), x) == gr_mul(a, gr_mul(b, x)));
        CHECK(gr_mul(a, gr_add(b, x)) == gr_add(gr_mul(a, b), gr_mul(a, x)));
        CHECK(gr_mul(a, b) == gr_mul(b, a));
        CHECK(gr_sub(gr_add(a, b), b) == a);
      }
    }
  }
}

TEST_CASE("ideal_closure examples") {
  for (auto c : kContexts) {
    const auto zero = ideal_closure({GroupRingElement::zero(c, 1)}, c, Pic2Group(1));
    CHECK(zero.size() == 1);
    const auto r0 = ideal_closure(relation_generators(c, Pic2Group(0)), c, Pic2Group(0));
    CHECK(r0.size() == 1);
    for (unsigned r = 1; r <= 2; ++r) {
      const auto ideal = ideal_closure(relation_generators(c, Pic2Group(r)), c, Pic2Group(r));
      CHECK(ideal.ring_size() / ideal.size() == (4u << r));
    }
  }
  CHECK_THROWS_AS(ideal_closure({}, Mod4::One, Pic2Group(4)), WittError);
}

TEST_CASE("ideal_closure agrees with the fixpoint oracle") {
  std::mt19937 rng(8);
  for (auto c : kContexts) {
    for (unsigned r = 0; r <= 2; ++r) {
      const auto gens = relation_generators(c, Pic2Group(r));
      const auto ideal = ideal_closure(gens, c, Pic2Group(r));
      const auto want = oracle::ideal_fixpoint(gens, c, r);
      CHECK(ideal.size() == want.size());
      for (const auto& f : enumerate_ring(c, Pic2Group(r))) {
        CHECK(ideal.contains(f) == (want.count(f.key()) > 0));
      }
      // Random single-generator ideals.
      if (r <= 1) {
        for (int t = 0; t < 20; ++t) {
          const std::vector<GroupRingElement> one{random_element(rng, c, r)};
          const auto mine = ideal_closure(one, c, Pic2Group(r));
          const auto ref = oracle::ideal_fixpoint(one, c, r);
          CHECK(mine.size() == ref.size());
          for (const auto& e : mine.elements()) CHECK(ref.count(e.key()) > 0);
        }
      }
    }
  }
}

TEST_CASE("to_word and from_word") {
  for (auto c : kContexts) {
    const auto o = PicElement::identity(1);
    const auto e = GroupRingElement::monomial(WittK::even(c), o);
    const auto w = to_word(e);
    REQUIRE(w.size() == 2);
    CHECK(w[0] == Letter{One, o});
    CHECK(w[1] == Letter{c == Mod4::One ? S : One, o});
    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
      const auto f = random_element(rng, c, 3);
      CHECK(from_word(to_word(f), c, 3) == f);
    }
  }
}

TEST_CASE("normal_form examples") {
  for (auto c : kContexts) {
    const auto l = PicElement::parse("01");
    CHECK(normal_form(GroupRingElement::monomial(WittK::s(c), l)) == WittClass::odd(c, S, l));
    CHECK(normal_form(GroupRingElement::zero(c, 2)).is_zero());
  }
  auto two = GroupRingElement::monomial(WittK::one(Mod4::Three), PicElement::identity(1));
  two = gr_add(two, two);
  CHECK(two.coeff(0) == WittK::even(Mod4::Three));
  const auto nf = normal_form(two);
  CHECK(nf == WittClass::even(Mod4::Three, S, PicElement::identity(1)));
  CHECK_FALSE(nf.is_zero());
}

TEST_CASE("normal_form matches invariants and is surjective") {
  for (auto c : kContexts) {
    for (unsigned r = 0; r <= 2; ++r) {
      std::set<std::string> image;
      for (const auto& f : enumerate_ring(c, Pic2Group(r))) {
        const auto nf = normal_form(f);
        CHECK(oracle::invariant_of(nf) == oracle::invariant_of(f));
        image.insert(nf.to_string());
      }
      CHECK(image.size() == (4u << r));
    }
  }
}

TEST_CASE("relation generators have normal form zero for r <= 8") {
  for (auto c : kContexts) {
    for (unsigned r = 0; r <= 8; ++r) {
      for (const auto& t : relation_tuples(Pic2Group(r))) {
        const auto g = t.materialize(c);
        if (!normal_form(g).is_zero()) FAIL(t.to_string());
      }
    }
  }
}

TEST_CASE("normal_form is independent of letter order") {
  std::mt19937 rng(12);
  for (auto c : kContexts) {
    for (unsigned r : {2u, 5u}) {
      for (int t = 0; t < 500; ++t) {
        const auto f = random_element(rng, c, r);
        auto w = to_word(f);
        std::shuffle(w.begin(), w.end(), rng);
        CHECK(reduce_word(w, c, r) == normal_form(f));
      }
    }
  }
}

TEST_CASE("verify_isomorphism") {
  for (auto c : kContexts) {
    for (unsigned r = 0; r <= 3; ++r) {
      const auto rep = verify_isomorphism(c, Pic2Group(r));
      CHECK(rep.passed());
      CHECK(rep.generators_vanish);
      CHECK(rep.surjective);
      CHECK(rep.quotient_size == (4u << r));
      CHECK(rep.expected_quotient_size == (4u << r));
      CHECK(rep.counterexamples.empty());
      if (r <= 2) {
        REQUIRE(rep.membership_matches.has_value());
        CHECK(*rep.membership_matches);
        CHECK(*rep.ring_map);
      } else {
        REQUIRE(rep.kernel_is_ideal.has_value());
        CHECK(*rep.kernel_is_ideal);
      }
    }
  }
}
