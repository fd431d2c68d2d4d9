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

#ifndef WITTC_GROUP_RING_HPP_
#define WITTC_GROUP_RING_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wittc/picard2.hpp"
#include "wittc/witt_curve.hpp"
#include "wittc/witt_k.hpp"

namespace wittc {

inline constexpr unsigned kMaxClosureRank = 3;

/// An element of the group ring W(k)[2Pic(C)]: one W(k) coefficient per
/// group element, indexed by PicElement::index().
class GroupRingElement {
 public:
  GroupRingElement(Mod4 context, unsigned rank);

  static GroupRingElement zero(Mod4 c, unsigned rank) { return {c, rank}; }
  /// The monomial a * L.
  static GroupRingElement monomial(const WittK& a, const PicElement& line);

  Mod4 context() const { return context_; }
  unsigned rank() const { return rank_; }
  std::size_t size() const { return coeffs_.size(); }

  const WittK& coeff(const PicElement& line) const;
  const WittK& coeff(std::uint32_t index) const { return coeffs_.at(index); }
  void set(const PicElement& line, const WittK& a);
  /// coeff(line) += a.
  void accumulate(const PicElement& line, const WittK& a);

  bool is_zero() const;

  /// Compact key for rings with 2^r <= 16: two bits per coefficient,
  /// coefficient index() in slot L.
  std::uint32_t key() const;
  static GroupRingElement from_key(Mod4 c, unsigned rank, std::uint32_t key);

  /// "<1>O + <s>01 + e10", or "0".
  std::string to_string() const;

  friend bool operator==(const GroupRingElement&,
                         const GroupRingElement&) = default;

 private:
  Mod4 context_;
  unsigned rank_;
  std::vector<WittK> coeffs_;
};

GroupRingElement gr_add(const GroupRingElement& f, const GroupRingElement& g);
GroupRingElement gr_neg(const GroupRingElement& f);
GroupRingElement gr_sub(const GroupRingElement& f, const GroupRingElement& g);
GroupRingElement gr_mul(const GroupRingElement& f, const GroupRingElement& g);

/// The relation <1> - <u>L - <v>M + <uv>LM.
struct RelationGenerator {
  SquareClass u = SquareClass::One;
  SquareClass v = SquareClass::One;
  PicElement l;
  PicElement m;

  GroupRingElement materialize(Mod4 c) const;
  std::string to_string() const;
};

/// All 4 * (2^r)^2 generator tuples, ordered by L, M, u, v.
std::vector<RelationGenerator> relation_tuples(const Pic2Group& group);
std::vector<GroupRingElement> relation_generators(Mod4 c,
                                                  const Pic2Group& group);

/// The ideal generated by a set of group-ring elements, held as a
/// membership table over the whole (tiny) ring. Only for rank <= 3.
class Ideal {
 public:
  Mod4 context() const { return context_; }
  unsigned rank() const { return rank_; }
  std::uint64_t size() const { return size_; }
  /// 4^(2^r).
  std::uint64_t ring_size() const { return member_.size(); }
  bool contains(const GroupRingElement& f) const;
  std::vector<GroupRingElement> elements() const;

 private:
  friend Ideal ideal_closure(const std::vector<GroupRingElement>&, Mod4,
                             const Pic2Group&);
  Mod4 context_ = Mod4::One;
  unsigned rank_ = 0;
  std::uint64_t size_ = 0;
  std::vector<bool> member_;
};

/// Worklist closure: the additive subgroup spanned by g * <u>L for every
/// generator g and monomial <u>L. The monomials span the ring additively,
/// so this is the ideal.
Ideal ideal_closure(const std::vector<GroupRingElement>& gens, Mod4 c,
                    const Pic2Group& group);

/// Every element of the ring, in key order. Only for rank <= 3.
std::vector<GroupRingElement> enumerate_ring(Mod4 c, const Pic2Group& group);

/// Rank-one letters of a group-ring element: <1> -> [1], <s> -> [s],
/// e -> [1,s] when q = 1 mod 4 and [1,1] when q = 3 mod 4.
std::vector<Letter> to_word(const GroupRingElement& f);

GroupRingElement from_word(std::span<const Letter> word, Mod4 c, unsigned rank);

/// The canonical W(C) class of f: reduce_word(to_word(f)).
WittClass normal_form(const GroupRingElement& f);

struct IsomorphismReport {
  Mod4 context = Mod4::One;
  unsigned rank = 0;
  bool generators_vanish = false;
  /// Only run when rank <= 2.
  std::optional<bool> membership_matches;
  std::optional<bool> ring_map;
  bool surjective = false;
  /// For rank 3: every element of the kernel of normal_form lies in the
  /// ideal (kernel and ideal have equal size).
  std::optional<bool> kernel_is_ideal;
  std::uint64_t ring_size = 0;
  std::uint64_t ideal_size = 0;
  std::uint64_t quotient_size = 0;
  std::uint64_t expected_quotient_size = 0;
  std::vector<std::string> counterexamples;

  bool passed() const;
};

/// Checks W(k)[2Pic]/R ≅ W(C) at desk scale:
///  (i)   every relation generator has normal form zero;
///  (ii)  f - g in the ideal iff normal_form(f) == normal_form(g) (r <= 2);
///  (iii) normal_form respects + and * (r <= 2);
///  (iv)  |ring| / |ideal| == 4 * 2^r.
IsomorphismReport verify_isomorphism(Mod4 c, const Pic2Group& group);

}  // namespace wittc

#endif  // WITTC_GROUP_RING_HPP_
