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

#include "wittc/group_ring.hpp"

#include <deque>
#include <set>
#include <sstream>

namespace wittc {

namespace {

void require_compatible(const GroupRingElement& f, const GroupRingElement& g) {
  if (f.context() != g.context()) {
    throw WittError("group-ring elements from different contexts");
  }
  if (f.rank() != g.rank()) {
    throw WittError("group-ring elements over Picard groups of different rank");
  }
}

void require_closure_rank(unsigned rank) {
  if (rank > kMaxClosureRank) {
    throw WittError("exhaustive group-ring enumeration needs rank <= " +
                    std::to_string(kMaxClosureRank) + ", got " +
                    std::to_string(rank));
  }
}

std::string bundle_name(const PicElement& l) {
  return l.is_identity() ? "O" : l.to_string();
}

}  // namespace

GroupRingElement::GroupRingElement(Mod4 context, unsigned rank)
    : context_(context), rank_(rank) {
  if (rank > kDefaultEnumerationRank) {
    throw WittError("group ring over 2^" + std::to_string(rank) +
                    " Picard elements is too large");
  }
  coeffs_.assign(std::size_t{1} << rank, WittK::zero(context));
}

GroupRingElement GroupRingElement::monomial(const WittK& a,
                                            const PicElement& line) {
  GroupRingElement f(a.context(), line.rank());
  f.set(line, a);
  return f;
}

const WittK& GroupRingElement::coeff(const PicElement& line) const {
  if (line.rank() != rank_) throw WittError("Picard rank mismatch");
  return coeffs_[line.index()];
}

void GroupRingElement::set(const PicElement& line, const WittK& a) {
  if (line.rank() != rank_) throw WittError("Picard rank mismatch");
  if (a.context() != context_) throw WittError("coefficient context mismatch");
  coeffs_[line.index()] = a;
}

void GroupRingElement::accumulate(const PicElement& line, const WittK& a) {
  set(line, wk_add(coeff(line), a));
}

bool GroupRingElement::is_zero() const {
  for (const auto& a : coeffs_) {
    if (!a.is_zero()) return false;
  }
  return true;
}

std::uint32_t GroupRingElement::key() const {
  if (rank_ > 4) throw WittError("key() needs Picard rank <= 4");
  std::uint32_t k = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    k |= static_cast<std::uint32_t>(coeffs_[i].index()) << (2 * i);
  }
  return k;
}

GroupRingElement GroupRingElement::from_key(Mod4 c, unsigned rank,
                                            std::uint32_t key) {
  if (rank > 4) throw WittError("from_key() needs Picard rank <= 4");
  GroupRingElement f(c, rank);
  const auto all = WittK::all(c);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    f.coeffs_[i] = all[(key >> (2 * i)) & 3U];
  }
  return f;
}

std::string GroupRingElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string sym = coeffs_[i].symbol();
    os << (sym == "e" ? "e" : "<" + sym + ">")
       << bundle_name(PicElement(rank_, i));
  }
  if (first) os << '0';
  return os.str();
}

GroupRingElement gr_add(const GroupRingElement& f, const GroupRingElement& g) {
  require_compatible(f, g);
  GroupRingElement out(f.context(), f.rank());
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    const PicElement l(f.rank(), i);
    out.set(l, wk_add(f.coeff(i), g.coeff(i)));
  }
  return out;
}

GroupRingElement gr_neg(const GroupRingElement& f) {
  GroupRingElement out(f.context(), f.rank());
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    out.set(PicElement(f.rank(), i), wk_neg(f.coeff(i)));
  }
  return out;
}

GroupRingElement gr_sub(const GroupRingElement& f, const GroupRingElement& g) {
  return gr_add(f, gr_neg(g));
}

GroupRingElement gr_mul(const GroupRingElement& f, const GroupRingElement& g) {
  require_compatible(f, g);
  GroupRingElement out(f.context(), f.rank());
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    if (f.coeff(i).is_zero()) continue;
    for (std::uint32_t j = 0; j < g.size(); ++j) {
      if (g.coeff(j).is_zero()) continue;
      out.accumulate(PicElement(f.rank(), i ^ j),
                     wk_mul(f.coeff(i), g.coeff(j)));
    }
  }
  return out;
}

GroupRingElement RelationGenerator::materialize(Mod4 c) const {
  GroupRingElement f(c, l.rank());
  f.accumulate(PicElement::identity(l.rank()), WittK::one(c));
  f.accumulate(l, wk_neg(WittK::rank_one(c, u)));
  f.accumulate(m, wk_neg(WittK::rank_one(c, v)));
  f.accumulate(pic_mul(l, m), WittK::rank_one(c, u * v));
  return f;
}

std::string RelationGenerator::to_string() const {
  return "<1> - <" + wittc::to_string(u) + ">" + bundle_name(l) + " - <" +
         wittc::to_string(v) + ">" + bundle_name(m) + " + <" +
         wittc::to_string(u * v) + ">" + bundle_name(pic_mul(l, m));
}

std::vector<RelationGenerator> relation_tuples(const Pic2Group& group) {
  const auto lines = group.enumerate();
  std::vector<RelationGenerator> out;
  out.reserve(4 * lines.size() * lines.size());
  for (const auto& l : lines) {
    for (const auto& m : lines) {
      for (SquareClass u : {SquareClass::One, SquareClass::NonSquare}) {
        for (SquareClass v : {SquareClass::One, SquareClass::NonSquare}) {
          out.push_back({u, v, l, m});
        }
      }
    }
  }
  return out;
}

std::vector<GroupRingElement> relation_generators(Mod4 c,
                                                  const Pic2Group& group) {
  std::vector<GroupRingElement> out;
  for (const auto& t : relation_tuples(group)) out.push_back(t.materialize(c));
  return out;
}

bool Ideal::contains(const GroupRingElement& f) const {
  if (f.context() != context_ || f.rank() != rank_) {
    throw WittError("element does not belong to this ideal's ring");
  }
  return member_[f.key()];
}

std::vector<GroupRingElement> Ideal::elements() const {
  std::vector<GroupRingElement> out;
  out.reserve(size_);
  for (std::uint32_t k = 0; k < member_.size(); ++k) {
    if (member_[k]) out.push_back(GroupRingElement::from_key(context_, rank_, k));
  }
  return out;
}

Ideal ideal_closure(const std::vector<GroupRingElement>& gens, Mod4 c,
                    const Pic2Group& group) {
  require_closure_rank(group.rank());
  const auto lines = group.enumerate();

  std::set<std::uint32_t> spanning;
  for (const auto& g : gens) {
    if (g.context() != c || g.rank() != group.rank()) {
      throw WittError("generator does not belong to the group ring");
    }
    for (const auto& l : lines) {
      for (SquareClass u : {SquareClass::One, SquareClass::NonSquare}) {
        const auto prod =
            gr_mul(g, GroupRingElement::monomial(WittK::rank_one(c, u), l));
        if (!prod.is_zero()) spanning.insert(prod.key());
      }
    }
  }
  std::vector<GroupRingElement> steps;
  for (auto k : spanning) {
    steps.push_back(GroupRingElement::from_key(c, group.rank(), k));
  }

  Ideal ideal;
  ideal.context_ = c;
  ideal.rank_ = group.rank();
  ideal.member_.assign(std::size_t{1} << (2 * group.cardinality()), false);

  std::deque<std::uint32_t> work{0};
  ideal.member_[0] = true;
  ideal.size_ = 1;
  while (!work.empty()) {
    const auto x = GroupRingElement::from_key(c, group.rank(), work.front());
    work.pop_front();
    for (const auto& h : steps) {
      const std::uint32_t k = gr_add(x, h).key();
      if (!ideal.member_[k]) {
        ideal.member_[k] = true;
        ++ideal.size_;
        work.push_back(k);
      }
    }
  }
  return ideal;
}

std::vector<GroupRingElement> enumerate_ring(Mod4 c, const Pic2Group& group) {
  require_closure_rank(group.rank());
  const std::uint32_t count = std::uint32_t{1} << (2 * group.cardinality());
  std::vector<GroupRingElement> out;
  out.reserve(count);
  for (std::uint32_t k = 0; k < count; ++k) {
    out.push_back(GroupRingElement::from_key(c, group.rank(), k));
  }
  return out;
}

std::vector<Letter> to_word(const GroupRingElement& f) {
  std::vector<Letter> word;
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    const PicElement l(f.rank(), i);
    switch (f.coeff(i).index()) {
      case 0:
        break;
      case 1:
        word.push_back({SquareClass::One, l});
        break;
      case 2:
        word.push_back({SquareClass::NonSquare, l});
        break;
      default:
        word.push_back({SquareClass::One, l});
        word.push_back({f.context() == Mod4::One ? SquareClass::NonSquare
                                                 : SquareClass::One,
                        l});
        break;
    }
  }
  return word;
}

GroupRingElement from_word(std::span<const Letter> word, Mod4 c,
                           unsigned rank) {
  GroupRingElement f(c, rank);
  for (const auto& letter : word) {
    f.accumulate(letter.line, WittK::rank_one(c, letter.u));
  }
  return f;
}

WittClass normal_form(const GroupRingElement& f) {
  const auto word = to_word(f);
  return reduce_word(word, f.context(), f.rank());
}

bool IsomorphismReport::passed() const {
  return generators_vanish && membership_matches.value_or(true) &&
         ring_map.value_or(true) && surjective &&
         kernel_is_ideal.value_or(true) &&
         quotient_size == expected_quotient_size &&
         ring_size == quotient_size * ideal_size;
}

IsomorphismReport verify_isomorphism(Mod4 c, const Pic2Group& group) {
  require_closure_rank(group.rank());
  IsomorphismReport rep;
  rep.context = c;
  rep.rank = group.rank();
  constexpr std::size_t kMaxCounterexamples = 5;
  auto note = [&](std::string s) {
    if (rep.counterexamples.size() < kMaxCounterexamples) {
      rep.counterexamples.push_back(std::move(s));
    }
  };

  const WittClass zero = WittClass::zero(c, group.rank());
  rep.generators_vanish = true;
  for (const auto& t : relation_tuples(group)) {
    const WittClass nf = normal_form(t.materialize(c));
    if (!(nf == zero)) {
      rep.generators_vanish = false;
      note("generator " + t.to_string() + " has normal form " + nf.to_string());
    }
  }

  const Ideal ideal = ideal_closure(relation_generators(c, group), c, group);
  const auto ring = enumerate_ring(c, group);
  rep.ring_size = ring.size();
  rep.ideal_size = ideal.size();
  rep.quotient_size = rep.ring_size % rep.ideal_size == 0
                          ? rep.ring_size / rep.ideal_size
                          : 0;
  rep.expected_quotient_size = 4 * group.cardinality();

  std::vector<WittClass> nf;
  nf.reserve(ring.size());
  for (const auto& f : ring) nf.push_back(normal_form(f));

  {
    const auto classes = enumerate_classes(c, group);
    std::set<std::string> hit;
    for (const auto& x : nf) hit.insert(x.to_string());
    rep.surjective = hit.size() == classes.size();
    for (const auto& cl : classes) {
      if (!hit.count(cl.to_string())) {
        rep.surjective = false;
        note("class " + cl.to_string() + " is not a normal form");
      }
    }
  }

  if (group.rank() <= 2) {
    bool membership = true;
    bool ring_map = true;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      for (std::size_t j = 0; j < ring.size(); ++j) {
        const bool in_ideal = ideal.contains(gr_sub(ring[i], ring[j]));
        const bool same_nf = nf[i] == nf[j];
        if (in_ideal != same_nf) {
          membership = false;
          note("f = " + ring[i].to_string() + ", g = " + ring[j].to_string() +
               ": f - g " + (in_ideal ? "in" : "not in") +
               " ideal but normal forms " + nf[i].to_string() + ", " +
               nf[j].to_string());
        }
        const WittClass sum = normal_form(gr_add(ring[i], ring[j]));
        const WittClass prod = normal_form(gr_mul(ring[i], ring[j]));
        if (!(sum == wc_add(nf[i], nf[j])) || !(prod == wc_mul(nf[i], nf[j]))) {
          ring_map = false;
          note("normal_form is not a ring map at f = " + ring[i].to_string() +
               ", g = " + ring[j].to_string());
        }
      }
    }
    rep.membership_matches = membership;
    rep.ring_map = ring_map;
  } else {
    std::uint64_t kernel = 0;
    bool inside = true;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (!(nf[i] == zero)) continue;
      ++kernel;
      if (!ideal.contains(ring[i])) {
        inside = false;
        note(ring[i].to_string() + " has normal form zero but is not in the ideal");
      }
    }
    rep.kernel_is_ideal = inside && kernel == ideal.size();
  }
  return rep;
}

}  // namespace wittc
