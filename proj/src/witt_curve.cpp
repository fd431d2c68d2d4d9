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

#include "wittc/witt_curve.hpp"

#include <algorithm>
#include <iterator>

namespace wittc {

namespace {

void require_compatible(const WittClass& a, const WittClass& b) {
  if (a.context() != b.context()) {
    throw WittError("W(C) classes from different contexts (q = 1 and q = 3 mod 4)");
  }
  if (a.rank() != b.rank()) {
    throw WittError("W(C) classes over Picard groups of different rank");
  }
}

std::string bundle_name(const PicElement& l) {
  return l.is_identity() ? "O" : l.to_string();
}

}  // namespace

std::string WittClass::to_string() const {
  const std::string letter = bundle_name(line_) + "_" + wittc::to_string(u_);
  return is_odd() ? "<" + letter + ">" : "<1,-" + letter + ">";
}

// Addition table (sigma = class of -1):
//   odd(u,L)  + odd(v,M)   = even(sigma u v, LM)
//   odd(v,M)  + even(w,N)  = odd(v w, MN)
//   even(w,N) + even(w',N') = even(w w', N N')
WittClass wc_add(const WittClass& a, const WittClass& b) {
  require_compatible(a, b);
  const Mod4 c = a.context();
  const SquareClass uv = a.u() * b.u();
  const PicElement lm = pic_mul(a.line(), b.line());
  if (a.is_odd() && b.is_odd()) {
    return WittClass::even(c, minus_one_class(c) * uv, lm);
  }
  if (a.is_odd() || b.is_odd()) return WittClass::odd(c, uv, lm);
  return WittClass::even(c, uv, lm);
}

// Multiplication table:
//   odd(u,L)  * odd(v,M)  = odd(u v, LM)
//   odd(v,M)  * even(w,N) = even(w,N)
//   even      * even      = 0
WittClass wc_mul(const WittClass& a, const WittClass& b) {
  require_compatible(a, b);
  if (a.is_odd() && b.is_odd()) {
    return WittClass::odd(a.context(), a.u() * b.u(),
                          pic_mul(a.line(), b.line()));
  }
  if (a.is_odd()) return b;
  if (b.is_odd()) return a;
  return WittClass::zero(a.context(), a.rank());
}

WittClass wc_neg(const WittClass& a) {
  if (!a.is_odd()) return a;
  return WittClass::odd(a.context(), minus_one_class(a.context()) * a.u(),
                        a.line());
}

std::pair<SquareClass, PicElement> signed_discriminant_class(
    const WittClass& a) {
  if (a.is_odd()) return {minus_one_class(a.context()) * a.u(), a.line()};
  return {a.u(), a.line()};
}

std::vector<WittClass> enumerate_classes(Mod4 c, const Pic2Group& group,
                                         unsigned max_rank) {
  const auto lines = group.enumerate(max_rank);
  std::vector<WittClass> out;
  out.reserve(4 * lines.size());
  for (Parity parity : {Parity::Odd, Parity::Even}) {
    for (const auto& l : lines) {
      for (SquareClass u : {SquareClass::One, SquareClass::NonSquare}) {
        out.emplace_back(parity, u, l, c);
      }
    }
  }
  return out;
}

WittClass reduce_word(std::span<const Letter> word, Mod4 c, unsigned rank) {
  WittClass acc = WittClass::zero(c, rank);
  for (const Letter& letter : word) {
    if (letter.line.rank() != rank) {
      throw WittError("word letter " + letter.line.to_string() +
                      " has Picard rank " + std::to_string(letter.line.rank()) +
                      ", expected " + std::to_string(rank));
    }
    acc = wc_add(acc, WittClass::odd(c, letter.u, letter.line));
  }
  return acc;
}

std::vector<Letter> parse_word(const std::string& text) {
  std::string s;
  std::copy_if(text.begin(), text.end(), std::back_inserter(s),
               [](char ch) { return ch != ' ' && ch != '\t'; });
  std::vector<Letter> out;
  if (s.empty()) return out;

  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t close = s.find(')', pos);
    if (s[pos] != '(' || close == std::string::npos) {
      throw WittError("malformed word '" + text + "', expected (u,L);(v,M);...");
    }
    const std::string body = s.substr(pos + 1, close - pos - 1);
    const std::size_t comma = body.find(',');
    if (comma == std::string::npos) {
      throw WittError("malformed letter '(" + body + ")', expected (u,L)");
    }
    const std::string u = body.substr(0, comma);
    Letter letter;
    if (u == "1") {
      letter.u = SquareClass::One;
    } else if (u == "s") {
      letter.u = SquareClass::NonSquare;
    } else {
      throw WittError("malformed square class '" + u + "', expected 1 or s");
    }
    const std::string bits = body.substr(comma + 1);
    letter.line = PicElement::parse(bits);
    out.push_back(letter);

    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != ';') {
        throw WittError("malformed word '" + text + "', letters separated by ';'");
      }
      ++pos;
    }
  }
  return out;
}

}  // namespace wittc
