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

#ifndef WITTC_PICARD2_HPP_
#define WITTC_PICARD2_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace wittc {

inline constexpr unsigned kMaxPicRank = 31;
inline constexpr unsigned kDefaultEnumerationRank = 20;

/// An element of the 2-torsion Picard group, i.e. of (Z/2)^r.
///
/// `index` packs the bit string with its first character as the most
/// significant bit, so ascending index is lexicographic bit order. The
/// all-zero element is the structure sheaf.
class PicElement {
 public:
  PicElement() = default;
  PicElement(unsigned rank, std::uint32_t index);

  static PicElement identity(unsigned rank) { return PicElement(rank, 0); }
  /// Parses "101"; the empty string is the identity of rank 0.
  static PicElement parse(const std::string& bits);

  unsigned rank() const { return rank_; }
  std::uint32_t index() const { return index_; }
  bool is_identity() const { return index_ == 0; }

  std::string to_string() const;

  friend bool operator==(const PicElement&, const PicElement&) = default;

 private:
  unsigned rank_ = 0;
  std::uint32_t index_ = 0;
};

PicElement pic_mul(const PicElement& a, const PicElement& b);

/// The abstract group (Z/2)^r standing in for the 2-torsion Picard group.
/// The curve is assumed to have a k-rational point; nothing here checks it.
class Pic2Group {
 public:
  explicit Pic2Group(unsigned rank);

  unsigned rank() const { return rank_; }
  std::uint64_t cardinality() const { return std::uint64_t{1} << rank_; }
  PicElement identity() const { return PicElement::identity(rank_); }

  /// All 2^r elements, identity first, lexicographic bit order.
  std::vector<PicElement> enumerate(
      unsigned max_rank = kDefaultEnumerationRank) const;

 private:
  unsigned rank_;
};

}  // namespace wittc

#endif  // WITTC_PICARD2_HPP_
