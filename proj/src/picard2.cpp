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

#include "wittc/picard2.hpp"

#include "wittc/finite_field.hpp"

namespace wittc {

PicElement::PicElement(unsigned rank, std::uint32_t index)
    : rank_(rank), index_(index) {
  if (rank > kMaxPicRank) {
    throw WittError("Picard rank " + std::to_string(rank) + " exceeds " +
                    std::to_string(kMaxPicRank));
  }
  if (rank < 32 && (index >> rank) != 0) {
    throw WittError("bit pattern does not fit in rank " + std::to_string(rank));
  }
}

PicElement PicElement::parse(const std::string& bits) {
  if (bits.size() > kMaxPicRank) {
    throw WittError("bit string '" + bits + "' is too long");
  }
  std::uint32_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw WittError("malformed Picard element '" + bits +
                      "', expected a string of 0 and 1");
    }
    index = (index << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return PicElement(static_cast<unsigned>(bits.size()), index);
}

std::string PicElement::to_string() const {
  std::string out(rank_, '0');
  for (unsigned i = 0; i < rank_; ++i) {
    if ((index_ >> (rank_ - 1 - i)) & 1U) out[i] = '1';
  }
  return out;
}

PicElement pic_mul(const PicElement& a, const PicElement& b) {
  if (a.rank() != b.rank()) {
    throw WittError("Picard rank mismatch: " + std::to_string(a.rank()) +
                    " vs " + std::to_string(b.rank()));
  }
  return PicElement(a.rank(), a.index() ^ b.index());
}

Pic2Group::Pic2Group(unsigned rank) : rank_(rank) {
  if (rank > kMaxPicRank) {
    throw WittError("Picard rank " + std::to_string(rank) + " exceeds " +
                    std::to_string(kMaxPicRank));
  }
}

std::vector<PicElement> Pic2Group::enumerate(unsigned max_rank) const {
  if (rank_ > max_rank) {
    throw WittError("cannot enumerate 2^" + std::to_string(rank_) +
                    " Picard elements (bound is rank " +
                    std::to_string(max_rank) + ")");
  }
  std::vector<PicElement> out;
  out.reserve(cardinality());
  for (std::uint32_t i = 0; i < cardinality(); ++i) out.emplace_back(rank_, i);
  return out;
}

}  // namespace wittc
