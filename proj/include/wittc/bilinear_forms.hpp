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

#ifndef WITTC_BILINEAR_FORMS_HPP_
#define WITTC_BILINEAR_FORMS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wittc/finite_field.hpp"

namespace wittc {

using Vector = std::vector<FieldElement>;
using Matrix = std::vector<Vector>;

inline constexpr std::uint64_t kDefaultMaxSearch = 10'000'000;

/// A symmetric bilinear space over F_q given by its Gram matrix.
class GramForm {
 public:
  /// Throws if the matrix is not square, not symmetric, or mixes fields.
  GramForm(FiniteField field, Matrix matrix);

  const FiniteField& field() const { return field_; }
  const Matrix& matrix() const { return matrix_; }
  std::size_t dimension() const { return matrix_.size(); }

 private:
  FiniteField field_;
  Matrix matrix_;
};

/// The diagonal form <a_1, ..., a_n>, all a_i nonzero. Rank 0 is allowed
/// and represents the zero Witt class.
class DiagonalForm {
 public:
  explicit DiagonalForm(FiniteField field, Vector entries = {});

  /// Convenience for prime fields and tests: entries reduced mod p.
  static DiagonalForm of(const FiniteField& field,
                         std::initializer_list<std::int64_t> entries);

  const FiniteField& field() const { return field_; }
  const Vector& entries() const { return entries_; }
  std::size_t rank() const { return entries_.size(); }

  /// f(v, v) = sum a_i v_i^2.
  FieldElement evaluate(const Vector& v) const;
  /// f(v, w) = sum a_i v_i w_i.
  FieldElement pair(const Vector& v, const Vector& w) const;

  GramForm to_gram() const;
  std::string to_string() const;

  friend bool operator==(const DiagonalForm& a, const DiagonalForm& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  FiniteField field_;
  Vector entries_;
};

/// rank mod 2 together with the signed discriminant: a complete set of
/// Witt-class invariants over a finite field.
struct WittInvariants {
  int rank_parity = 0;
  SquareClass signed_disc = SquareClass::One;

  friend bool operator==(const WittInvariants&,
                         const WittInvariants&) = default;
};

struct Diagonalization {
  DiagonalForm form;
  /// Columns are the new basis: basis^T * gram * basis = diag(form).
  Matrix basis;
};

/// Symmetric Gaussian elimination. Pivot rule: the first remaining index
/// with nonzero diagonal entry is swapped into place; when the remaining
/// diagonal is all zero, the first nonzero off-diagonal (i, j) in row-major
/// order is used and column/row j is added to i.
Diagonalization diagonalize_with_basis(const GramForm& g);
DiagonalForm diagonalize(const GramForm& g);

SquareClass determinant_class(const DiagonalForm& f);
SquareClass signed_discriminant(const DiagonalForm& f);
WittInvariants witt_invariants(const DiagonalForm& f);

DiagonalForm orthogonal_sum(const DiagonalForm& f, const DiagonalForm& g);
DiagonalForm tensor_product(const DiagonalForm& f, const DiagonalForm& g);
/// <-a_1, ..., -a_n>, the additive inverse in the Witt ring.
DiagonalForm negate(const DiagonalForm& f);
/// <c a_1, ..., c a_n>.
DiagonalForm scale(const DiagonalForm& f, const FieldElement& c);

/// Exhaustive scan over projective representatives. Vectors are
/// normalised so their last nonzero coordinate is 1 and visited by
/// increasing position of that coordinate, then ascending lexicographic
/// order of the preceding coordinates. The first hit is returned.
///
/// Throws WittError if more than `max_search` candidates would be visited
/// before the scan resolves.
std::optional<Vector> find_isotropic_vector(
    const DiagonalForm& f, std::uint64_t max_search = kDefaultMaxSearch);

struct WittDecomposition {
  std::size_t hyperbolic_count = 0;
  DiagonalForm anisotropic;
};

/// Splits off hyperbolic planes until the remainder is anisotropic.
WittDecomposition witt_decompose(const DiagonalForm& f,
                                 std::uint64_t max_search = kDefaultMaxSearch);

/// f and g define the same Witt class: f ⊥ -g is hyperbolic.
bool witt_equal(const DiagonalForm& f, const DiagonalForm& g,
                std::uint64_t max_search = kDefaultMaxSearch);

/// Isometry over a finite field: equal rank and equal determinant class.
bool isometric_by_invariants(const DiagonalForm& f, const DiagonalForm& g);

/// Basis of {x : rows * x = 0}.
std::vector<Vector> null_space(const FiniteField& field, const Matrix& rows,
                               std::size_t n);

}  // namespace wittc

#endif  // WITTC_BILINEAR_FORMS_HPP_
