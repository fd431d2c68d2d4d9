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

#include "wittc/bilinear_forms.hpp"

#include <sstream>
#include <utility>

namespace wittc {

namespace {

void require_same(const FiniteField& a, const FiniteField& b) {
  if (!(a == b)) {
    throw WittError("mixed fields: " + a.name() + " and " + b.name());
  }
}

Matrix identity(const FiniteField& field, std::size_t n) {
  Matrix m(n, Vector(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = field.one();
  return m;
}

// Congruence bookkeeping for symmetric elimination: every step acts on A
// by the same row and column operation and on the basis by the column
// operation only.
struct Congruence {
  Matrix a;
  Matrix t;

  void swap_index(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : t) std::swap(row[i], row[j]);
  }

  // column j += c * column i, then row j += c * row i
  void add_scaled(std::size_t j, std::size_t i, const FieldElement& c) {
    for (auto& row : a) row[j] += c * row[i];
    for (std::size_t k = 0; k < a.size(); ++k) a[j][k] += c * a[i][k];
    for (auto& row : t) row[j] += c * row[i];
  }
};

}  // namespace

GramForm::GramForm(FiniteField field, Matrix matrix)
    : field_(std::move(field)), matrix_(std::move(matrix)) {
  const std::size_t n = matrix_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix_[i].size() != n) {
      throw WittError("Gram matrix is not square: row " + std::to_string(i) +
                      " has " + std::to_string(matrix_[i].size()) +
                      " entries, expected " + std::to_string(n));
    }
    for (const auto& x : matrix_[i]) require_same(field_, x.field());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(matrix_[i][j] == matrix_[j][i])) {
        throw WittError("Gram matrix is not symmetric at (" +
                        std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

DiagonalForm::DiagonalForm(FiniteField field, Vector entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  for (const auto& a : entries_) {
    require_same(field_, a.field());
    if (a.is_zero()) throw WittError("diagonal form has a zero entry");
  }
}

DiagonalForm DiagonalForm::of(const FiniteField& field,
                              std::initializer_list<std::int64_t> entries) {
  Vector v;
  for (auto a : entries) v.push_back(field.from_int(a));
  return DiagonalForm(field, std::move(v));
}

FieldElement DiagonalForm::evaluate(const Vector& v) const {
  return pair(v, v);
}

FieldElement DiagonalForm::pair(const Vector& v, const Vector& w) const {
  if (v.size() != rank() || w.size() != rank()) {
    throw WittError("vector length does not match form rank");
  }
  FieldElement acc = field_.zero();
  for (std::size_t i = 0; i < rank(); ++i) acc += entries_[i] * v[i] * w[i];
  return acc;
}

GramForm DiagonalForm::to_gram() const {
  Matrix m(rank(), Vector(rank(), field_.zero()));
  for (std::size_t i = 0; i < rank(); ++i) m[i][i] = entries_[i];
  return GramForm(field_, std::move(m));
}

std::string DiagonalForm::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i].to_string();
  }
  os << '>';
  return os.str();
}

Diagonalization diagonalize_with_basis(const GramForm& g) {
  const FiniteField& field = g.field();
  const std::size_t n = g.dimension();
  Congruence c{g.matrix(), identity(field, n)};

  for (std::size_t i = 0; i < n; ++i) {
    std::size_t pivot = n;
    for (std::size_t j = i; j < n; ++j) {
      if (!c.a[j][j].is_zero()) {
        pivot = j;
        break;
      }
    }
    if (pivot < n) {
      c.swap_index(i, pivot);
    } else {
      std::size_t row = n;
      std::size_t col = n;
      for (std::size_t k = i; k < n && row == n; ++k) {
        for (std::size_t l = k + 1; l < n; ++l) {
          if (!c.a[k][l].is_zero()) {
            row = k;
            col = l;
            break;
          }
        }
      }
      if (row == n) {
        throw WittError("degenerate Gram matrix: radical has dimension " +
                        std::to_string(n - i));
      }
      c.swap_index(i, row);
      // a[i][i] becomes 2 a[i][col] != 0 since char != 2
      c.add_scaled(i, col, field.one());
    }
    const FieldElement inv = c.a[i][i].inverse();
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c.a[i][j].is_zero()) continue;
      c.add_scaled(j, i, -(c.a[i][j] * inv));
    }
  }

  Vector diag;
  diag.reserve(n);
  for (std::size_t i = 0; i < n; ++i) diag.push_back(c.a[i][i]);
  return {DiagonalForm(field, std::move(diag)), std::move(c.t)};
}

DiagonalForm diagonalize(const GramForm& g) {
  return diagonalize_with_basis(g).form;
}

SquareClass determinant_class(const DiagonalForm& f) {
  SquareClass c = SquareClass::One;
  for (const auto& a : f.entries()) c = c * a.square_class();
  return c;
}

SquareClass signed_discriminant(const DiagonalForm& f) {
  const std::size_t n = f.rank();
  SquareClass c = determinant_class(f);
  if ((n * (n + 1) / 2) % 2 == 1) {
    c = c * (-f.field().one()).square_class();
  }
  return c;
}

WittInvariants witt_invariants(const DiagonalForm& f) {
  return {static_cast<int>(f.rank() % 2), signed_discriminant(f)};
}

DiagonalForm orthogonal_sum(const DiagonalForm& f, const DiagonalForm& g) {
  require_same(f.field(), g.field());
  Vector v = f.entries();
  v.insert(v.end(), g.entries().begin(), g.entries().end());
  return DiagonalForm(f.field(), std::move(v));
}

DiagonalForm tensor_product(const DiagonalForm& f, const DiagonalForm& g) {
  require_same(f.field(), g.field());
  Vector v;
  v.reserve(f.rank() * g.rank());
  for (const auto& a : f.entries()) {
    for (const auto& b : g.entries()) v.push_back(a * b);
  }
  return DiagonalForm(f.field(), std::move(v));
}

DiagonalForm negate(const DiagonalForm& f) {
  return scale(f, -f.field().one());
}

DiagonalForm scale(const DiagonalForm& f, const FieldElement& c) {
  Vector v;
  v.reserve(f.rank());
  for (const auto& a : f.entries()) v.push_back(a * c);
  return DiagonalForm(f.field(), std::move(v));
}

std::optional<Vector> find_isotropic_vector(const DiagonalForm& f,
                                            std::uint64_t max_search) {
  const FiniteField& field = f.field();
  const std::size_t n = f.rank();
  const std::uint64_t q = field.order();
  const auto& a = f.entries();
  std::uint64_t visited = 0;

  for (std::size_t last = 0; last < n; ++last) {
    // Vectors (x_0, ..., x_{last-1}, 1, 0, ..., 0); x encoded base q.
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < last; ++i) count *= q;
    std::vector<std::uint32_t> digits(last, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (++visited > max_search) {
        throw WittError("isotropic search exceeded " +
                        std::to_string(max_search) + " candidates");
      }
      // digits[0] is the most significant so the scan is lexicographic
      std::uint64_t rest = idx;
      for (std::size_t i = last; i-- > 0;) {
        digits[i] = static_cast<std::uint32_t>(rest % q);
        rest /= q;
      }
      FieldElement value = a[last];
      for (std::size_t i = 0; i < last; ++i) {
        if (digits[i] == 0) continue;
        const FieldElement x = field.at(digits[i]);
        value += a[i] * x * x;
      }
      if (value.is_zero()) {
        Vector v(n, field.zero());
        for (std::size_t i = 0; i < last; ++i) v[i] = field.at(digits[i]);
        v[last] = field.one();
        return v;
      }
    }
  }
  return std::nullopt;
}

std::vector<Vector> null_space(const FiniteField& field, const Matrix& rows,
                               std::size_t n) {
  Matrix m = rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m.size(); ++col) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const FieldElement inv = m[r][col].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (k == r || m[k][col].is_zero()) continue;
      const FieldElement factor = m[k][col];
      for (std::size_t j = 0; j < n; ++j) m[k][j] -= factor * m[r][j];
    }
    pivot_cols.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n, field.zero());
    v[free] = field.one();
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      v[pivot_cols[k]] = -m[k][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

WittDecomposition witt_decompose(const DiagonalForm& f,
                                 std::uint64_t max_search) {
  const FiniteField& field = f.field();
  WittDecomposition out{0, f};
  while (auto v = find_isotropic_vector(out.anisotropic, max_search)) {
    const DiagonalForm& cur = out.anisotropic;
    const std::size_t n = cur.rank();
    const auto& a = cur.entries();

    // w with B(v, w) = 1; span(v, w) is a hyperbolic plane.
    std::size_t i = 0;
    while ((a[i] * (*v)[i]).is_zero()) ++i;
    Vector w(n, field.zero());
    w[i] = (a[i] * (*v)[i]).inverse();

    Matrix functionals(2, Vector(n, field.zero()));
    for (std::size_t j = 0; j < n; ++j) {
      functionals[0][j] = a[j] * (*v)[j];
      functionals[1][j] = a[j] * w[j];
    }
    const std::vector<Vector> complement = null_space(field, functionals, n);

    Matrix gram(complement.size(), Vector(complement.size(), field.zero()));
    for (std::size_t r = 0; r < complement.size(); ++r) {
      for (std::size_t c = 0; c < complement.size(); ++c) {
        gram[r][c] = cur.pair(complement[r], complement[c]);
      }
    }
    out.anisotropic = diagonalize(GramForm(field, std::move(gram)));
    ++out.hyperbolic_count;
  }
  return out;
}

bool witt_equal(const DiagonalForm& f, const DiagonalForm& g,
                std::uint64_t max_search) {
  require_same(f.field(), g.field());
  return witt_decompose(orthogonal_sum(f, negate(g)), max_search)
             .anisotropic.rank() == 0;
}

bool isometric_by_invariants(const DiagonalForm& f, const DiagonalForm& g) {
  require_same(f.field(), g.field());
  return f.rank() == g.rank() && determinant_class(f) == determinant_class(g);
}

}  // namespace wittc
