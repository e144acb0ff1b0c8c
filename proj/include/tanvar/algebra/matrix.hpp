/*
   Copyright 2026 The tanvar Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TANVAR_ALGEBRA_MATRIX_HPP
#define TANVAR_ALGEBRA_MATRIX_HPP

#include <optional>
#include <span>
#include <vector>

#include "tanvar/algebra/field.hpp"

namespace tanvar {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over an exact field. Elimination pivots on the
/// first nonzero entry, so every result is reproducible.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vector row(std::size_t r) const;
  void append_row(const Vector& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vector apply(std::span<const Scalar> v) const;

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  /// Basis of {x : A x = 0}.
  std::vector<Vector> kernel() const;
  /// Some x with A x = b, if one exists.
  std::optional<Vector> solve(std::span<const Scalar> b) const;
  /// Inverse of a square matrix; nullopt when singular.
  std::optional<Matrix> inverse() const;
  bool is_zero() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Row indices of `rows` forming a maximal independent subset, scanning in
/// order.
std::vector<std::size_t> independent_rows(const Field& field, const std::vector<Vector>& rows,
                                          std::size_t cols);

/// Rows of standard basis vectors that complete independent `rows` to a basis
/// of the ambient space (first-fit, deterministic).
std::vector<Vector> complete_to_basis(const Field& field, const std::vector<Vector>& rows,
                                      std::size_t cols);

std::size_t rank_of(const Field& field, const std::vector<Vector>& rows, std::size_t cols);

}  // namespace tanvar

#endif  // TANVAR_ALGEBRA_MATRIX_HPP
