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

#include "tanvar/algebra/matrix.hpp"

#include "tanvar/error.hpp"

namespace tanvar {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const Vector& v) {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  Matrix p(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (field_.is_zero(at(r, k))) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        p.at(r, c) = field_.add(p.at(r, c), field_.mul(at(r, k), o.at(k, c)));
      }
    }
  }
  return p;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
  Vector out(rows_, field_.zero());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!field_.is_zero(at(r, c)) && !field_.is_zero(v[c])) {
        out[r] = field_.add(out[r], field_.mul(at(r, c), v[c]));
      }
    }
  }
  return out;
}

std::vector<std::size_t> Matrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols_ && prow < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t r = prow; r < rows_; ++r) {
      if (!field_.is_zero(at(r, c))) {
        sel = r;
        break;
      }
    }
    if (sel == rows_) continue;
    if (sel != prow) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(at(sel, k), at(prow, k));
    }
    Scalar inv = field_.inv(at(prow, c));
    for (std::size_t k = c; k < cols_; ++k) at(prow, k) = field_.mul(at(prow, k), inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == prow || field_.is_zero(at(r, c))) continue;
      Scalar factor = at(r, c);
      for (std::size_t k = c; k < cols_; ++k) {
        if (!field_.is_zero(at(prow, k))) at(r, k) = field_.sub(at(r, k), field_.mul(factor, at(prow, k)));
      }
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix copy = *this;
  return copy.rref().size();
}

std::vector<Vector> Matrix::kernel() const {
  Matrix red = *this;
  std::vector<std::size_t> pivots = red.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    Vector v(cols_, field_.zero());
    v[free] = field_.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field_.neg(red.at(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> Matrix::solve(std::span<const Scalar> b) const {
  if (b.size() != rows_) throw Error(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  Vector x(cols_, field_.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, cols_);
  return x;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  Matrix aug(field_, rows_, 2 * cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_ + r) = field_.one();
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (pivots.size() < rows_ || pivots[rows_ - 1] >= cols_) return std::nullopt;
  Matrix inv(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
  }
  return inv;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!field_.is_zero(s)) return false;
  }
  return true;
}

std::vector<std::size_t> independent_rows(const Field& field, const std::vector<Vector>& rows,
                                          std::size_t cols) {
  std::vector<std::size_t> keep;
  Matrix acc(field, 0, cols);
  std::size_t rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Matrix trial = acc;
    trial.append_row(rows[i]);
    std::size_t r = trial.rank();
    if (r > rank) {
      acc = std::move(trial);
      rank = r;
      keep.push_back(i);
    }
  }
  return keep;
}

std::vector<Vector> complete_to_basis(const Field& field, const std::vector<Vector>& rows,
                                      std::size_t cols) {
  Matrix acc = Matrix::from_rows(field, rows, cols);
  std::size_t rank = acc.rank();
  std::vector<Vector> extra;
  for (std::size_t c = 0; c < cols && rank < cols; ++c) {
    Vector e(cols, field.zero());
    e[c] = field.one();
    Matrix trial = acc;
    trial.append_row(e);
    std::size_t r = trial.rank();
    if (r > rank) {
      acc = std::move(trial);
      rank = r;
      extra.push_back(std::move(e));
    }
  }
  return extra;
}

std::size_t rank_of(const Field& field, const std::vector<Vector>& rows, std::size_t cols) {
  return Matrix::from_rows(field, rows, cols).rank();
}

}  // namespace tanvar
