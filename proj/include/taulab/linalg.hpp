// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Dense exact linear algebra over prime fields.
//
// Every Hom, Ext, kernel and radical computation in the library bottoms out
// here. Matrices are small (tens of rows), so everything is dense and
// row-major; vectors are plain std::vector<Scalar>.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "taulab/field.hpp"

namespace taulab {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  Matrix(Field field, std::size_t rows, std::size_t cols, Vector entries)
      : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
      throw Error("matrix entry count does not match its shape");
    }
  }

  static Matrix identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  /// One column per vector.
  static Matrix from_columns(Field field, std::size_t rows,
                             std::span<const Vector> columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c].size() != rows) {
        throw Error("column length mismatch");
      }
      for (std::size_t r = 0; r < rows; ++r) {
        m(r, c) = columns[c][r];
      }
    }
    return m;
  }

  static Matrix from_rows(Field field, std::size_t cols,
                          std::span<const Vector> rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) {
        throw Error("row length mismatch");
      }
      std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
  }

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool empty() const noexcept { return data_.empty(); }

  Scalar& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  Scalar operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  [[nodiscard]] const Vector& entries() const noexcept { return data_; }

  [[nodiscard]] Vector row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }
  [[nodiscard]] Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      v[r] = (*this)(r, c);
    }
    return v;
  }

  [[nodiscard]] bool is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(),
                       [](Scalar s) { return s == 0; });
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  [[nodiscard]] Matrix scaled(Scalar s) const {
    Matrix m = *this;
    for (auto& x : m.data_) {
      x = field_.mul(x, s);
    }
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      data_[i] = field_.add(data_[i], o.data_[i]);
    }
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) {
      data_[i] = field_.sub(data_[i], o.data_[i]);
    }
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error("matrix product shape mismatch");
    }
    const Field& f = a.field_;
    const std::uint64_t p = f.characteristic();
    Matrix out(f, a.rows_, b.cols_);
    std::vector<std::uint64_t> acc(b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const std::uint64_t aik = a(i, k);
        if (aik == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols_; ++j) {
          acc[j] = (acc[j] + aik * b(k, j)) % p;
        }
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out(i, j) = static_cast<Scalar>(acc[j]);
      }
    }
    return out;
  }

  [[nodiscard]] Vector apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) {
      throw Error("matrix-vector shape mismatch");
    }
    Vector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < cols_; ++c) {
        acc += static_cast<std::uint64_t>((*this)(r, c)) * v[c];
        acc %= field_.characteristic();
      }
      out[r] = static_cast<Scalar>(acc);
    }
    return out;
  }

  /// [this | o]
  [[nodiscard]] Matrix hstack(const Matrix& o) const {
    if (rows_ != o.rows_) {
      throw Error("hstack row mismatch");
    }
    Matrix m(field_, rows_, cols_ + o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        m(r, c) = (*this)(r, c);
      }
      for (std::size_t c = 0; c < o.cols_; ++c) {
        m(r, cols_ + c) = o(r, c);
      }
    }
    return m;
  }

  /// [this ; o]
  [[nodiscard]] Matrix vstack(const Matrix& o) const {
    if (cols_ != o.cols_) {
      throw Error("vstack column mismatch");
    }
    Matrix m(field_, rows_ + o.rows_, cols_);
    std::copy(data_.begin(), data_.end(), m.data_.begin());
    std::copy(o.data_.begin(), o.data_.end(),
              m.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return m;
  }

  /// Rows [r0, r0+nr) and columns [c0, c0+nc).
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                             std::size_t nc) const {
    Matrix m(field_, nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
      for (std::size_t c = 0; c < nc; ++c) {
        m(r, c) = (*this)(r0 + r, c0 + c);
      }
    }
    return m;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) {
        (*this)(r0 + r, c0 + c) = b(r, c);
      }
    }
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r == 0 ? "[" : " [");
      for (std::size_t c = 0; c < m.cols_; ++c) {
        os << (c == 0 ? "" : ",") << m(r, c);
      }
      os << ']';
    }
    return os << ']';
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error("matrix shape mismatch");
    }
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Vector data_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline RrefResult rref(Matrix m) {
  const Field f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) {
      ++sel;
    }
    if (sel == m.rows()) {
      continue;
    }
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(sel, c), m(row, c));
      }
    }
    const Scalar inv = f.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) {
      m(row, c) = f.mul(m(row, c), inv);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Scalar factor = m(r, col);
      if (r == row || factor == 0) {
        continue;
      }
      for (std::size_t c = col; c < m.cols(); ++c) {
        m(r, c) = f.sub(m(r, c), f.mul(factor, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), row, std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// A linear subspace of F_p^n held by its reduced row-echelon basis, so equal
/// subspaces compare equal structurally.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient_dim)
      : basis_(field, 0, ambient_dim) {}

  /// Span of the rows of `generators`.
  explicit Subspace(const Matrix& generators) : basis_(generators.field(), 0, 0) {
    auto r = rref(generators);
    basis_ = r.reduced.block(0, 0, r.rank, generators.cols());
    pivots_ = std::move(r.pivots);
  }

  static Subspace full(Field field, std::size_t n) {
    return Subspace(Matrix::identity(field, n));
  }

  static Subspace span(Field field, std::size_t ambient_dim,
                       std::span<const Vector> vectors) {
    return Subspace(Matrix::from_rows(field, ambient_dim, vectors));
  }

  [[nodiscard]] const Field& field() const noexcept { return basis_.field(); }
  [[nodiscard]] std::size_t ambient_dim() const noexcept {
    return basis_.cols();
  }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.rows(); }
  [[nodiscard]] bool is_zero() const noexcept { return dim() == 0; }

  /// Basis vectors as rows, in reduced echelon form.
  [[nodiscard]] const Matrix& basis() const noexcept { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept {
    return pivots_;
  }
  [[nodiscard]] std::vector<Vector> vectors() const {
    std::vector<Vector> out;
    out.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r) {
      out.push_back(basis_.row(r));
    }
    return out;
  }

  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  [[nodiscard]] Vector coordinates(std::span<const Scalar> v) const {
    Vector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      c[i] = v[pivots_[i]];
    }
    return c;
  }

  /// v minus its echelon projection; zero exactly when v lies in the span.
  [[nodiscard]] Vector reduce(std::span<const Scalar> v) const {
    check_ambient(v.size());
    const Field& f = field();
    Vector w(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      const Scalar factor = w[pivots_[i]];
      if (factor == 0) {
        continue;
      }
      for (std::size_t c = 0; c < ambient_dim(); ++c) {
        w[c] = f.sub(w[c], f.mul(factor, basis_(i, c)));
      }
    }
    return w;
  }

  [[nodiscard]] bool contains(std::span<const Scalar> v) const {
    auto w = reduce(v);
    return std::all_of(w.begin(), w.end(), [](Scalar s) { return s == 0; });
  }

  [[nodiscard]] bool contains(const Subspace& o) const {
    check_ambient(o.ambient_dim());
    for (std::size_t r = 0; r < o.dim(); ++r) {
      if (!contains(o.basis_.row(r))) {
        return false;
      }
    }
    return true;
  }

  [[nodiscard]] Subspace sum(const Subspace& o) const {
    check_ambient(o.ambient_dim());
    return Subspace(basis_.vstack(o.basis_));
  }

  [[nodiscard]] Subspace intersection(const Subspace& o) const {
    check_ambient(o.ambient_dim());
    const Field& f = field();
    // (a, b) with a*U = b*V; the left kernel of [U; V].
    const Matrix stacked = basis_.vstack(o.basis_);
    const Subspace relations = left_kernel(stacked);
    Matrix gens(f, relations.dim(), ambient_dim());
    for (std::size_t k = 0; k < relations.dim(); ++k) {
      for (std::size_t i = 0; i < dim(); ++i) {
        const Scalar a = relations.basis()(k, i);
        if (a == 0) {
          continue;
        }
        for (std::size_t c = 0; c < ambient_dim(); ++c) {
          gens(k, c) = f.add(gens(k, c), f.mul(a, basis_(i, c)));
        }
      }
    }
    return Subspace(gens);
  }

  /// Coordinates of the non-pivot positions: a basis of a fixed complement,
  /// used to realize quotient spaces.
  [[nodiscard]] std::vector<std::size_t> free_positions() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t c = 0; c < ambient_dim(); ++c) {
      if (k < pivots_.size() && pivots_[k] == c) {
        ++k;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }

  static Subspace left_kernel(const Matrix& m);

 private:
  void check_ambient(std::size_t n) const {
    if (n != ambient_dim()) {
      throw Error("subspace ambient dimension mismatch");
    }
  }

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0} as a subspace of F_p^{cols(m)}.
inline Subspace kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) {
    is_pivot[c] = true;
  }
  std::vector<Vector> vectors;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) {
      continue;
    }
    Vector v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      v[r.pivots[i]] = f.neg(r.reduced(i, free));
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), vectors);
}

inline Subspace Subspace::left_kernel(const Matrix& m) {
  return kernel_basis(m.transpose());
}

/// Column space of m as a subspace of F_p^{rows(m)}.
inline Subspace column_space(const Matrix& m) {
  return Subspace(m.transpose());
}

/// Some x with a x = b, or nothing when b is outside the column space.
inline std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b) {
  if (a.rows() != b.size()) {
    throw Error("solve: right-hand side length does not match matrix rows");
  }
  const Field& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      aug(r, c) = a(r, c);
    }
    aug(r, a.cols()) = b[r];
  }
  const auto red = rref(std::move(aug));
  Vector x(a.cols(), 0);
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivots[i] == a.cols()) {
      return std::nullopt;
    }
    x[red.pivots[i]] = red.reduced(i, a.cols());
  }
  return x;
}

/// X with a X = b, column by column; nothing if any column is unsolvable.
inline std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw Error("solve_matrix: row mismatch");
  }
  const auto red = rref(a.hstack(b));
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < red.rank; ++i) {
    if (red.pivots[i] >= a.cols()) {
      return std::nullopt;
    }
    for (std::size_t c = 0; c < b.cols(); ++c) {
      x(red.pivots[i], c) = red.reduced(i, a.cols() + c);
    }
  }
  return x;
}

inline bool is_zero_vector(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

}  // namespace taulab
