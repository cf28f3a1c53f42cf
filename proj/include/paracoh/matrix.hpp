#pragma once

#include <optional>
#include <vector>

#include "paracoh/errors.hpp"
#include "paracoh/field.hpp"

namespace paracoh {

/// Dense row-major matrix over an exact field. Vectors are columns: a matrix
/// of a linear map has the images of basis vectors as its columns.
template <Field F>
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size(), F::zero()) {}
  Matrix(int rows, int cols, std::vector<F> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != size()) throw Error("matrix entry count mismatch");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F::one();
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      if (static_cast<int>(rows[i].size()) != c) throw Error("ragged rows");
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_); }

  F& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const F& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<F> row(int i) const {
    std::vector<F> r(cols_);
    for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = (*this)(i, j);
    return r;
  }
  std::vector<F> col(int j) const {
    std::vector<F> c(rows_);
    for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const F& aik = (*this)(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) p(i, j) = p(i, j) + aik * o(k, j);
      }
    return p;
  }

  std::vector<F> apply(const std::vector<F>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw Error("matrix-vector shape mismatch");
    std::vector<F> y(static_cast<std::size_t>(rows_), F::zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero()) y[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] + (*this)(i, j) * x[static_cast<std::size_t>(j)];
    return y;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] + o.a_[i];
    return s;
  }
  Matrix operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix diff shape mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) s.a_[i] = a_[i] - o.a_[i];
    return s;
  }
  Matrix scaled(const F& s) const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const {
    for (const F& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

private:
  int rows_, cols_;
  std::vector<F> a_;
};

template <Field F>
struct RrefResult {
  Matrix<F> echelon;
  int rank = 0;
  std::vector<int> pivots;  // pivot column per nonzero row
};

/// Reduced row echelon form with positional pivoting: scan columns left to
/// right, take the first row (top to bottom) with a nonzero entry. No
/// magnitude comparisons, so the elimination order is identical over Q and
/// Q(t) and the result is deterministic.
template <Field F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> out;
  int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r) {
      for (int j = 0; j < cols; ++j) std::swap(m(r, j), m(sel, j));
    }
    F inv = F::one() / m(r, c);
    for (int j = c; j < cols; ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F factor = m(i, c);
      for (int j = c; j < cols; ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.echelon = std::move(m);
  return out;
}

template <Field F>
int rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Null space of m (solutions of m x = 0), one generator per free column.
/// Generators come out in increasing free-column order with the standard
/// back-substituted form.
template <Field F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
  RrefResult<F> r = rref(m);
  int cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<std::vector<F>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<F> v(static_cast<std::size_t>(cols), F::zero());
    v[static_cast<std::size_t>(free)] = F::one();
    for (int i = 0; i < r.rank; ++i) {
      int pc = r.pivots[static_cast<std::size_t>(i)];
      v[static_cast<std::size_t>(pc)] = -r.echelon(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = b, if any.
template <Field F>
std::optional<std::vector<F>> solve(const Matrix<F>& m, const std::vector<F>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw Error("solve: rhs size mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[static_cast<std::size_t>(i)];
  }
  RrefResult<F> r = rref(aug);
  for (int p : r.pivots) {
    if (p == m.cols()) return std::nullopt;  // inconsistent system
  }
  std::vector<F> x(static_cast<std::size_t>(m.cols()), F::zero());
  for (int i = 0; i < r.rank; ++i) {
    x[static_cast<std::size_t>(r.pivots[static_cast<std::size_t>(i)])] = r.echelon(i, m.cols());
  }
  return x;
}

template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw Error("inverse of non-square matrix");
  int n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F::one();
  }
  RrefResult<F> r = rref(aug);
  for (int i = 0; i < n; ++i) {
    if (i >= r.rank || r.pivots[static_cast<std::size_t>(i)] != i) return std::nullopt;
  }
  Matrix<F> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = r.echelon(i, n + j);
  return inv;
}

template <Field F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
  int n = m.rows();
  F det = F::one();
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i) {
      if (!m(i, c).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) return F::zero();
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(m(c, j), m(sel, j));
      det = -det;
    }
    det = det * m(c, c);
    F inv = F::one() / m(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      F factor = m(i, c) * inv;
      for (int j = c; j < n; ++j) m(i, j) = m(i, j) - factor * m(c, j);
    }
  }
  return det;
}

template <Field F>
F trace(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw Error("trace of non-square matrix");
  F t = F::zero();
  for (int i = 0; i < m.rows(); ++i) t = t + m(i, i);
  return t;
}

/// Entrywise lift of a rational matrix into a larger field.
template <Field F>
Matrix<F> lift_matrix(const Matrix<Rational>& m) {
  Matrix<F> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = F::from_rational(m(i, j));
  return out;
}

}  // namespace paracoh
