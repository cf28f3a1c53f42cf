#pragma once

#include <vector>

#include "paracoh/matrix.hpp"

namespace paracoh {

/// Linear subspace of F^n stored as a reduced-echelon basis (rows). Echelon
/// storage makes equality structural and every derived basis reproducible.
template <Field F>
class Subspace {
public:
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace zero_subspace(int ambient) { return Subspace(ambient); }

  static Subspace full(int ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix<F>::identity(ambient);
    return s;
  }

  static Subspace span(int ambient, const std::vector<std::vector<F>>& vectors) {
    for (const auto& v : vectors) {
      if (static_cast<int>(v.size()) != ambient) throw AmbientMismatch("generator length != ambient dimension");
    }
    Subspace s(ambient);
    if (vectors.empty()) return s;
    s.basis_ = echelonize(Matrix<F>::from_rows(vectors));
    return s;
  }

  static Subspace row_space(const Matrix<F>& m) {
    Subspace s(m.cols());
    s.basis_ = echelonize(m);
    return s;
  }

  static Subspace column_space(const Matrix<F>& m) { return row_space(m.transpose()); }

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix<F>& basis() const { return basis_; }
  std::vector<F> basis_vector(int i) const { return basis_.row(i); }

  bool contains(const std::vector<F>& v) const {
    return coords_in_basis(v).has_value();
  }

  bool contains_subspace(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw AmbientMismatch("subspace ambient mismatch");
    for (int i = 0; i < other.dim(); ++i) {
      if (!contains(other.basis_vector(i))) return false;
    }
    return true;
  }

  /// Coordinates of v in the echelon basis, if v lies in the subspace.
  std::optional<std::vector<F>> coords_in_basis(const std::vector<F>& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw AmbientMismatch("vector length != ambient dimension");
    // reduce v against echelon rows; leftover nonzero means not contained
    std::vector<F> w = v;
    std::vector<F> coords(static_cast<std::size_t>(dim()), F::zero());
    for (int i = 0; i < dim(); ++i) {
      int p = pivot_col(i);
      F c = w[static_cast<std::size_t>(p)];  // by value: the loop below overwrites w[p]
      if (c.is_zero()) continue;
      coords[static_cast<std::size_t>(i)] = c;
      for (int j = 0; j < ambient_; ++j) {
        w[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(j)] - c * basis_(i, j);
      }
    }
    for (const F& x : w) {
      if (!x.is_zero()) return std::nullopt;
    }
    return coords;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
  static Matrix<F> echelonize(const Matrix<F>& m) {
    RrefResult<F> r = rref(m);
    Matrix<F> trimmed(r.rank, m.cols());
    for (int i = 0; i < r.rank; ++i)
      for (int j = 0; j < m.cols(); ++j) trimmed(i, j) = r.echelon(i, j);
    return trimmed;
  }

  int pivot_col(int row) const {
    for (int j = 0; j < ambient_; ++j) {
      if (!basis_(row, j).is_zero()) return j;
    }
    throw InternalCheckError("zero row stored in subspace basis");
  }

  int ambient_;
  Matrix<F> basis_;
};

template <Field F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("sum of subspaces of different ambients");
  std::vector<std::vector<F>> rows;
  for (int i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (int i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  return Subspace<F>::span(a.ambient_dim(), rows);
}

/// Zassenhaus: row reduce [A|A; B|0]; rows with vanishing left block carry a
/// basis of the intersection in the right block. No inner product involved,
/// so this works verbatim over Q(t).
template <Field F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("intersection of subspaces of different ambients");
  int n = a.ambient_dim();
  int rows = a.dim() + b.dim();
  Matrix<F> block(rows, 2 * n);
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < n; ++j) {
      block(i, j) = a.basis()(i, j);
      block(i, n + j) = a.basis()(i, j);
    }
  }
  for (int i = 0; i < b.dim(); ++i) {
    for (int j = 0; j < n; ++j) block(a.dim() + i, j) = b.basis()(i, j);
  }
  RrefResult<F> r = rref(std::move(block));
  std::vector<std::vector<F>> inter_rows;
  for (int i = 0; i < r.rank; ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j) left_zero = r.echelon(i, j).is_zero();
    if (!left_zero) continue;
    std::vector<F> v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = r.echelon(i, n + j);
    inter_rows.push_back(std::move(v));
  }
  return Subspace<F>::span(n, inter_rows);
}

/// Echelon basis of a complement of `sub` inside `super`: the rows of
/// `super`'s basis whose pivots are not already covered by `sub`. Requires
/// sub ⊆ super.
template <Field F>
std::vector<std::vector<F>> complement_basis(const Subspace<F>& sub, const Subspace<F>& super) {
  if (!super.contains_subspace(sub)) throw InclusionViolated("complement: sub not contained in super");
  std::vector<std::vector<F>> out;
  Subspace<F> acc = sub;
  for (int i = 0; i < super.dim(); ++i) {
    std::vector<F> v = super.basis_vector(i);
    if (!acc.contains(v)) {
      out.push_back(v);
      std::vector<std::vector<F>> rows;
      for (int k = 0; k < acc.dim(); ++k) rows.push_back(acc.basis_vector(k));
      rows.push_back(v);
      acc = Subspace<F>::span(super.ambient_dim(), rows);
    }
  }
  if (acc.dim() != super.dim()) throw InternalCheckError("complement construction failed");
  return out;
}

/// dim of the image of z ∩ w inside the quotient z / b; equals
/// dim(z ∩ w) − dim(b ∩ w) when b ⊆ z.
template <Field F>
int quotient_image_dim(const Subspace<F>& z, const Subspace<F>& b, const Subspace<F>& w) {
  if (!z.contains_subspace(b)) throw InclusionViolated("quotient_image_dim: b not contained in z");
  Subspace<F> zw = subspace_intersect(z, w);
  Subspace<F> bw = subspace_intersect(b, w);
  return zw.dim() - bw.dim();
}

}  // namespace paracoh
