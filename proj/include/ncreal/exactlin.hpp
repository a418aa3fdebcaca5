#pragma once

// Exact dense linear algebra over a field. Everything here is generic in the
// scalar type but assumes exact arithmetic: a pivot is "nonzero" iff it
// compares unequal to Scalar(0). Instantiate with ncreal::Rational.

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "ncreal/errors.hpp"
#include "ncreal/rational.hpp"

namespace ncreal {

using Eigen::Dynamic;
using Eigen::Index;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Dynamic, Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Dynamic, 1>;

using MatQ = DenseMatrix<Rational>;
using VecQ = DenseVector<Rational>;

template <typename Scalar>
bool is_zero_scalar(const Scalar& s) {
  return s == Scalar(0);
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero_scalar<Scalar>(m(i, j))) return false;
  return true;
}

/// Reduced row echelon form together with its pivot columns.
template <typename Scalar>
struct Echelon {
  DenseMatrix<Scalar> reduced;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.reduced = m;
  DenseMatrix<Scalar>& a = out.reduced;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i) {
      if (!is_zero_scalar<Scalar>(a(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Index j = c; j < cols; ++j) {
      if (!is_zero_scalar<Scalar>(a(r, j))) a(r, j) *= inv;
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero_scalar<Scalar>(a(i, c))) continue;
      const Scalar f = a(i, c);
      for (Index j = c; j < cols; ++j) {
        if (!is_zero_scalar<Scalar>(a(r, j))) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Subspace of F^d stored as a reduced row echelon basis (one basis vector
/// per row). The echelon form is canonical, so two subspaces are equal iff
/// their basis arrays are equal.
template <typename Scalar>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(Index ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `rows`.
  template <typename Derived>
  static Subspace span_of_rows(const Eigen::MatrixBase<Derived>& rows) {
    Subspace s(rows.cols());
    Echelon<Scalar> e = rref(rows);
    s.basis_ = e.reduced.topRows(e.rank());
    return s;
  }
  template <typename Derived>
  static Subspace span_of_columns(const Eigen::MatrixBase<Derived>& cols) {
    return span_of_rows(cols.transpose());
  }
  static Subspace whole(Index ambient_dim) {
    Subspace s(ambient_dim);
    s.basis_ = DenseMatrix<Scalar>::Identity(ambient_dim, ambient_dim);
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_; }
  const DenseMatrix<Scalar>& basis() const { return basis_; }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    DenseMatrix<Scalar> stacked(dim() + 1, ambient_);
    stacked.topRows(dim()) = basis_;
    if (v.rows() == 1) {
      stacked.row(dim()) = v;
    } else {
      stacked.row(dim()) = v.transpose();
    }
    return rank(stacked) == dim();
  }

  /// {v : <v, u> = 0 for all u in this subspace} under the standard pairing.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() &&
           a.basis_ == b.basis_;
  }

 private:
  Index ambient_ = 0;
  DenseMatrix<Scalar> basis_;
};

template <typename Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  DenseMatrix<Scalar> stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked << a.basis(), b.basis();
  return Subspace<Scalar>::span_of_rows(stacked);
}

template <typename Scalar>
Subspace<Scalar> intersection(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  return sum(a.annihilator(), b.annihilator()).annihilator();
}

template <typename Scalar>
struct RankKernel {
  Index rank = 0;
  Subspace<Scalar> kernel;  ///< right null space {v : M v = 0}
};

template <typename Derived>
RankKernel<typename Derived::Scalar> rank_and_kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Echelon<Scalar> e = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  DenseMatrix<Scalar> vectors = DenseMatrix<Scalar>::Zero(cols - e.rank(), cols);
  Index k = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    vectors(k, f) = Scalar(1);
    for (Index i = 0; i < e.rank(); ++i) vectors(k, e.pivots[i]) = -e.reduced(i, f);
    ++k;
  }
  RankKernel<Scalar> out;
  out.rank = e.rank();
  out.kernel = Subspace<Scalar>::span_of_rows(vectors);
  return out;
}

template <typename Scalar>
Subspace<Scalar> Subspace<Scalar>::annihilator() const {
  if (dim() == 0) return whole(ambient_);
  return rank_and_kernel(basis_).kernel;
}

/// Some X with m X = rhs, or nullopt when rhs leaves the column space of m.
template <typename DerivedA, typename DerivedB>
std::optional<DenseMatrix<typename DerivedA::Scalar>> solve(
    const Eigen::MatrixBase<DerivedA>& m, const Eigen::MatrixBase<DerivedB>& rhs) {
  using Scalar = typename DerivedA::Scalar;
  if (m.rows() != rhs.rows()) throw ShapeError("solve: row count mismatch");
  DenseMatrix<Scalar> aug(m.rows(), m.cols() + rhs.cols());
  aug << m, rhs;
  const Echelon<Scalar> e = rref(aug);
  DenseMatrix<Scalar> x = DenseMatrix<Scalar>::Zero(m.cols(), rhs.cols());
  for (Index i = 0; i < e.rank(); ++i) {
    const Index p = e.pivots[i];
    if (p >= m.cols()) return std::nullopt;
    x.row(p) = e.reduced.block(i, m.cols(), 1, rhs.cols());
  }
  return x;
}

template <typename Derived>
std::optional<DenseMatrix<typename Derived::Scalar>> inverse(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ShapeError("inverse: matrix not square");
  const Index n = m.rows();
  DenseMatrix<Scalar> aug(n, 2 * n);
  aug << m, DenseMatrix<Scalar>::Identity(n, n);
  const Echelon<Scalar> e = rref(aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  return DenseMatrix<Scalar>(e.reduced.rightCols(n));
}

template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ShapeError("determinant: matrix not square");
  DenseMatrix<Scalar> a = m;
  const Index n = a.rows();
  Scalar det(1);
  for (Index c = 0; c < n; ++c) {
    Index piv = -1;
    for (Index i = c; i < n; ++i) {
      if (!is_zero_scalar<Scalar>(a(i, c))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return Scalar(0);
    if (piv != c) {
      a.row(piv).swap(a.row(c));
      det = -det;
    }
    det *= a(c, c);
    for (Index i = c + 1; i < n; ++i) {
      if (is_zero_scalar<Scalar>(a(i, c))) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

/// Kronecker product with the left factor outermost: kron(a, b) has blocks
/// a(i, j) * b.
template <typename DerivedA, typename DerivedB>
DenseMatrix<typename DerivedA::Scalar> kron(const Eigen::MatrixBase<DerivedA>& a,
                                            const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      if (is_zero_scalar<Scalar>(a(i, j))) continue;
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// S = R * D * R^T with D diagonal and R invertible.
template <typename Scalar>
struct Congruence {
  DenseMatrix<Scalar> R;
  DenseMatrix<Scalar> D;
};

struct Inertia {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;
};

/// Symmetric Gaussian elimination. A vanishing diagonal pivot is replaced by
/// a later nonzero diagonal entry (swap), or else created by adding row/col j
/// to row/col k where S(k, j) != 0, which needs characteristic 0.
template <typename Derived>
Congruence<typename Derived::Scalar> congruence_diagonalize(
    const Eigen::MatrixBase<Derived>& s) {
  using Scalar = typename Derived::Scalar;
  if (s.rows() != s.cols()) throw NotSymmetric("congruence_diagonalize: matrix not square");
  if (!(s == s.transpose())) throw NotSymmetric("congruence_diagonalize: S != S^T");
  const Index n = s.rows();
  DenseMatrix<Scalar> w = s;
  DenseMatrix<Scalar> e = DenseMatrix<Scalar>::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    if (is_zero_scalar<Scalar>(w(k, k))) {
      Index j = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (!is_zero_scalar<Scalar>(w(i, i))) {
          j = i;
          break;
        }
      }
      if (j >= 0) {
        w.row(k).swap(w.row(j));
        w.col(k).swap(w.col(j));
        e.row(k).swap(e.row(j));
      } else {
        for (Index i = k + 1; i < n; ++i) {
          if (!is_zero_scalar<Scalar>(w(k, i))) {
            j = i;
            break;
          }
        }
        if (j < 0) continue;
        w.row(k) += w.row(j);
        w.col(k) += w.col(j);
        e.row(k) += e.row(j);
      }
    }
    const Scalar pivot = w(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (is_zero_scalar<Scalar>(w(i, k))) continue;
      const Scalar f = w(i, k) / pivot;
      w.row(i) -= f * w.row(k);
      w.col(i) -= f * w.col(k);
      e.row(i) -= f * e.row(k);
    }
  }
  Congruence<Scalar> out;
  out.D = w;
  out.R = *inverse(e);
  return out;
}

template <typename Derived>
Inertia inertia_of_diagonal(const Eigen::MatrixBase<Derived>& d) {
  using Scalar = typename Derived::Scalar;
  Inertia out;
  for (Index i = 0; i < d.rows(); ++i) {
    const Scalar& v = d(i, i);
    if (v > Scalar(0)) {
      ++out.positive;
    } else if (v < Scalar(0)) {
      ++out.negative;
    } else {
      ++out.zero;
    }
  }
  return out;
}

/// Incrementally grown linearly independent set. Rows are kept in
/// semi-reduced form: each stored row has a leading 1 at its pivot and zeros
/// at the pivots of all rows stored before it.
template <typename Scalar>
class IncrementalBasis {
 public:
  explicit IncrementalBasis(Index ambient_dim) : ambient_(ambient_dim) {}

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return static_cast<Index>(rows_.size()); }
  bool full() const { return dim() == ambient_; }

  /// Reduces v against the stored rows; true (and stores it) iff independent.
  bool insert(DenseVector<Scalar> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Index p = pivots_[i];
      if (is_zero_scalar<Scalar>(v(p))) continue;
      const Scalar f = v(p);
      const DenseVector<Scalar>& r = rows_[i];
      for (Index j = 0; j < ambient_; ++j) {
        if (!is_zero_scalar<Scalar>(r(j))) v(j) -= f * r(j);
      }
    }
    Index p = -1;
    for (Index j = 0; j < ambient_; ++j) {
      if (!is_zero_scalar<Scalar>(v(j))) {
        p = j;
        break;
      }
    }
    if (p < 0) return false;
    const Scalar inv = Scalar(1) / v(p);
    for (Index j = 0; j < ambient_; ++j) {
      if (!is_zero_scalar<Scalar>(v(j))) v(j) *= inv;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  Subspace<Scalar> span() const {
    DenseMatrix<Scalar> m(dim(), ambient_);
    for (Index i = 0; i < dim(); ++i) m.row(i) = rows_[static_cast<std::size_t>(i)].transpose();
    return Subspace<Scalar>::span_of_rows(m);
  }

 private:
  Index ambient_;
  std::vector<DenseVector<Scalar>> rows_;
  std::vector<Index> pivots_;
};

}  // namespace ncreal
