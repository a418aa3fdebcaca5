#pragma once

#include <vector>

#include "ncreal/bimodule.hpp"
#include "ncreal/expr.hpp"
#include "ncreal/series.hpp"

namespace ncreal {

/// Realization of dimension n about p: the series c A^w b, i.e. the function
/// c (I - sum_j A_j(z_j - p_j))^{-1} b. Letters are 0-based.
struct Realization {
  Index m = 0;
  Index g = 0;
  Index n = 0;
  MatTuple point;
  MatQ c;                  ///< m x mn
  MatQ b;                  ///< mn x m
  std::vector<BimodOp> A;  ///< g operators, each n x n

  /// Throws ShapeError if any shape is inconsistent.
  void validate() const;
};

bool operator==(const Realization& x, const Realization& y);

/// Dimension 1: c = alpha I, b = I, no letter terms.
Realization const_rep(const Rational& alpha, const MatTuple& p);
/// z_{j+1} about p, dimension 2.
Realization letter_rep(int j, const MatTuple& p);

Realization rep_add(const Realization& r1, const Realization& r2);
Realization rep_mul(const Realization& r1, const Realization& r2);
Realization rep_neg(const Realization& r);
/// Throws NotInvertibleAtPoint (empty path) when c b is singular.
Realization rep_inv(const Realization& r);

/// Standard construction along the expression tree; dimension kappa(r).
Realization from_expr(const Expr& r, const MatTuple& p);

/// Zero realization of dimension 0.
Realization zero_rep(const MatTuple& p);

/// I_{smn} - sum_j ampliate(A_j, s)(q_j - I_s (x) p_j), assembled blockwise.
MatQ pencil(const Realization& r, const MatTuple& q);
/// Throws PencilSingular if the pencil at q is singular.
MatQ eval(const Realization& r, const MatTuple& q);

/// Coefficient tensor [S, w] of order |w|+1.
MatQ coeff(const Realization& r, const Word& w);

/// Representations of L_{x_j,a} S and R_{x_j,a} S.
Realization shift_left(const Realization& r, int j, const MatQ& a);
Realization shift_right(const Realization& r, int j, const MatQ& a);

/// The same series viewed over M_{ms}(Q) through a -> I_s (x) a.
Realization ampliate(const Realization& r, Index s);

/// A(e_pq) for every letter and unit, in the order (j, p, q).
std::vector<MatQ> generators(const Realization& r);

}  // namespace ncreal
