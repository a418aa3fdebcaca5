#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ncreal/rfunc.hpp"

namespace ncreal {

/// c (D - sum_j H_j(z_j - p_j))^{-1} c^T with D diagonal and star(H_j) = H_j.
struct SymRealization {
  Index m = 0;
  Index g = 0;
  Index n = 0;
  MatTuple point;
  MatQ c;  ///< m x mn
  MatQ D;  ///< mn x mn, diagonal, invertible
  std::vector<BimodOp> H;
  Inertia signature;
};

/// r - formal_transpose(r) vanishes about a sampled symmetric point.
bool is_symmetric(const Expr& r, Index g, const SamplingOptions& opts);

/// The unique S with S b = c^T and S A_j(a) = star(A_j)(a) S, checked
/// symmetric. Requires a symmetric base point (NotSymmetric otherwise).
/// Throws NotSymmetricFunction when no such S exists and NotUnique when r is
/// not controllable.
MatQ structure_matrix(const Realization& r);

SymRealization symmetric_realization(const Realization& r);

/// All diagonal entries of D are positive.
bool positivity_flag(const SymRealization& sr);

/// Throws PencilSingular outside the pencil's domain.
MatQ eval(const SymRealization& sr, const MatTuple& q);

/// Exact J-form: D = L J L with J = sign(D) and L = diag(sqrt|d_i|), available
/// only when every |d_i| is a rational square.
struct JForm {
  MatQ J;
  MatQ c;  ///< c L^{-1}
  std::vector<BimodOp> H;  ///< L^{-1} H L^{-1}
};
std::optional<JForm> exact_jform(const SymRealization& sr);

/// Floating-point J-form for the general case. Inexact by construction.
struct FloatJForm {
  Eigen::MatrixXd J;
  Eigen::MatrixXd c;
  std::vector<std::vector<std::pair<Eigen::MatrixXd, Eigen::MatrixXd>>> H;  ///< per letter (C, B) terms
};
FloatJForm float_jform(const SymRealization& sr);

}  // namespace ncreal
