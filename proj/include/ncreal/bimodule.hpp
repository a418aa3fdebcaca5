#pragma once

#include <vector>

#include "ncreal/exactlin.hpp"

namespace ncreal {

struct BimodTerm {
  MatQ C;  ///< (m n_out) x m
  MatQ B;  ///< m x (m n_in)
};

/// n_out x n_in matrix over the A-bimodule A x A (A = M_m(Q)) in slim form:
/// the linear map a -> sum_k C_k a B_k from M_m(Q) to Q^{(m n_out) x (m n_in)}.
class BimodOp {
 public:
  BimodOp() = default;
  BimodOp(Index m, Index n_out, Index n_in) : m_(m), n_out_(n_out), n_in_(n_in) {}

  /// Splits block matrices C, B in M_m(Q)^{n_out x k}, M_m(Q)^{k x n_in} into
  /// the k terms of C (I_k (x) a) B.
  static BimodOp from_matrix_pair(Index m, const MatQ& C, const MatQ& B);

  Index base_size() const { return m_; }
  Index n_out() const { return n_out_; }
  Index n_in() const { return n_in_; }
  Index term_count() const { return static_cast<Index>(terms_.size()); }
  const std::vector<BimodTerm>& terms() const { return terms_; }

  /// Throws ShapeError on shape mismatch.
  void add_term(MatQ C, MatQ B);

 private:
  Index m_ = 0;
  Index n_out_ = 0;
  Index n_in_ = 0;
  std::vector<BimodTerm> terms_;
};

/// sum_k C_k a B_k.
MatQ apply(const BimodOp& t, const MatQ& a);
/// apply(t, e_pq) without forming e_pq.
MatQ apply_unit(const BimodOp& t, Index p, Index q);

/// Replaces every m x m block c of each C and B by I_s (x) c.
BimodOp ampliate(const BimodOp& t, Index s);

/// I_s (x) c for every m x m block c of x.
MatQ ampliate_blocks(const MatQ& x, Index m, Index s);

/// Term-wise (C, B) -> (B^T, C^T); apply(star(t), a) = apply(t, a^T)^T.
BimodOp star(const BimodOp& t);

/// Terms (L C_k, B_k R): the operator a -> L apply(t, a) R.
BimodOp transform(const BimodOp& t, const MatQ& L, const MatQ& R);

/// The (m^2 n_out) x (m^2 n_in) matrix K[(i,p),(q,j)] = sum_k C_k(i,p) B_k(q,j).
/// Two operators are semantically equal iff their flattenings are equal.
MatQ flatten(const BimodOp& t);

/// Canonical form: terms come from the rank factorization K = K[:, piv] * rref(K).
/// At most m^2 min(n_out, n_in) terms.
BimodOp compress(const BimodOp& t);

bool equivalent(const BimodOp& a, const BimodOp& b);

}  // namespace ncreal
