#include "ncreal/bimodule.hpp"

#include <string>

namespace ncreal {

BimodOp BimodOp::from_matrix_pair(Index m, const MatQ& C, const MatQ& B) {
  if (C.cols() != B.rows() || C.cols() % m != 0 || C.rows() % m != 0 || B.cols() % m != 0) {
    throw ShapeError("from_matrix_pair: incompatible block shapes");
  }
  BimodOp out(m, C.rows() / m, B.cols() / m);
  for (Index k = 0; k < C.cols() / m; ++k) {
    out.add_term(C.middleCols(k * m, m), B.middleRows(k * m, m));
  }
  return out;
}

void BimodOp::add_term(MatQ C, MatQ B) {
  if (C.rows() != m_ * n_out_ || C.cols() != m_ || B.rows() != m_ || B.cols() != m_ * n_in_) {
    throw ShapeError("BimodOp: term shape (" + std::to_string(C.rows()) + "x" + std::to_string(C.cols()) +
                     ", " + std::to_string(B.rows()) + "x" + std::to_string(B.cols()) + ") does not fit m=" +
                     std::to_string(m_) + ", n_out=" + std::to_string(n_out_) + ", n_in=" + std::to_string(n_in_));
  }
  terms_.push_back({std::move(C), std::move(B)});
}

MatQ apply(const BimodOp& t, const MatQ& a) {
  const Index m = t.base_size();
  if (a.rows() != m || a.cols() != m) throw ShapeError("apply: argument must be m x m");
  MatQ out = MatQ::Zero(m * t.n_out(), m * t.n_in());
  for (const BimodTerm& term : t.terms()) out += term.C * (a * term.B);
  return out;
}

MatQ apply_unit(const BimodOp& t, Index p, Index q) {
  const Index m = t.base_size();
  MatQ out = MatQ::Zero(m * t.n_out(), m * t.n_in());
  for (const BimodTerm& term : t.terms()) out += term.C.col(p) * term.B.row(q);
  return out;
}

MatQ ampliate_blocks(const MatQ& x, Index m, Index s) {
  const Index br = x.rows() / m;
  const Index bc = x.cols() / m;
  MatQ out = MatQ::Zero(x.rows() * s, x.cols() * s);
  for (Index i = 0; i < br; ++i) {
    for (Index j = 0; j < bc; ++j) {
      const MatQ blk = x.block(i * m, j * m, m, m);
      if (is_zero_matrix(blk)) continue;
      for (Index k = 0; k < s; ++k) out.block(i * m * s + k * m, j * m * s + k * m, m, m) = blk;
    }
  }
  return out;
}

BimodOp ampliate(const BimodOp& t, Index s) {
  if (s < 1) throw ShapeError("ampliate: s must be >= 1");
  if (s == 1) return t;
  const Index m = t.base_size();
  BimodOp out(m * s, t.n_out(), t.n_in());
  for (const BimodTerm& term : t.terms()) {
    out.add_term(ampliate_blocks(term.C, m, s), ampliate_blocks(term.B, m, s));
  }
  return out;
}

BimodOp star(const BimodOp& t) {
  BimodOp out(t.base_size(), t.n_in(), t.n_out());
  for (const BimodTerm& term : t.terms()) out.add_term(term.B.transpose(), term.C.transpose());
  return out;
}

BimodOp transform(const BimodOp& t, const MatQ& L, const MatQ& R) {
  const Index m = t.base_size();
  if (L.cols() != m * t.n_out() || R.rows() != m * t.n_in() || L.rows() % m != 0 || R.cols() % m != 0) {
    throw ShapeError("transform: incompatible multipliers");
  }
  BimodOp out(m, L.rows() / m, R.cols() / m);
  for (const BimodTerm& term : t.terms()) out.add_term(L * term.C, term.B * R);
  return out;
}

MatQ flatten(const BimodOp& t) {
  const Index m = t.base_size();
  const Index P = m * t.n_out();
  const Index Q = m * t.n_in();
  // K = U V^T where column k of U (V) is the row-major vectorization of C_k (B_k).
  const Index T = t.term_count();
  MatQ U(P * m, T), V(m * Q, T);
  for (Index k = 0; k < T; ++k) {
    const BimodTerm& term = t.terms()[static_cast<std::size_t>(k)];
    for (Index i = 0; i < P; ++i)
      for (Index p = 0; p < m; ++p) U(i * m + p, k) = term.C(i, p);
    for (Index q = 0; q < m; ++q)
      for (Index j = 0; j < Q; ++j) V(q * Q + j, k) = term.B(q, j);
  }
  if (T == 0) return MatQ::Zero(P * m, m * Q);
  return U * V.transpose();
}

BimodOp compress(const BimodOp& t) {
  const Index m = t.base_size();
  const Index P = m * t.n_out();
  const Index Q = m * t.n_in();
  BimodOp out(m, t.n_out(), t.n_in());
  if (t.term_count() == 0) return out;
  const MatQ K = flatten(t);
  const Echelon<Rational> e = rref(K);
  for (Index k = 0; k < e.rank(); ++k) {
    const Index piv = e.pivots[static_cast<std::size_t>(k)];
    MatQ C(P, m), B(m, Q);
    for (Index i = 0; i < P; ++i)
      for (Index p = 0; p < m; ++p) C(i, p) = K(i * m + p, piv);
    for (Index q = 0; q < m; ++q)
      for (Index j = 0; j < Q; ++j) B(q, j) = e.reduced(k, q * Q + j);
    out.add_term(std::move(C), std::move(B));
  }
  return out;
}

bool equivalent(const BimodOp& a, const BimodOp& b) {
  if (a.base_size() != b.base_size() || a.n_out() != b.n_out() || a.n_in() != b.n_in()) return false;
  return flatten(a) == flatten(b);
}

}  // namespace ncreal
