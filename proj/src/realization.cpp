#include "ncreal/realization.hpp"

#include <string>

namespace ncreal {

void Realization::validate() const {
  point.check_shape();
  if (point.size() != m || point.letters() != g) throw ShapeError("realization: point does not match m, g");
  if (c.rows() != m || c.cols() != m * n) throw ShapeError("realization: c must be m x mn");
  if (b.rows() != m * n || b.cols() != m) throw ShapeError("realization: b must be mn x m");
  if (static_cast<Index>(A.size()) != g) throw ShapeError("realization: need one operator per letter");
  for (const BimodOp& op : A) {
    if (op.base_size() != m || op.n_out() != n || op.n_in() != n) {
      throw ShapeError("realization: letter operator must be n x n over M_m");
    }
  }
}

bool operator==(const Realization& x, const Realization& y) {
  if (x.m != y.m || x.g != y.g || x.n != y.n || !(x.point == y.point)) return false;
  if (!(x.c == y.c) || !(x.b == y.b)) return false;
  for (Index j = 0; j < x.g; ++j) {
    if (!equivalent(x.A[j], y.A[j])) return false;
  }
  return true;
}

namespace {

Realization empty_like(const MatTuple& p, Index n) {
  Realization r;
  r.m = p.size();
  r.g = p.letters();
  r.n = n;
  r.point = p;
  r.c = MatQ::Zero(r.m, r.m * n);
  r.b = MatQ::Zero(r.m * n, r.m);
  for (Index j = 0; j < r.g; ++j) r.A.emplace_back(r.m, n, n);
  return r;
}

void check_same_base(const Realization& r1, const Realization& r2) {
  if (r1.m != r2.m || r1.g != r2.g || !(r1.point == r2.point)) {
    throw ShapeError("realizations have different base size, letters or point");
  }
}

}  // namespace

Realization zero_rep(const MatTuple& p) { return empty_like(p, 0); }

Realization const_rep(const Rational& alpha, const MatTuple& p) {
  Realization r = empty_like(p, 1);
  r.c = MatQ::Identity(r.m, r.m) * alpha;
  r.b = MatQ::Identity(r.m, r.m);
  return r;
}

Realization letter_rep(int j, const MatTuple& p) {
  if (j < 0 || j >= p.letters()) throw ShapeError("letter_rep: letter out of range");
  Realization r = empty_like(p, 2);
  const Index m = r.m;
  const MatQ I = MatQ::Identity(m, m);
  r.c << I, p[j];
  r.b << MatQ::Zero(m, m), I;
  MatQ C(2 * m, m), B(m, 2 * m);
  C << I, MatQ::Zero(m, m);
  B << MatQ::Zero(m, m), I;
  r.A[j].add_term(std::move(C), std::move(B));
  return r;
}

Realization rep_add(const Realization& r1, const Realization& r2) {
  check_same_base(r1, r2);
  const Index m = r1.m;
  const Index n1 = r1.n, n2 = r2.n, n = n1 + n2;
  Realization r = empty_like(r1.point, n);
  r.c << r1.c, r2.c;
  r.b << r1.b, r2.b;
  for (Index j = 0; j < r.g; ++j) {
    BimodOp op(m, n, n);
    for (const BimodTerm& t : r1.A[j].terms()) {
      MatQ C(m * n, m), B(m, m * n);
      C << t.C, MatQ::Zero(m * n2, m);
      B << t.B, MatQ::Zero(m, m * n2);
      op.add_term(std::move(C), std::move(B));
    }
    for (const BimodTerm& t : r2.A[j].terms()) {
      MatQ C(m * n, m), B(m, m * n);
      C << MatQ::Zero(m * n1, m), t.C;
      B << MatQ::Zero(m, m * n1), t.B;
      op.add_term(std::move(C), std::move(B));
    }
    r.A[j] = compress(op);
  }
  return r;
}

Realization rep_mul(const Realization& r1, const Realization& r2) {
  check_same_base(r1, r2);
  const Index m = r1.m;
  const Index n1 = r1.n, n2 = r2.n, n = n1 + n2;
  Realization r = empty_like(r1.point, n);
  const MatQ b1c2 = r1.b * r2.c;
  r.c << r1.c, r1.c * b1c2;
  r.b << MatQ::Zero(m * n1, m), r2.b;
  for (Index j = 0; j < r.g; ++j) {
    BimodOp op(m, n, n);
    for (const BimodTerm& t : r1.A[j].terms()) {
      MatQ C(m * n, m), B(m, m * n);
      C << t.C, MatQ::Zero(m * n2, m);
      B << t.B, t.B * b1c2;
      op.add_term(std::move(C), std::move(B));
    }
    for (const BimodTerm& t : r2.A[j].terms()) {
      MatQ C(m * n, m), B(m, m * n);
      C << MatQ::Zero(m * n1, m), t.C;
      B << MatQ::Zero(m, m * n1), t.B;
      op.add_term(std::move(C), std::move(B));
    }
    r.A[j] = compress(op);
  }
  return r;
}

Realization rep_neg(const Realization& r) {
  Realization out = r;
  out.c = -r.c;
  return out;
}

Realization rep_inv(const Realization& r0) {
  const Index m = r0.m;
  const Index n0 = r0.n, n = n0 + 1;
  const std::optional<MatQ> a_inv = inverse(MatQ(r0.c * r0.b));
  if (!a_inv) throw NotInvertibleAtPoint({}, "constant term");
  Realization r = empty_like(r0.point, n);
  const MatQ ainv_c = *a_inv * r0.c;
  const MatQ b_ainv = r0.b * *a_inv;
  const MatQ left = MatQ::Identity(m * n0, m * n0) - r0.b * ainv_c;
  r.c << -ainv_c, *a_inv;
  r.b << MatQ::Zero(m * n0, m), MatQ::Identity(m, m);
  for (Index j = 0; j < r.g; ++j) {
    BimodOp op(m, n, n);
    for (const BimodTerm& t : r0.A[j].terms()) {
      MatQ C(m * n, m), B(m, m * n);
      C << t.C, MatQ::Zero(m, m);
      B << t.B * left, t.B * b_ainv;
      op.add_term(std::move(C), std::move(B));
    }
    r.A[j] = compress(op);
  }
  return r;
}

namespace {

Realization build(const Expr& e, const MatTuple& p, ExprPath& path) {
  switch (e.kind()) {
    case Expr::Kind::Const: return const_rep(e.value(), p);
    case Expr::Kind::Var:
      if (e.letter() > p.letters()) throw ShapeError("from_expr: point has too few letters");
      return letter_rep(e.letter() - 1, p);
    default: break;
  }
  std::vector<Realization> kids;
  for (int i = 0; i < e.arity(); ++i) {
    path.push_back(i);
    kids.push_back(build(e.child(i), p, path));
    path.pop_back();
  }
  switch (e.kind()) {
    case Expr::Kind::Neg: return rep_neg(kids[0]);
    case Expr::Kind::Add: return rep_add(kids[0], kids[1]);
    case Expr::Kind::Mul: return rep_mul(kids[0], kids[1]);
    case Expr::Kind::Inv:
      try {
        return rep_inv(kids[0]);
      } catch (const NotInvertibleAtPoint&) {
        throw NotInvertibleAtPoint(path, e.str());
      }
    default: break;
  }
  throw std::logic_error("from_expr: unknown node");
}

}  // namespace

Realization from_expr(const Expr& r, const MatTuple& p) {
  p.check_shape();
  ExprPath path;
  return build(r, p, path);
}

MatQ pencil(const Realization& r, const MatTuple& q) {
  q.check_shape();
  if (q.letters() != r.g) throw ShapeError("pencil: point has wrong number of letters");
  const Index ms = q.size();
  if (r.m == 0 || ms % r.m != 0) throw ShapeError("pencil: point size must be a multiple of m");
  const Index s = ms / r.m;
  const Index N = ms * r.n;
  MatQ P = MatQ::Identity(N, N);
  for (Index j = 0; j < r.g; ++j) {
    const MatQ x = q[j] - kron(MatQ::Identity(s, s), r.point[j]);
    if (is_zero_matrix(x)) continue;
    const BimodOp op = ampliate(r.A[j], s);
    for (const BimodTerm& t : op.terms()) P -= t.C * x * t.B;
  }
  // Ampliated blocks are indexed (block k, inner s*m); this is already the
  // natural layout of M_{ms}(Q)^{n x n}.
  return P;
}

MatQ eval(const Realization& r, const MatTuple& q) {
  const MatQ P = pencil(r, q);
  const Index s = q.size() / r.m;
  if (r.n == 0) return MatQ::Zero(q.size(), q.size());
  const Index N = P.rows();
  MatQ aug(N, N + q.size());
  aug << P, ampliate_blocks(r.b, r.m, s);
  const Echelon<Rational> e = rref(aug);
  if (e.rank() < N || e.pivots[static_cast<std::size_t>(N - 1)] >= N) {
    throw PencilSingular("pencil is singular at the evaluation point");
  }
  return ampliate_blocks(r.c, r.m, s) * e.reduced.rightCols(q.size());
}

MatQ coeff(const Realization& r, const Word& w) {
  const Index m = r.m;
  const Index mn = m * r.n;
  // y has shape m^{k+1} x (m^k * mn) after k letters.
  MatQ y = r.c;
  Index width = 1;  // m^k
  for (int letter : w) {
    if (letter < 0 || letter >= r.g) throw ShapeError("coeff: letter out of range");
    const BimodOp& op = r.A[static_cast<std::size_t>(letter)];
    MatQ next = MatQ::Zero(y.rows() * m, width * m * mn);
    for (const BimodTerm& t : op.terms()) {
      MatQ yc(y.rows(), width * m);
      for (Index J = 0; J < width; ++J) yc.middleCols(J * m, m) = y.middleCols(J * mn, mn) * t.C;
      next += kron(yc, t.B);
    }
    y = std::move(next);
    width *= m;
  }
  MatQ out(y.rows(), width * m);
  for (Index J = 0; J < width; ++J) out.middleCols(J * m, m) = y.middleCols(J * mn, mn) * r.b;
  return out;
}

Realization shift_left(const Realization& r, int j, const MatQ& a) {
  Realization out = r;
  out.c = r.c * apply(r.A.at(static_cast<std::size_t>(j)), a);
  return out;
}

Realization shift_right(const Realization& r, int j, const MatQ& a) {
  Realization out = r;
  out.b = apply(r.A.at(static_cast<std::size_t>(j)), a) * r.b;
  return out;
}

Realization ampliate(const Realization& r, Index s) {
  if (s < 1) throw ShapeError("ampliate: s must be >= 1");
  Realization out;
  out.m = r.m * s;
  out.g = r.g;
  out.n = r.n;
  for (const MatQ& pj : r.point.mats) out.point.mats.push_back(kron(MatQ::Identity(s, s), pj));
  out.c = ampliate_blocks(r.c, r.m, s);
  out.b = ampliate_blocks(r.b, r.m, s);
  for (const BimodOp& op : r.A) out.A.push_back(ampliate(op, s));
  return out;
}

std::vector<MatQ> generators(const Realization& r) {
  std::vector<MatQ> out;
  for (const BimodOp& op : r.A)
    for (Index p = 0; p < r.m; ++p)
      for (Index q = 0; q < r.m; ++q) out.push_back(apply_unit(op, p, q));
  return out;
}

}  // namespace ncreal
