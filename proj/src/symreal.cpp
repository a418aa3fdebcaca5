#include "ncreal/symreal.hpp"

#include <cmath>

namespace ncreal {

bool is_symmetric(const Expr& r, Index g, const SamplingOptions& opts) {
  SamplingOptions o = opts;
  o.symmetric = true;
  const Expr rt = formal_transpose(r);
  const MatTuple p = find_domain_point({r, rt}, g, o);
  return vanishes_about(r - rt, p);
}

MatQ structure_matrix(const Realization& r) {
  if (!r.point.is_symmetric()) throw NotSymmetric("structure_matrix: base point is not symmetric");
  Realization adj = r;
  adj.c = r.b.transpose();
  adj.b = r.c.transpose();
  for (BimodOp& op : adj.A) op = star(op);
  MatQ S;
  try {
    S = transition_matrix(r, adj);
  } catch (const NotSimilar& e) {
    throw NotSymmetricFunction(std::string("structure_matrix: ") + e.what());
  }
  if (!(S == S.transpose())) throw NotSymmetricFunction("structure_matrix: transition matrix is not symmetric");
  return S;
}

SymRealization symmetric_realization(const Realization& r) {
  const MatQ S = structure_matrix(r);
  const Congruence<Rational> cg = congruence_diagonalize(S);
  const MatQ Rinv = *inverse(cg.R);
  const MatQ RinvT = Rinv.transpose();
  SymRealization out;
  out.m = r.m;
  out.g = r.g;
  out.n = r.n;
  out.point = r.point;
  out.c = r.c * RinvT;
  out.D = cg.D;
  const MatQ left = Rinv * S;
  for (const BimodOp& op : r.A) out.H.push_back(compress(transform(op, left, RinvT)));
  out.signature = inertia_of_diagonal(out.D);
  return out;
}

bool positivity_flag(const SymRealization& sr) {
  const Inertia in = inertia_of_diagonal(sr.D);
  return in.negative == 0 && in.zero == 0;
}

MatQ eval(const SymRealization& sr, const MatTuple& q) {
  q.check_shape();
  if (q.letters() != sr.g || sr.m == 0 || q.size() % sr.m != 0) {
    throw ShapeError("eval: point does not fit the symmetric realization");
  }
  const Index s = q.size() / sr.m;
  if (sr.n == 0) return MatQ::Zero(q.size(), q.size());
  MatQ P = ampliate_blocks(sr.D, sr.m, s);
  for (Index j = 0; j < sr.g; ++j) {
    const MatQ x = q[j] - kron(MatQ::Identity(s, s), sr.point[j]);
    if (is_zero_matrix(x)) continue;
    const BimodOp op = ampliate(sr.H[j], s);
    for (const BimodTerm& t : op.terms()) P -= t.C * x * t.B;
  }
  const MatQ c = ampliate_blocks(sr.c, sr.m, s);
  const std::optional<MatQ> y = solve(P, MatQ(c.transpose()));
  if (!y || rank(P) < P.rows()) throw PencilSingular("symmetric pencil is singular at the evaluation point");
  return c * *y;
}

std::optional<JForm> exact_jform(const SymRealization& sr) {
  const Index N = sr.D.rows();
  MatQ Linv = MatQ::Zero(N, N);
  JForm out;
  out.J = MatQ::Zero(N, N);
  for (Index i = 0; i < N; ++i) {
    Rational root;
    if (!is_rational_square(abs(sr.D(i, i)), &root) || root.is_zero()) return std::nullopt;
    Linv(i, i) = Rational(1) / root;
    out.J(i, i) = Rational(sr.D(i, i).sign());
  }
  out.c = sr.c * Linv;
  for (const BimodOp& op : sr.H) out.H.push_back(transform(op, Linv, Linv));
  return out;
}

namespace {

Eigen::MatrixXd to_double(const MatQ& a) {
  Eigen::MatrixXd out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = a(i, j).to_double();
  return out;
}

}  // namespace

FloatJForm float_jform(const SymRealization& sr) {
  const Index N = sr.D.rows();
  Eigen::VectorXd linv(N);
  FloatJForm out;
  out.J = Eigen::MatrixXd::Zero(N, N);
  for (Index i = 0; i < N; ++i) {
    const double d = sr.D(i, i).to_double();
    linv(i) = 1.0 / std::sqrt(std::abs(d));
    out.J(i, i) = d > 0 ? 1.0 : -1.0;
  }
  out.c = to_double(sr.c) * linv.asDiagonal();
  for (const BimodOp& op : sr.H) {
    std::vector<std::pair<Eigen::MatrixXd, Eigen::MatrixXd>> terms;
    for (const BimodTerm& t : op.terms()) {
      terms.emplace_back(linv.asDiagonal() * to_double(t.C), to_double(t.B) * linv.asDiagonal());
    }
    out.H.push_back(std::move(terms));
  }
  return out;
}

}  // namespace ncreal
