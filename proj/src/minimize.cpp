#include "ncreal/minimize.hpp"

#include <deque>

namespace ncreal {

namespace {

// Images of v under every A_j(e_pq), without forming the generator matrices.
template <typename Visit>
void for_each_column_image(const Realization& r, const VecQ& v, Visit visit) {
  const Index m = r.m;
  for (const BimodOp& op : r.A) {
    std::vector<VecQ> bv;
    for (const BimodTerm& t : op.terms()) bv.push_back(t.B * v);
    for (Index p = 0; p < m; ++p) {
      for (Index q = 0; q < m; ++q) {
        VecQ w = VecQ::Zero(m * r.n);
        for (std::size_t k = 0; k < bv.size(); ++k) {
          if (!bv[k](q).is_zero()) w += op.terms()[k].C.col(p) * bv[k](q);
        }
        visit(std::move(w));
      }
    }
  }
}

// Images of the row vector u (stored as a column) under right multiplication.
template <typename Visit>
void for_each_row_image(const Realization& r, const VecQ& u, Visit visit) {
  const Index m = r.m;
  for (const BimodOp& op : r.A) {
    std::vector<VecQ> uc;
    for (const BimodTerm& t : op.terms()) uc.push_back(t.C.transpose() * u);
    for (Index p = 0; p < m; ++p) {
      for (Index q = 0; q < m; ++q) {
        VecQ w = VecQ::Zero(m * r.n);
        for (std::size_t k = 0; k < uc.size(); ++k) {
          if (!uc[k](p).is_zero()) w += op.terms()[k].B.row(q).transpose() * uc[k](p);
        }
        visit(std::move(w));
      }
    }
  }
}

template <typename Images>
SubspaceQ closure(const Realization& r, const MatQ& seeds, Images images) {
  IncrementalBasis<Rational> basis(r.m * r.n);
  std::deque<VecQ> queue;
  for (Index i = 0; i < seeds.cols(); ++i) {
    if (basis.insert(seeds.col(i))) queue.push_back(seeds.col(i));
  }
  while (!queue.empty() && !basis.full()) {
    const VecQ v = std::move(queue.front());
    queue.pop_front();
    images(r, v, [&](VecQ w) {
      if (basis.insert(w)) queue.push_back(std::move(w));
    });
  }
  if (basis.full()) return SubspaceQ::whole(r.m * r.n);
  return basis.span();
}

}  // namespace

ModuleSpaces module_spaces(const Realization& r) {
  ModuleSpaces out;
  out.ctrl = closure(r, r.b, [](const Realization& rr, const VecQ& v, auto visit) {
    for_each_column_image(rr, v, visit);
  });
  out.obs = closure(r, r.c.transpose(), [](const Realization& rr, const VecQ& v, auto visit) {
    for_each_row_image(rr, v, visit);
  });
  return out;
}

std::string to_string(ObstructionClass k) {
  switch (k) {
    case ObstructionClass::Trivial: return "trivial";
    case ObstructionClass::Torsion: return "torsion";
    case ObstructionClass::HasFreePart: return "has_free_part";
  }
  return "";
}

ObstructionClass classify_obstruction(Index d, Index m) {
  if (d == 0) return ObstructionClass::Trivial;
  return d < m ? ObstructionClass::Torsion : ObstructionClass::HasFreePart;
}

ObstructionReport obstruction_report(const Realization& r, const ModuleSpaces& spaces) {
  ObstructionReport rep;
  rep.left_dim = r.m * r.n - spaces.ctrl.dim();
  rep.right_dim = r.m * r.n - spaces.obs.dim();
  rep.left_class = classify_obstruction(rep.left_dim, r.m);
  rep.right_class = classify_obstruction(rep.right_dim, r.m);
  return rep;
}

namespace {

MatQ gram(const ModuleSpaces& s) { return s.obs.basis() * s.ctrl.basis().transpose(); }

// Stacks `fixed` below greedily chosen unit rows so the result is invertible.
MatQ complete_with_units(const MatQ& fixed, Index dim) {
  IncrementalBasis<Rational> basis(dim);
  for (Index i = 0; i < fixed.rows(); ++i) basis.insert(fixed.row(i).transpose());
  std::vector<Index> units;
  for (Index i = 0; i < dim && basis.dim() < dim; ++i) {
    if (basis.insert(VecQ::Unit(dim, i))) units.push_back(i);
  }
  MatQ out = MatQ::Zero(dim, dim);
  for (std::size_t k = 0; k < units.size(); ++k) out(static_cast<Index>(k), units[k]) = Rational(1);
  out.bottomRows(fixed.rows()) = fixed;
  return out;
}

Realization change_basis_and_truncate(const Realization& r, const MatQ& U, const MatQ& Uinv, Index keep) {
  const Index m = r.m;
  Realization out;
  out.m = m;
  out.g = r.g;
  out.n = keep;
  out.point = r.point;
  out.c = (r.c * Uinv).leftCols(m * keep);
  out.b = (U * r.b).topRows(m * keep);
  const MatQ Ul = U.topRows(m * keep);
  const MatQ Ur = Uinv.leftCols(m * keep);
  for (const BimodOp& op : r.A) out.A.push_back(compress(transform(op, Ul, Ur)));
  return out;
}

}  // namespace

Realization reduce_left(const Realization& r, const SubspaceQ& ctrl) {
  const SubspaceQ ann = ctrl.annihilator();
  const Index k = ann.dim() / r.m;
  if (k == 0) return r;
  const MatQ U = complete_with_units(ann.basis().topRows(k * r.m), r.m * r.n);
  return change_basis_and_truncate(r, U, *inverse(U), r.n - k);
}

Realization reduce_right(const Realization& r, const SubspaceQ& obs) {
  const SubspaceQ ann = obs.annihilator();
  const Index k = ann.dim() / r.m;
  if (k == 0) return r;
  // Columns of V = [completion | obstruction]; V^T has the row layout used above.
  const MatQ V = complete_with_units(ann.basis().topRows(k * r.m), r.m * r.n).transpose();
  return change_basis_and_truncate(r, *inverse(V), V, r.n - k);
}

Reduction reduce(const Realization& r) {
  Reduction out;
  out.realization = r;
  for (;;) {
    ++out.cycles;
    const Index before = out.realization.n;
    out.realization = reduce_left(out.realization, module_spaces(out.realization).ctrl);
    out.realization = reduce_right(out.realization, module_spaces(out.realization).obs);
    if (out.realization.n == before) break;
  }
  const ModuleSpaces spaces = module_spaces(out.realization);
  out.report = obstruction_report(out.realization, spaces);
  out.totally_reduced = out.report.left_dim == 0 && out.report.right_dim == 0;
  return out;
}

bool is_zero_series(const Realization& r) {
  if (r.n == 0) return true;
  return is_zero_matrix(gram(module_spaces(r)));
}

Index sylvester_degree_of(const Realization& r) {
  if (r.n == 0) return 0;
  const Index rk = rank(gram(module_spaces(r)));
  return (rk + r.m - 1) / r.m;
}

MatQ transition_matrix(const Realization& r1, const Realization& r2) {
  if (r1.m != r2.m || r1.g != r2.g || !(r1.point == r2.point)) {
    throw NotSimilar("transition_matrix: different base size, letters or point");
  }
  if (r1.n != r2.n) throw NotSimilar("transition_matrix: dimensions differ");
  const Index N = r1.m * r1.n;
  if (N == 0) return MatQ(0, 0);
  // Paired Krylov search: P maps each R1 vector to the same word applied in R2.
  IncrementalBasis<Rational> basis(N);
  std::vector<VecQ> k1, k2;
  std::deque<std::pair<VecQ, VecQ>> queue;
  auto offer = [&](VecQ v1, VecQ v2) {
    if (basis.insert(v1)) {
      k1.push_back(v1);
      k2.push_back(v2);
      queue.emplace_back(std::move(v1), std::move(v2));
    }
  };
  for (Index i = 0; i < r1.m; ++i) offer(r1.b.col(i), r2.b.col(i));
  const std::vector<MatQ> g1 = generators(r1);
  const std::vector<MatQ> g2 = generators(r2);
  while (!queue.empty() && !basis.full()) {
    auto [v1, v2] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < g1.size(); ++i) offer(g1[i] * v1, g2[i] * v2);
  }
  if (!basis.full()) throw NotUnique("transition_matrix: first realization is not controllable");
  MatQ K1(N, N), K2(N, N);
  for (Index i = 0; i < N; ++i) {
    K1.col(i) = k1[static_cast<std::size_t>(i)];
    K2.col(i) = k2[static_cast<std::size_t>(i)];
  }
  const MatQ P = K2 * *inverse(K1);
  if (!inverse(P)) throw NotSimilar("transition_matrix: candidate is singular");
  if (!(r2.c * P == r1.c) || !(P * r1.b == r2.b)) throw NotSimilar("transition_matrix: c or b not matched");
  for (std::size_t i = 0; i < g1.size(); ++i) {
    if (!(P * g1[i] == g2[i] * P)) throw NotSimilar("transition_matrix: letter operators not conjugate");
  }
  return P;
}

}  // namespace ncreal
