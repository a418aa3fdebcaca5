#pragma once

#include <random>
#include <string>
#include <vector>

#include "ncreal/realization.hpp"

namespace ncreal::testing {

/// e_ij in M_m(Q), 0-based.
inline MatQ unit(Index m, Index i, Index j) {
  MatQ e = MatQ::Zero(m, m);
  e(i, j) = Rational(1);
  return e;
}

inline MatQ identity(Index m) { return MatQ::Identity(m, m); }

/// Column of n blocks (each m x m), `block` at position i.
inline MatQ block_col(Index n, Index i, const MatQ& block) {
  const Index m = block.rows();
  MatQ out = MatQ::Zero(m * n, m);
  out.middleRows(i * m, m) = block;
  return out;
}

/// Row of n blocks, `block` at position j.
inline MatQ block_row(Index n, Index j, const MatQ& block) {
  const Index m = block.rows();
  MatQ out = MatQ::Zero(m, m * n);
  out.middleCols(j * m, m) = block;
  return out;
}

/// Operator whose (i, j) entry is a -> L a R, for each listed entry.
struct Entry {
  Index i, j;
  MatQ L, R;
};
inline BimodOp entries_op(Index m, Index n, const std::vector<Entry>& es) {
  BimodOp op(m, n, n);
  for (const Entry& e : es) op.add_term(block_col(n, e.i, e.L), block_row(n, e.j, e.R));
  return op;
}

/// Random expression over z1..zg of depth <= depth.
class ExprGen {
 public:
  ExprGen(std::uint64_t seed, int g) : rng_(seed), g_(g) {}

  Expr operator()(int depth) {
    if (depth == 0 || pick(5) == 0) return leaf();
    switch (pick(5)) {
      case 0: return (*this)(depth - 1) + (*this)(depth - 1);
      case 1:
      case 2: return (*this)(depth - 1) * (*this)(depth - 1);
      case 3: return -(*this)(depth - 1);
      default: return Expr::inv((*this)(depth - 1) + Expr::constant(Rational(1 + pick(3))));
    }
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  Expr leaf() {
    if (pick(4) == 0) {
      static const Rational cs[] = {Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(3)};
      return Expr::constant(cs[pick(5)]);
    }
    return Expr::var(1 + pick(g_));
  }

  std::mt19937_64 rng_;
  int g_;
};

struct CorpusItem {
  Expr expr;
  Index g;
  MatTuple point;
};

/// Expressions of depth <= 4 in g <= 3 letters with a domain point of size
/// <= 2. Items with no point found are skipped.
inline std::vector<CorpusItem> corpus(std::size_t count, std::uint64_t seed = 2024) {
  std::vector<CorpusItem> out;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; out.size() < count && attempt < 50 * static_cast<int>(count); ++attempt) {
    const int g = 1 + static_cast<int>(rng() % 3);
    const Index m = 1 + static_cast<Index>(rng() % 2);
    ExprGen gen(rng(), g);
    const Expr e = gen(1 + static_cast<int>(rng() % 4));
    const Index gg = letter_count(e, g);
    const SampleResult s = sample_domain_point(e, gg, m, rng(), 20);
    if (s.point) out.push_back({e, gg, *s.point});
  }
  return out;
}

/// [r, w] evaluated at (X_1, ..., X_k), read off the corner block of r at the
/// block upper-triangular tuple I (x) p + sum_t E_{t,t+1} (x) X_t on letter w_t.
inline MatQ nilpotent_coeff(const Expr& r, const MatTuple& p, const Word& w, const std::vector<MatQ>& xs) {
  const Index m = p.size();
  const Index k = static_cast<Index>(w.size());
  MatTuple z;
  for (Index j = 0; j < p.letters(); ++j) z.mats.push_back(kron(identity(k + 1), p[j]));
  for (Index t = 0; t < k; ++t) z.mats[static_cast<std::size_t>(w[static_cast<std::size_t>(t)])]
      .block(t * m, (t + 1) * m, m, m) += xs[static_cast<std::size_t>(t)];
  const MatQ v = eval_expr(r, z);
  return v.block(0, k * m, m, m);
}

}  // namespace ncreal::testing
