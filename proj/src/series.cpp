#include "ncreal/series.hpp"

#include <stdexcept>

namespace ncreal {

Index ipow(Index base, Index exp) {
  Index r = 1;
  for (Index i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<Word> words_up_to(Index g, int max_len) {
  std::vector<Word> out{Word{}};
  std::size_t level_start = 0;
  for (int len = 1; len <= max_len; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_start; i < level_end; ++i) {
      for (int j = 0; j < g; ++j) {
        Word w = out[i];
        w.push_back(j);
        out.push_back(std::move(w));
      }
    }
    level_start = level_end;
  }
  return out;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (int j : w) s += "x" + std::to_string(j + 1);
  return s;
}

MatQ tensor_join(const MatQ& x, Index kx, const MatQ& y, Index ky, Index m) {
  const Index mx = ipow(m, kx);  // size of the leading multi-index of x
  const Index my = ipow(m, ky);  // size of the trailing multi-index of y
  MatQ out = MatQ::Zero(mx * m * my, mx * m * my);
  // out[(I,i,J),(I',j,J')] = sum_u x[(I,i),(I',u)] * y[(u,J),(j,J')]
  for (Index I = 0; I < mx; ++I) {
    for (Index i = 0; i < m; ++i) {
      for (Index Ip = 0; Ip < mx; ++Ip) {
        for (Index u = 0; u < m; ++u) {
          const Rational& xv = x(I * m + i, Ip * m + u);
          if (xv.is_zero()) continue;
          for (Index J = 0; J < my; ++J) {
            for (Index j = 0; j < m; ++j) {
              for (Index Jp = 0; Jp < my; ++Jp) {
                const Rational& yv = y(u * my + J, j * my + Jp);
                if (yv.is_zero()) continue;
                out((I * m + i) * my + J, (Ip * m + j) * my + Jp) += xv * yv;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

MatQ substitute_first(const MatQ& x, Index m, const MatQ& a) {
  const Index total = x.rows();
  if (total < m * m) throw ShapeError("substitute_first: tensor has no letter slot");
  const Index rest = total / (m * m);
  MatQ out = MatQ::Zero(m * rest, m * rest);
  // out[(i0,R),(j1,R')] = sum_{u,v} x[(i0,v,R),(u,j1,R')] a[u,v]
  for (Index i0 = 0; i0 < m; ++i0) {
    for (Index v = 0; v < m; ++v) {
      for (Index u = 0; u < m; ++u) {
        const Rational& av = a(u, v);
        if (av.is_zero()) continue;
        for (Index R = 0; R < rest; ++R) {
          for (Index j1 = 0; j1 < m; ++j1) {
            for (Index Rp = 0; Rp < rest; ++Rp) {
              const Rational& xv = x((i0 * m + v) * rest + R, (u * m + j1) * rest + Rp);
              if (xv.is_zero()) continue;
              out(i0 * rest + R, j1 * rest + Rp) += xv * av;
            }
          }
        }
      }
    }
  }
  return out;
}

MatQ tensor_eval(const MatQ& x, Index m, const std::vector<MatQ>& slots) {
  MatQ cur = x;
  for (const MatQ& a : slots) cur = substitute_first(cur, m, a);
  if (cur.rows() != m) throw ShapeError("tensor_eval: slot count does not match tensor order");
  return cur;
}

// --- TruncSeries -----------------------------------------------------------------

TruncSeries::TruncSeries(Index m, Index g, int order) : m_(m), g_(g), order_(order) {
  if (m < 1 || g < 0 || order < 0) throw std::invalid_argument("TruncSeries: bad dimensions");
}

TruncSeries TruncSeries::constant(const MatQ& a, Index g, int order) {
  TruncSeries s(a.rows(), g, order);
  s.set_coeff({}, a);
  return s;
}

TruncSeries TruncSeries::letter(int j, const MatTuple& p, int order) {
  const Index m = p.size();
  TruncSeries s(m, p.letters(), order);
  s.set_coeff({}, p[j]);
  if (order >= 1) s.set_coeff({j}, MatQ::Identity(m * m, m * m));
  return s;
}

MatQ TruncSeries::coeff(const Word& w) const {
  auto it = coeffs_.find(w);
  if (it != coeffs_.end()) return it->second;
  const Index d = ipow(m_, static_cast<Index>(w.size()) + 1);
  return MatQ::Zero(d, d);
}

void TruncSeries::set_coeff(const Word& w, const MatQ& value) {
  if (static_cast<int>(w.size()) > order_) return;
  const Index d = ipow(m_, static_cast<Index>(w.size()) + 1);
  if (value.rows() != d || value.cols() != d) throw ShapeError("TruncSeries: coefficient has wrong size");
  if (is_zero_matrix(value)) {
    coeffs_.erase(w);
  } else {
    coeffs_[w] = value;
  }
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
  if (a.m_ != b.m_ || a.g_ != b.g_ || a.order_ != b.order_) return false;
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (const auto& [w, c] : a.coeffs_) {
    auto it = b.coeffs_.find(w);
    if (it == b.coeffs_.end() || !(it->second == c)) return false;
  }
  return true;
}

namespace {

void check_compatible(const TruncSeries& s, const TruncSeries& t) {
  if (s.base_size() != t.base_size() || s.letters() != t.letters() || s.order() != t.order()) {
    throw ShapeError("series: operands differ in size, letters or order");
  }
}

}  // namespace

TruncSeries series_add(const TruncSeries& s, const TruncSeries& t) {
  check_compatible(s, t);
  TruncSeries out = s;
  for (const auto& [w, c] : t.coeffs()) out.set_coeff(w, out.coeff(w) + c);
  return out;
}

TruncSeries series_neg(const TruncSeries& s) {
  TruncSeries out(s.base_size(), s.letters(), s.order());
  for (const auto& [w, c] : s.coeffs()) out.set_coeff(w, -c);
  return out;
}

TruncSeries series_mul(const TruncSeries& s, const TruncSeries& t) {
  check_compatible(s, t);
  const Index m = s.base_size();
  std::map<Word, MatQ> acc;
  for (const auto& [u, x] : s.coeffs()) {
    for (const auto& [v, y] : t.coeffs()) {
      if (static_cast<int>(u.size() + v.size()) > s.order()) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      MatQ term = tensor_join(x, static_cast<Index>(u.size()), y, static_cast<Index>(v.size()), m);
      auto it = acc.find(w);
      if (it == acc.end()) {
        acc.emplace(std::move(w), std::move(term));
      } else {
        it->second += term;
      }
    }
  }
  TruncSeries out(m, s.letters(), s.order());
  for (auto& [w, c] : acc) out.set_coeff(w, c);
  return out;
}

TruncSeries series_inv(const TruncSeries& s) {
  const Index m = s.base_size();
  std::optional<MatQ> a_inv = inverse(s.coeff({}));
  if (!a_inv) throw NotInvertible("series_inv: constant term is singular");
  // S = a (1 - T) with T = 1 - a^{-1} S, so S^{-1} = (sum_k T^k) a^{-1}.
  const TruncSeries a_inv_series = TruncSeries::constant(*a_inv, s.letters(), s.order());
  TruncSeries t = series_neg(series_mul(a_inv_series, s));
  t.set_coeff({}, MatQ::Zero(m, m));
  TruncSeries geometric = TruncSeries::constant(MatQ::Identity(m, m), s.letters(), s.order());
  TruncSeries power = geometric;
  for (int k = 1; k <= s.order(); ++k) {
    power = series_mul(power, t);
    geometric = series_add(geometric, power);
  }
  return series_mul(geometric, a_inv_series);
}

namespace {

TruncSeries expand_at(const Expr& e, const MatTuple& p, int order, Index g, ExprPath& path) {
  const Index m = p.size();
  switch (e.kind()) {
    case Expr::Kind::Const:
      return TruncSeries::constant(MatQ::Identity(m, m) * e.value(), g, order);
    case Expr::Kind::Var:
      if (e.letter() > p.letters()) throw ShapeError("expand: point has too few letters");
      return TruncSeries::letter(e.letter() - 1, p, order);
    default: break;
  }
  std::vector<TruncSeries> kids;
  for (int i = 0; i < e.arity(); ++i) {
    path.push_back(i);
    kids.push_back(expand_at(e.child(i), p, order, g, path));
    path.pop_back();
  }
  switch (e.kind()) {
    case Expr::Kind::Neg: return series_neg(kids[0]);
    case Expr::Kind::Add: return series_add(kids[0], kids[1]);
    case Expr::Kind::Mul: return series_mul(kids[0], kids[1]);
    case Expr::Kind::Inv:
      try {
        return series_inv(kids[0]);
      } catch (const NotInvertible&) {
        throw DomainError(path, e.str());
      }
    default: break;
  }
  throw std::logic_error("expand: unknown node");
}

}  // namespace

TruncSeries expand(const Expr& r, const MatTuple& p, int order) {
  p.check_shape();
  ExprPath path;
  return expand_at(r, p, order, p.letters(), path);
}

}  // namespace ncreal
