#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncreal/exactlin.hpp"
#include "ncreal/expr.hpp"

namespace ncreal {

/// Word in the letters x_0..x_{g-1} (0-based).
using Word = std::vector<int>;

/// All words of length <= max_len over g letters, shortlex order.
std::vector<Word> words_up_to(Index g, int max_len);
/// "1" for the empty word, otherwise "x1x3x2" (1-based letters).
std::string word_to_string(const Word& w);

Index ipow(Index base, Index exp);

// Tensors in A^{(k+1)}, A = M_m(Q), are stored as m^{k+1} x m^{k+1} matrices
// via a_0 (x) a_1 (x) ... (x) a_k -> kron(a_0, kron(a_1, ...)).

/// Product in the tensor algebra sense: contracts the last factor of x (order
/// kx+1) with the first factor of y (order ky+1) by multiplication in A.
MatQ tensor_join(const MatQ& x, Index kx, const MatQ& y, Index ky, Index m);

/// Substitutes a into the first letter slot: a_0 (x) a_1 (x) rest ->
/// (a_0 a a_1) (x) rest. Order drops by one.
MatQ substitute_first(const MatQ& x, Index m, const MatQ& a);

/// f[a_1, ..., a_k] for a tensor of order k+1.
MatQ tensor_eval(const MatQ& x, Index m, const std::vector<MatQ>& slots);

/// Generalized power series over M_m(Q) truncated after words of length L.
/// Only nonzero coefficients are stored.
class TruncSeries {
 public:
  TruncSeries(Index m, Index g, int order);

  static TruncSeries constant(const MatQ& a, Index g, int order);
  /// z_{j+1} = x_j + p_j about p.
  static TruncSeries letter(int j, const MatTuple& p, int order);

  Index base_size() const { return m_; }
  Index letters() const { return g_; }
  int order() const { return order_; }

  /// Coefficient [S, w]; a zero tensor when absent.
  MatQ coeff(const Word& w) const;
  void set_coeff(const Word& w, const MatQ& value);
  const std::map<Word, MatQ>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const TruncSeries& a, const TruncSeries& b);

 private:
  Index m_;
  Index g_;
  int order_;
  std::map<Word, MatQ> coeffs_;
};

TruncSeries series_add(const TruncSeries& s, const TruncSeries& t);
TruncSeries series_neg(const TruncSeries& s);
TruncSeries series_mul(const TruncSeries& s, const TruncSeries& t);
/// Throws NotInvertible when [S,1] is singular.
TruncSeries series_inv(const TruncSeries& s);

/// Expansion of r(x + p) up to words of length L. Throws DomainError at the
/// first inverted subexpression whose value at p is singular.
TruncSeries expand(const Expr& r, const MatTuple& p, int order);

}  // namespace ncreal
