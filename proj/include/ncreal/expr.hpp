#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ncreal/exactlin.hpp"

namespace ncreal {

/// A point (a_1, ..., a_g) in M_m(Q)^g. Letters are indexed from 0 here;
/// expression variables z1..zg map to entries 0..g-1.
struct MatTuple {
  std::vector<MatQ> mats;

  MatTuple() = default;
  explicit MatTuple(std::vector<MatQ> m) : mats(std::move(m)) {}

  Index letters() const { return static_cast<Index>(mats.size()); }
  /// Matrix size m (0 for an empty tuple).
  Index size() const { return mats.empty() ? 0 : mats.front().rows(); }
  const MatQ& operator[](Index j) const { return mats[static_cast<std::size_t>(j)]; }
  MatQ& operator[](Index j) { return mats[static_cast<std::size_t>(j)]; }

  static MatTuple zeros(Index g, Index m);
  bool is_symmetric() const;
  /// Throws ShapeError unless every entry is size() x size().
  void check_shape() const;

  friend bool operator==(const MatTuple& a, const MatTuple& b);
};

/// Immutable noncommutative rational expression. Copies share structure.
class Expr {
 public:
  enum class Kind { Const, Var, Neg, Add, Mul, Inv };

  static Expr constant(Rational value);
  /// Letter z_j, j >= 1.
  static Expr var(int j);
  static Expr neg(Expr e);
  static Expr add(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr inv(Expr e);

  Kind kind() const;
  const Rational& value() const;  ///< Const only
  int letter() const;             ///< Var only (1-based)
  int arity() const;
  const Expr& child(int i) const;

  /// Largest letter index occurring (0 if none).
  int max_letter() const;
  /// Fully parenthesized text; parse(str()) reproduces the tree.
  std::string str() const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Expr operator+(Expr a, Expr b) { return Expr::add(std::move(a), std::move(b)); }
inline Expr operator*(Expr a, Expr b) { return Expr::mul(std::move(a), std::move(b)); }
inline Expr operator-(Expr a) { return Expr::neg(std::move(a)); }
inline Expr operator-(Expr a, Expr b) { return Expr::add(std::move(a), Expr::neg(std::move(b))); }

/// Grammar (whitespace insignificant):
///   expr   := term (("+" | "-") term)*
///   term   := factor ("*" factor)*
///   factor := "-" factor | atom ("^-1")*
///   atom   := rational | "z" digits | "inv" "(" expr ")" | "(" expr ")"
/// `a - b` parses as Add(a, Neg(b)). Throws ParseError with the byte offset.
Expr parse(std::string_view text);

/// max(expr.max_letter(), hint).
int letter_count(const Expr& e, int hint = 0);

/// Symbol count #constants + 2 #letters + #inversions; Neg counts 0.
Index kappa(const Expr& e);

/// Exact value at q. Throws DomainError naming the first singular inverse in
/// evaluation order, ShapeError if q has too few letters.
MatQ eval_expr(const Expr& e, const MatTuple& q);

/// Capelli polynomial c_ell built by the alternating recursion. Unprimed
/// letters are z_1..z_ell, primed letters z'_k are z_{ell+k}.
Expr capelli(int ell);
/// Same recursion with arbitrary arguments (args.size() = ell,
/// primes.size() = ell - 1).
Expr capelli(const std::vector<Expr>& args, const std::vector<Expr>& primes);

/// Reverses products; constants, letters, Neg and Inv are kept.
Expr formal_transpose(const Expr& e);

/// Deterministic source of random integer matrices with entries in [-3, 3].
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

  MatQ matrix(Index m);
  MatQ symmetric_matrix(Index m);
  MatTuple tuple(Index g, Index m);
  MatTuple symmetric_tuple(Index g, Index m);

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> dist_{-3, 3};
};

struct SampleResult {
  std::optional<MatTuple> point;
  int tries = 0;
};

/// Draws up to max_tries random tuples in M_m(Q)^g and returns the first at
/// which eval_expr succeeds. Failure does not prove the domain empty.
SampleResult sample_domain_point(const Expr& e, Index g, Index m, std::uint64_t seed,
                                 int max_tries);
SampleResult sample_symmetric_domain_point(const Expr& e, Index g, Index m,
                                           std::uint64_t seed, int max_tries);

}  // namespace ncreal
