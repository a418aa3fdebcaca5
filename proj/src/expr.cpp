#include "ncreal/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncreal {

struct Expr::Node {
  Kind kind;
  Rational value;
  int letter = 0;
  std::vector<Expr> children;
  int max_letter = 0;
};

// --- MatTuple ---------------------------------------------------------------

MatTuple MatTuple::zeros(Index g, Index m) {
  return MatTuple(std::vector<MatQ>(static_cast<std::size_t>(g), MatQ::Zero(m, m)));
}

bool MatTuple::is_symmetric() const {
  return std::all_of(mats.begin(), mats.end(),
                     [](const MatQ& a) { return a == a.transpose(); });
}

void MatTuple::check_shape() const {
  const Index m = size();
  for (const MatQ& a : mats) {
    if (a.rows() != m || a.cols() != m) throw ShapeError("MatTuple: entries must be square and equal-sized");
  }
}

bool operator==(const MatTuple& a, const MatTuple& b) {
  if (a.letters() != b.letters()) return false;
  for (Index j = 0; j < a.letters(); ++j) {
    if (a[j].rows() != b[j].rows() || a[j].cols() != b[j].cols() || !(a[j] == b[j])) return false;
  }
  return true;
}

// --- Expr -------------------------------------------------------------------

Expr Expr::constant(Rational value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->value = std::move(value);
  return Expr(std::move(n));
}

Expr Expr::var(int j) {
  if (j < 1) throw std::invalid_argument("Expr::var: letter index must be >= 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->letter = j;
  n->max_letter = j;
  return Expr(std::move(n));
}

namespace {

template <typename N>
std::shared_ptr<N> make_inner(typename Expr::Kind kind, std::vector<Expr> children) {
  auto n = std::make_shared<N>();
  n->kind = kind;
  for (const Expr& c : children) n->max_letter = std::max(n->max_letter, c.max_letter());
  n->children = std::move(children);
  return n;
}

}  // namespace

Expr Expr::neg(Expr e) { return Expr(make_inner<Node>(Kind::Neg, {std::move(e)})); }
Expr Expr::add(Expr a, Expr b) { return Expr(make_inner<Node>(Kind::Add, {std::move(a), std::move(b)})); }
Expr Expr::mul(Expr a, Expr b) { return Expr(make_inner<Node>(Kind::Mul, {std::move(a), std::move(b)})); }
Expr Expr::inv(Expr e) { return Expr(make_inner<Node>(Kind::Inv, {std::move(e)})); }

Expr::Kind Expr::kind() const { return node_->kind; }
const Rational& Expr::value() const { return node_->value; }
int Expr::letter() const { return node_->letter; }
int Expr::arity() const { return static_cast<int>(node_->children.size()); }
const Expr& Expr::child(int i) const { return node_->children.at(static_cast<std::size_t>(i)); }
int Expr::max_letter() const { return node_->max_letter; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Expr::Kind::Const: return a.value() == b.value();
    case Expr::Kind::Var: return a.letter() == b.letter();
    default: break;
  }
  for (int i = 0; i < a.arity(); ++i) {
    if (!(a.child(i) == b.child(i))) return false;
  }
  return true;
}

std::string Expr::str() const {
  switch (kind()) {
    case Kind::Const: return value().str();
    case Kind::Var: return "z" + std::to_string(letter());
    case Kind::Neg: return "-" + child(0).str();
    case Kind::Inv: return "inv(" + child(0).str() + ")";
    case Kind::Mul: return "(" + child(0).str() + "*" + child(1).str() + ")";
    case Kind::Add: {
      const Expr& r = child(1);
      if (r.kind() == Kind::Neg) return "(" + child(0).str() + " - " + r.child(0).str() + ")";
      return "(" + child(0).str() + " + " + r.str() + ")";
    }
  }
  return {};
}

int letter_count(const Expr& e, int hint) { return std::max(e.max_letter(), hint); }

Index kappa(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Const: return 1;
    case Expr::Kind::Var: return 2;
    case Expr::Kind::Neg: return kappa(e.child(0));
    case Expr::Kind::Inv: return kappa(e.child(0)) + 1;
    case Expr::Kind::Add:
    case Expr::Kind::Mul: return kappa(e.child(0)) + kappa(e.child(1));
  }
  return 0;
}

// --- evaluation ---------------------------------------------------------------

namespace {

MatQ eval_at(const Expr& e, const MatTuple& q, ExprPath& path) {
  const Index m = q.size();
  switch (e.kind()) {
    case Expr::Kind::Const: return MatQ::Identity(m, m) * e.value();
    case Expr::Kind::Var:
      if (e.letter() > q.letters()) {
        throw ShapeError("eval: point has " + std::to_string(q.letters()) + " letters, expression uses z" +
                         std::to_string(e.letter()));
      }
      return q[e.letter() - 1];
    default: break;
  }
  std::vector<MatQ> vals;
  for (int i = 0; i < e.arity(); ++i) {
    path.push_back(i);
    vals.push_back(eval_at(e.child(i), q, path));
    path.pop_back();
  }
  switch (e.kind()) {
    case Expr::Kind::Neg: return -vals[0];
    case Expr::Kind::Add: return vals[0] + vals[1];
    case Expr::Kind::Mul: return vals[0] * vals[1];
    case Expr::Kind::Inv: {
      std::optional<MatQ> inv = inverse(vals[0]);
      if (!inv) throw DomainError(path, e.str());
      return *inv;
    }
    default: break;
  }
  return {};
}

}  // namespace

MatQ eval_expr(const Expr& e, const MatTuple& q) {
  q.check_shape();
  ExprPath path;
  return eval_at(e, q, path);
}

// --- constructions --------------------------------------------------------------

Expr capelli(const std::vector<Expr>& args, const std::vector<Expr>& primes) {
  const std::size_t ell = args.size();
  if (ell == 0) throw std::invalid_argument("capelli: ell must be >= 1");
  if (primes.size() + 1 != ell) throw std::invalid_argument("capelli: need ell - 1 primed arguments");
  if (ell == 1) return args[0];
  const std::vector<Expr> rest_primes(primes.begin() + 1, primes.end());
  std::optional<Expr> acc;
  for (std::size_t j = 0; j < ell; ++j) {
    std::vector<Expr> rest;
    for (std::size_t i = 0; i < ell; ++i) {
      if (i != j) rest.push_back(args[i]);
    }
    const Expr term = (args[j] * primes[0]) * capelli(rest, rest_primes);
    if (!acc) {
      acc = term;
    } else if (j % 2 == 0) {
      acc = *acc + term;
    } else {
      acc = *acc - term;
    }
  }
  return *acc;
}

Expr capelli(int ell) {
  if (ell < 1) throw std::invalid_argument("capelli: ell must be >= 1");
  std::vector<Expr> args, primes;
  for (int i = 1; i <= ell; ++i) args.push_back(Expr::var(i));
  for (int k = 1; k < ell; ++k) primes.push_back(Expr::var(ell + k));
  return capelli(args, primes);
}

Expr formal_transpose(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Const:
    case Expr::Kind::Var: return e;
    case Expr::Kind::Neg: return Expr::neg(formal_transpose(e.child(0)));
    case Expr::Kind::Inv: return Expr::inv(formal_transpose(e.child(0)));
    case Expr::Kind::Add: return Expr::add(formal_transpose(e.child(0)), formal_transpose(e.child(1)));
    case Expr::Kind::Mul: return Expr::mul(formal_transpose(e.child(1)), formal_transpose(e.child(0)));
  }
  return e;
}

// --- sampling -----------------------------------------------------------------

MatQ PointSampler::matrix(Index m) {
  MatQ a(m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) a(i, j) = Rational(dist_(rng_));
  return a;
}

MatQ PointSampler::symmetric_matrix(Index m) {
  MatQ a(m, m);
  for (Index i = 0; i < m; ++i) {
    for (Index j = i; j < m; ++j) {
      a(i, j) = Rational(dist_(rng_));
      a(j, i) = a(i, j);
    }
  }
  return a;
}

MatTuple PointSampler::tuple(Index g, Index m) {
  MatTuple t;
  for (Index j = 0; j < g; ++j) t.mats.push_back(matrix(m));
  return t;
}

MatTuple PointSampler::symmetric_tuple(Index g, Index m) {
  MatTuple t;
  for (Index j = 0; j < g; ++j) t.mats.push_back(symmetric_matrix(m));
  return t;
}

namespace {

template <typename Draw>
SampleResult sample_with(const Expr& e, std::uint64_t seed, int max_tries, Draw draw) {
  if (max_tries < 1) throw std::invalid_argument("sample_domain_point: max_tries must be >= 1");
  PointSampler sampler(seed);
  SampleResult out;
  for (int t = 0; t < max_tries; ++t) {
    ++out.tries;
    MatTuple q = draw(sampler);
    try {
      eval_expr(e, q);
    } catch (const DomainError&) {
      continue;
    }
    out.point = std::move(q);
    break;
  }
  return out;
}

}  // namespace

SampleResult sample_domain_point(const Expr& e, Index g, Index m, std::uint64_t seed, int max_tries) {
  if (m < 1) throw std::invalid_argument("sample_domain_point: m must be >= 1");
  return sample_with(e, seed, max_tries, [&](PointSampler& s) { return s.tuple(g, m); });
}

SampleResult sample_symmetric_domain_point(const Expr& e, Index g, Index m, std::uint64_t seed,
                                           int max_tries) {
  if (m < 1) throw std::invalid_argument("sample_domain_point: m must be >= 1");
  return sample_with(e, seed, max_tries, [&](PointSampler& s) { return s.symmetric_tuple(g, m); });
}

}  // namespace ncreal
