#include "ncreal/rfunc.hpp"

#include <algorithm>
#include <string>

namespace ncreal {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

MatTuple find_domain_point(const std::vector<Expr>& exprs, Index g, const SamplingOptions& opts) {
  if (opts.m_start < 1 || opts.m_cap < opts.m_start || opts.tries < 1) {
    throw UsageError("sampling options need 1 <= m_start <= m_cap and tries >= 1");
  }
  for (Index m = opts.m_start; m <= opts.m_cap; ++m) {
    PointSampler sampler(derive_seed(opts.seed, static_cast<std::uint64_t>(m)));
    for (int t = 0; t < opts.tries; ++t) {
      MatTuple q = opts.symmetric ? sampler.symmetric_tuple(g, m) : sampler.tuple(g, m);
      const bool ok = std::all_of(exprs.begin(), exprs.end(), [&](const Expr& e) {
        try {
          eval_expr(e, q);
          return true;
        } catch (const DomainError&) {
          return false;
        }
      });
      if (ok) return q;
    }
  }
  throw NoDomainPoint("no " + std::string(opts.symmetric ? "symmetric " : "") + "domain point after " +
                      std::to_string(opts.tries) + " tries per size at sizes " + std::to_string(opts.m_start) +
                      ".." + std::to_string(opts.m_cap));
}

MinimalRealization minimal_realization(const Expr& r, Index g, const SamplingOptions& opts, int max_points) {
  MinimalRealization best;
  bool have_best = false;
  for (int k = 0; k < std::max(1, max_points); ++k) {
    SamplingOptions o = opts;
    o.seed = derive_seed(opts.seed, 1000 + static_cast<std::uint64_t>(k));
    const MatTuple p = find_domain_point({r}, g, o);
    const Realization R = from_expr(r, p);
    const Index degree = sylvester_degree_of(R);
    DegreeCertificate& cert = best.certificate;
    cert.witness_points.push_back(p);
    cert.point_degrees.push_back(degree);
    if (degree == 0) {
      best.realization = zero_rep(p);
      cert.reduced_dims.push_back(0);
      cert.degree = 0;
      cert.totally_reduced_achieved = true;
      return best;
    }
    Reduction red = reduce(R);
    cert.reduced_dims.push_back(red.realization.n);
    if (!have_best || red.realization.n < best.realization.n || red.totally_reduced) {
      best.realization = std::move(red.realization);
      cert.degree = degree;
      have_best = true;
    }
    if (red.totally_reduced) {
      cert.totally_reduced_achieved = true;
      return best;
    }
  }
  return best;
}

bool vanishes_about(const Expr& r, const MatTuple& p) { return is_zero_series(from_expr(r, p)); }

IdentityReport is_rational_identity(const Expr& r, Index g, const SamplingOptions& opts) {
  IdentityReport rep;
  rep.point = find_domain_point({r}, g, opts);
  rep.m = rep.point.size();
  rep.kappa = kappa(r);
  rep.bound = identity_test_size(rep.m, rep.kappa);
  const Realization R = from_expr(r, rep.point);
  rep.dimension = R.n;
  rep.identity = is_zero_series(R);
  return rep;
}

bool are_equal(const Expr& r1, const Expr& r2, Index g, const SamplingOptions& opts) {
  return is_rational_identity(r1 - r2, g, opts).identity;
}

namespace {

std::vector<Rational> primitive_integer(const VecQ& v) {
  mpz_class lcm = 1, gcd = 0;
  for (Index i = 0; i < v.size(); ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v(i).denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (Index i = 0; i < v.size(); ++i) {
    const mpq_class scaled = v(i).value() * lcm;
    ints.push_back(scaled.get_num());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ints.back().get_mpz_t());
  }
  int sign = 0;
  for (const mpz_class& x : ints) {
    if (sgn(x) != 0) {
      sign = sgn(x);
      break;
    }
  }
  std::vector<Rational> out;
  for (const mpz_class& x : ints) {
    mpz_class y = gcd == 0 ? x : mpz_class(x / gcd);
    if (sign < 0) y = -y;
    out.emplace_back(mpq_class(y));
  }
  return out;
}

Expr combination(const std::vector<Expr>& rs, const std::vector<Rational>& lambda) {
  std::optional<Expr> acc;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (lambda[i].is_zero()) continue;
    const Expr term = Expr::constant(abs(lambda[i])) * rs[i];
    if (!acc) {
      acc = lambda[i].sign() > 0 ? term : -term;
    } else {
      acc = lambda[i].sign() > 0 ? *acc + term : *acc - term;
    }
  }
  return acc ? *acc : Expr::constant(0);
}

void append_values(MatQ& rows, const std::vector<Expr>& rs, const MatTuple& q) {
  const Index s = q.size();
  MatQ block(s * s, static_cast<Index>(rs.size()));
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const MatQ v = eval_expr(rs[i], q);
    for (Index a = 0; a < s; ++a)
      for (Index b = 0; b < s; ++b) block(a * s + b, static_cast<Index>(i)) = v(a, b);
  }
  MatQ grown(rows.rows() + block.rows(), block.cols());
  grown << rows, block;
  rows = std::move(grown);
}

}  // namespace

DependenceReport linear_dependence(const std::vector<Expr>& rs, Index g, const SamplingOptions& opts,
                                   int max_rounds) {
  DependenceReport rep;
  const Index ell = static_cast<Index>(rs.size());
  if (ell == 0) throw UsageError("linear_dependence: need at least one expression");
  for (const Expr& r : rs) rep.kappa_max = std::max(rep.kappa_max, kappa(r));
  const MatTuple base = find_domain_point(rs, g, opts);
  rep.m = base.size();
  rep.point = base;
  MatQ values(0, ell);
  append_values(values, rs, base);
  rep.points_used = 1;
  std::uint64_t stream = 0;
  for (int round = 0; round < max_rounds; ++round) {
    for (Index size : {rep.m, rep.m + 1}) {
      for (Index k = 0; k < ell; ++k) {
        SamplingOptions o = opts;
        o.seed = derive_seed(opts.seed, 5000 + stream++);
        o.m_start = size;
        o.m_cap = std::max(size, opts.m_cap);
        append_values(values, rs, find_domain_point(rs, g, o));
        ++rep.points_used;
      }
    }
    const SubspaceQ kernel = rank_and_kernel(values).kernel;
    if (kernel.is_zero()) {
      rep.status = Dependence::Independent;
      return rep;
    }
    bool all_verified = true;
    for (Index i = 0; i < kernel.dim() && all_verified; ++i) {
      all_verified = vanishes_about(combination(rs, primitive_integer(kernel.basis().row(i).transpose())), base);
    }
    if (all_verified) {
      rep.status = Dependence::Dependent;
      rep.lambda = primitive_integer(kernel.basis().row(0).transpose());
      return rep;
    }
  }
  rep.status = Dependence::Undetermined;
  return rep;
}

Index identity_test_size(Index m, Index kappa) { return m * ((m * kappa + 1) / 2); }

Rational dependence_test_size(Index m, Index ell, Index d) {
  Rational fact(1);
  for (Index i = 2; i <= ell; ++i) fact *= Rational(static_cast<long>(i));
  return Rational(static_cast<long>(m * m)) * fact * Rational(static_cast<long>(3 * d + 4)) / Rational(2);
}

Rational degree_lower_bound(Index m, Index N) {
  return Rational(static_cast<long>(2 * N), static_cast<long>(m * m)) + Rational(1);
}

bool domain_member(const Realization& r, const MatTuple& q) {
  const ModuleSpaces spaces = module_spaces(r);
  if (!spaces.ctrl.is_whole() || !spaces.obs.is_whole()) {
    throw NotTotallyReduced("domain_member: realization is not totally reduced");
  }
  const MatQ P = pencil(r, q);
  return rank(P) == P.rows();
}

}  // namespace ncreal
