#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ncreal/minimize.hpp"

namespace ncreal {

struct SamplingOptions {
  std::uint64_t seed = 0;
  Index m_start = 1;  ///< first matrix size tried
  Index m_cap = 4;    ///< last matrix size tried before NoDomainPoint
  int tries = 20;     ///< random tuples per size
  bool symmetric = false;
};

/// Independent per-purpose seed derived from a base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// A tuple at which every expression evaluates, searching sizes m_start..m_cap.
/// Throws NoDomainPoint with the tries and sizes attempted.
MatTuple find_domain_point(const std::vector<Expr>& exprs, Index g, const SamplingOptions& opts);

struct DegreeCertificate {
  Index degree = 0;
  std::vector<MatTuple> witness_points;
  std::vector<Index> point_degrees;    ///< sylvester_degree_of per point
  std::vector<Index> reduced_dims;     ///< dimension after reduce per point
  bool totally_reduced_achieved = false;
};

struct MinimalRealization {
  Realization realization;
  DegreeCertificate certificate;
};

/// Reduces standard-construction realizations at up to max_points sampled
/// points, stopping at the first totally reduced one.
MinimalRealization minimal_realization(const Expr& r, Index g, const SamplingOptions& opts,
                                       int max_points = 3);

struct IdentityReport {
  bool identity = false;
  Index kappa = 0;
  Index m = 0;      ///< size of the expansion point
  Index bound = 0;  ///< m ceil(m kappa / 2)
  Index dimension = 0;  ///< standard-construction dimension
  MatTuple point;
};

IdentityReport is_rational_identity(const Expr& r, Index g, const SamplingOptions& opts);
bool are_equal(const Expr& r1, const Expr& r2, Index g, const SamplingOptions& opts);

/// Exact zero test of the expansion of r about p (p must lie in dom r).
bool vanishes_about(const Expr& r, const MatTuple& p);

enum class Dependence { Dependent, Independent, Undetermined };

struct DependenceReport {
  Dependence status = Dependence::Independent;
  std::vector<Rational> lambda;  ///< primitive integer vector, first nonzero entry > 0
  Index points_used = 0;
  Index m = 0;
  Index kappa_max = 0;
  MatTuple point;  ///< common domain point used for verification
};

/// Samples 2 ell common domain points at sizes m and m+1, takes the kernel of
/// the stacked values and verifies every candidate with an exact zero test.
/// Unverified candidates trigger another sampling round.
DependenceReport linear_dependence(const std::vector<Expr>& rs, Index g, const SamplingOptions& opts,
                                   int max_rounds = 4);

/// m ceil(m kappa / 2).
Index identity_test_size(Index m, Index kappa);
/// m^2 ell! (3 d + 4) / 2.
Rational dependence_test_size(Index m, Index ell, Index d);
/// A nonzero function vanishing on dom_N has degree strictly above this.
Rational degree_lower_bound(Index m, Index N);

/// Membership of q (size ms) in the extended domain via pencil invertibility.
/// Throws NotTotallyReduced unless ctrl and obs of r are both full.
bool domain_member(const Realization& r, const MatTuple& q);

}  // namespace ncreal
