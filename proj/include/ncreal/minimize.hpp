#pragma once

#include <string>

#include "ncreal/realization.hpp"

namespace ncreal {

using SubspaceQ = Subspace<Rational>;

/// ctrl: smallest subspace of Q^{mn} containing the columns of b and stable
/// under every A_j(e_pq). obs: the row-space analogue generated by c.
struct ModuleSpaces {
  SubspaceQ ctrl;
  SubspaceQ obs;
};

ModuleSpaces module_spaces(const Realization& r);

enum class ObstructionClass { Trivial, Torsion, HasFreePart };

std::string to_string(ObstructionClass k);
/// Class of a module whose row-space has dimension d over M_m(Q).
ObstructionClass classify_obstruction(Index d, Index m);

/// left_dim = dim ann(ctrl), right_dim = dim ann(obs).
struct ObstructionReport {
  Index left_dim = 0;
  Index right_dim = 0;
  ObstructionClass left_class = ObstructionClass::Trivial;
  ObstructionClass right_class = ObstructionClass::Trivial;
};

ObstructionReport obstruction_report(const Realization& r, const ModuleSpaces& spaces);

/// True iff c A^w b = 0 for every word, i.e. obs pairs to zero with ctrl.
bool is_zero_series(const Realization& r);

struct Reduction {
  Realization realization;
  ObstructionReport report;  ///< of the returned realization
  bool totally_reduced = false;
  int cycles = 0;  ///< left/right cycles run, including the final idle one
};

/// One left step: removes the maximal free part of ann(ctrl). Unchanged if
/// dim ann(ctrl) < m.
Realization reduce_left(const Realization& r, const SubspaceQ& ctrl);
/// Mirror image using ann(obs).
Realization reduce_right(const Realization& r, const SubspaceQ& obs);

/// Alternates left and right steps until a full cycle keeps the dimension.
Reduction reduce(const Realization& r);

/// ceil(rank(Obs Ctrl^T) / m): the minimal dimension of a representation of
/// the same series.
Index sylvester_degree_of(const Realization& r);

/// The unique P with c1 = c2 P, P b1 = b2 and P A1(a) = A2(a) P for all a.
/// Throws NotSimilar when no such P exists, NotUnique when R1 has a
/// non-full controllability space.
MatQ transition_matrix(const Realization& r1, const Realization& r2);

}  // namespace ncreal
