#pragma once

// The element z_d for degrees with a zero component.
//
// z_d is built greedily: z_0 = id and z_d = s_alpha . z_{d - alpha} (Hecke
// product) for a maximal root alpha <= d. The result is also a plain product
// of reflections in pairwise compatible roots, which z_factorization returns.

#include <vector>

#include "affcurve/affine_perm.hpp"
#include "affcurve/roots.hpp"

namespace affcurve {

/// Maximal level-0 roots below d, i.e. the maximal cyclic runs of the
/// support of d, ordered by start index. d = 0 gives an empty list; a degree
/// without a zero component is rejected.
std::vector<PosRealRoot> maximal_roots_leq(const Degree& d);

/// The roots picked by the greedy construction, in order. At every step the
/// maximal root with the smallest start index is taken.
std::vector<PosRealRoot> greedy_sequence(const Degree& d);

AffinePerm z(const Degree& d);

struct ZFactorization {
  /// Sorted by smallest support index, longer roots first on ties.
  std::vector<PosRealRoot> factors;
  /// Plain product of the factor reflections; equals z(d).
  AffinePerm element;
  Int length = 0;
};

ZFactorization z_factorization(const Degree& d);

/// Trims a root multiset to compatible factors: a root below another root
/// that is not perpendicular to it loses the shared endpoint(s).
std::vector<PosRealRoot> normalize_factors(std::vector<PosRealRoot> roots);

}  // namespace affcurve
