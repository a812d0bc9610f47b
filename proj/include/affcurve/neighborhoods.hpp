#pragma once

// Closed-form curve neighborhoods Gamma_d(id) and Gamma_d(w).
//
// With m = min(d) and rest = d - m*c, every element of Gamma_d(id) is
// (s_beta s_beta')^m z_rest for beta' in the compatible set of the z_rest
// factors and beta = c - beta'. The finite regime (m = 0) is the single
// element z_d.

#include <optional>
#include <string>
#include <vector>

#include "affcurve/affine_perm.hpp"
#include "affcurve/roots.hpp"
#include "affcurve/z_elem.hpp"

namespace affcurve {

enum class Regime { Finite, Translation, General };
std::string to_string(Regime r);
Regime regime_from_string(const std::string& s);

enum class Source { ClosedForm, HeckeReduction, Oracle };
std::string to_string(Source s);
Source source_from_string(const std::string& s);

/// How a closed-form element was built. For m = 0 only z_part is set.
struct Witness {
  std::optional<PosRealRoot> beta_prime;
  std::optional<PosRealRoot> beta;
  Int m = 0;
  /// s_beta s_beta' = t_gamma with gamma = beta' (alpha_0 not in beta') or
  /// beta' - c (alpha_0 in beta'); stored as m*gamma over alpha_0..alpha_{n-1}.
  std::vector<Int> translation;
  bool shifted = false;
  std::vector<PosRealRoot> z_part;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct NbhdResult {
  int n = 0;
  /// Sorted, pairwise distinct.
  std::vector<AffinePerm> elements;
  /// Aligned with elements; empty for oracle results.
  std::vector<Witness> witnesses;
  std::optional<Int> common_length;
  Regime regime = Regime::Finite;
  Source source = Source::ClosedForm;

  friend bool operator==(const NbhdResult&, const NbhdResult&) = default;
};

Regime classify_degree(const Degree& d);

/// Roots beta' < c such that for every factor gamma the supports are
/// disjoint, or beta' > gamma and beta' is perpendicular to gamma.
std::vector<PosRealRoot> pi_set(const std::vector<PosRealRoot>& factors, int n);

NbhdResult gamma_id(const Degree& d);

/// Bruhat-maximal elements of {w . u : u in Gamma_d(id)}.
NbhdResult gamma_w(const AffinePerm& w, const Degree& d);

}  // namespace affcurve
