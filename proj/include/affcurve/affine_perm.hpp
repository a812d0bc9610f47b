#pragma once

// The affine Weyl group of type A_{n-1}^(1) as affine permutations.
//
// An element is a bijection w of Z with w(i+n) = w(i) + n and
// sum_{i=1..n} (w(i) - i) = 0, stored by its window [w(1), ..., w(n)].
// Products compose as functions: (uv)(i) = u(v(i)). Right multiplication by
// s_i swaps positions i and i+1; s_0 swaps positions 0 and 1.
//
// Affine real roots are modelled as e_a - e_b for integers a, b with
// a != b (mod n) and e_{a+n} = e_a - delta, so alpha_i = e_i - e_{i+1} for
// every i in 0..n-1, and w acts by w(e_a - e_b) = e_{w(a)} - e_{w(b)}.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "affcurve/roots.hpp"

namespace affcurve {

class AffinePerm {
 public:
  AffinePerm() = default;

  static AffinePerm identity(int n);
  /// The simple reflection s_i, 0 <= i < n.
  static AffinePerm simple(int i, int n);
  /// Validates bijectivity mod n and the zero-sum normalization.
  static AffinePerm from_window(std::vector<Int> window);
  /// Product s_{w[0]} s_{w[1]} ... of simple reflections.
  static AffinePerm from_word(std::span<const int> word, int n);

  int n() const { return static_cast<int>(window_.size()); }
  std::span<const Int> window() const { return window_; }
  /// w(i) for any integer i.
  Int operator()(Int i) const;

  bool is_identity() const;
  /// Coxeter length via the affine inversion count.
  Int length() const;
  /// True when w s_i < w.
  bool has_right_descent(int i) const;
  /// True when s_i w < w.
  bool has_left_descent(int i) const;
  /// w s_i.
  AffinePerm times_simple(int i) const;
  /// s_i w.
  AffinePerm simple_times(int i) const;

  friend bool operator==(const AffinePerm&, const AffinePerm&) = default;
  /// Lexicographic on windows; a total order for deterministic containers.
  friend auto operator<=>(const AffinePerm&, const AffinePerm&) = default;

  std::size_t hash() const;

 private:
  explicit AffinePerm(std::vector<Int> window) : window_(std::move(window)) {}
  std::vector<Int> window_;
};

struct AffinePermHash {
  std::size_t operator()(const AffinePerm& w) const { return w.hash(); }
};

AffinePerm multiply(const AffinePerm& u, const AffinePerm& v);
AffinePerm inverse(const AffinePerm& w);
AffinePerm power(const AffinePerm& w, Int k);

/// Simple-reflection indices, evaluated left to right.
using ReducedWord = std::vector<int>;

/// Greedy right-descent word; evaluates to w and has length l(w).
ReducedWord reduced_word(const AffinePerm& w);
std::string format_word(const ReducedWord& word);

/// The finite part and translation of w = v t_lambda: v is a permutation of
/// 1..n (as a window) and lambda lies in Z^n with zero sum.
struct TranslationSplit {
  std::vector<Int> finite;
  std::vector<Int> lambda;
};
TranslationSplit split_translation(const AffinePerm& w);

/// Length of v t_lambda from the finite part and translation:
/// sum over positive finite roots gamma of |chi(v gamma < 0) + <lambda, gamma>|.
Int length_from_translation_split(const AffinePerm& w);

/// Reflection in a positive real root. Level 0 roots use the palindromic word
/// s_i s_{i+1} ... s_j ... s_{i+1} s_i; level m > 0 uses
/// (s_beta s_beta')^m s_beta with beta' = c - beta.
AffinePerm reflection(const PosRealRoot& r);

/// s_beta s_{c - beta} for a root beta below c: a translation.
AffinePerm translation_pair(const PosRealRoot& beta);

/// t_lambda for lambda in Z^n (epsilon coordinates, zero sum).
AffinePerm translation(std::span<const Int> lambda);
/// t_{m gamma} for a finite root gamma = epsilon_a - epsilon_b.
AffinePerm translation(const FiniteRoot& gamma, int n, Int m = 1);
/// t_gamma for gamma given by coefficients over alpha_1..alpha_{n-1}
/// (the alpha_0 entry of the vector must be zero).
AffinePerm translation_from_root_coeffs(std::span<const Int> coeffs);

/// Signed affine real root e_a - e_b, normalized so that 0 <= a < n.
class AffineRealRoot {
 public:
  AffineRealRoot(int n, Int a, Int b);
  static AffineRealRoot from_positive(const PosRealRoot& r);
  static AffineRealRoot from_finite(const FiniteRoot& r, int n);

  int n() const { return n_; }
  Int a() const { return a_; }
  Int b() const { return b_; }
  bool positive() const { return a_ < b_; }
  AffineRealRoot negated() const { return AffineRealRoot(n_, b_, a_); }
  /// Signed coefficient vector over alpha_0..alpha_{n-1}.
  std::vector<Int> coeffs() const;
  /// Throws unless positive.
  PosRealRoot to_positive() const;

  friend bool operator==(const AffineRealRoot&, const AffineRealRoot&) = default;

 private:
  int n_;
  Int a_;
  Int b_;
};

AffineRealRoot act_on_root(const AffinePerm& w, const AffineRealRoot& r);

bool bruhat_leq(const AffinePerm& u, const AffinePerm& v);

/// Bruhat-maximal elements of the input, deduplicated and sorted.
/// threads <= 1 runs the serial reference; otherwise the OpenMP kernel.
std::vector<AffinePerm> bruhat_maximal(std::span<const AffinePerm> elements, int threads = 1);

/// u * s_i in the Hecke monoid.
AffinePerm hecke_mul_simple(const AffinePerm& u, int i);
/// Demazure product: folds a reduced word of v into u.
AffinePerm hecke_mul(const AffinePerm& u, const AffinePerm& v);
/// Left-to-right Hecke product of a sequence.
AffinePerm hecke_product(std::span<const AffinePerm> factors, int n);

/// Image under the Dynkin rotation s_i -> s_{i+k}.
AffinePerm dynkin_rotate(const AffinePerm& w, int k);

std::string format_window(const AffinePerm& w);

}  // namespace affcurve

template <>
struct std::hash<affcurve::AffinePerm> {
  std::size_t operator()(const affcurve::AffinePerm& w) const { return w.hash(); }
};
