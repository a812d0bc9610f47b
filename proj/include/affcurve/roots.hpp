#pragma once

// Affine root system of type A_{n-1}^(1).
//
// Simple roots are indexed 0..n-1 with alpha_0 the affine node. Every
// positive real root is m*c + p(i,j) where c = alpha_0 + ... + alpha_{n-1}
// and p(i,j) = alpha_i + alpha_{i+1} + ... + alpha_j walks the cyclic
// Dynkin diagram from i to j (wrapping through alpha_{n-1}, alpha_0 when
// i > j). p(i,j) never covers the full circle.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "affcurve/errors.hpp"

namespace affcurve {

using Int = std::int64_t;

/// Smallest rank handled anywhere in the library.
inline constexpr int kMinRank = 3;

void require_rank(int n);

/// Nonnegative coefficient vector over alpha_0..alpha_{n-1}.
class Degree {
 public:
  Degree() = default;
  explicit Degree(std::vector<Int> coeffs);

  static Degree zero(int n);
  /// m * (1,...,1).
  static Degree multiple_of_c(int n, Int m);
  static Degree simple(int n, int i);

  int n() const { return static_cast<int>(coeffs_.size()); }
  Int operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  std::span<const Int> coeffs() const { return coeffs_; }

  Int sum() const;
  Int min() const;
  bool is_zero() const;
  bool has_zero_component() const;

  Degree operator+(const Degree& other) const;

  friend bool operator==(const Degree&, const Degree&) = default;
  // Lexicographic, for ordered containers only. See leq() for the real order.
  friend auto operator<=>(const Degree&, const Degree&) = default;

 private:
  std::vector<Int> coeffs_;
};

/// Componentwise partial order.
bool leq(const Degree& a, const Degree& b);

/// a - b; throws InvalidArgument unless b <= a.
Degree sub(const Degree& a, const Degree& b);

/// Cyclic shift by k: coefficient of alpha_i moves to alpha_{i+k}.
Degree dynkin_rotate(const Degree& d, int k);

/// Positive real root m*c + p(start, end). Stored as (level, start, length)
/// with 1 <= length <= n-1.
class PosRealRoot {
 public:
  /// p(i,j) at the given level; i == j is the simple root alpha_i.
  static PosRealRoot interval(int n, int i, int j, Int level = 0);
  static PosRealRoot from_start_length(int n, int start, int length, Int level = 0);
  static PosRealRoot simple(int n, int i) { return interval(n, i, i); }
  /// Inverse of coeffs(); throws InvalidArgument if the vector is not a
  /// positive real root.
  static PosRealRoot from_coeffs(std::span<const Int> coeffs);

  int n() const { return n_; }
  Int level() const { return level_; }
  int start() const { return start_; }
  int end() const { return (start_ + length_ - 1) % n_; }
  int length() const { return length_; }

  bool contains(int i) const;
  /// Simple indices of the interval in walking order start..end.
  std::vector<int> indices() const;
  /// Interval part only, at level 0.
  PosRealRoot base() const { return from_start_length(n_, start_, length_, 0); }

  friend bool operator==(const PosRealRoot&, const PosRealRoot&) = default;
  friend auto operator<=>(const PosRealRoot& a, const PosRealRoot& b) {
    return std::tie(a.n_, a.level_, a.start_, a.length_) <=>
           std::tie(b.n_, b.level_, b.start_, b.length_);
  }

 private:
  PosRealRoot(int n, Int level, int start, int length)
      : n_(n), level_(level), start_(start), length_(length) {}

  int n_ = 0;
  Int level_ = 0;
  int start_ = 0;
  int length_ = 1;
};

/// Finite root epsilon_a - epsilon_b, 1 <= a, b <= n, a != b.
struct FiniteRoot {
  int a = 1;
  int b = 2;

  bool positive() const { return a < b; }
  friend bool operator==(const FiniteRoot&, const FiniteRoot&) = default;
  friend auto operator<=>(const FiniteRoot&, const FiniteRoot&) = default;
};

/// All of Pi: n(n-1) roots, positive ones first, each group lexicographic.
std::vector<FiniteRoot> finite_roots(int n);
std::vector<FiniteRoot> finite_positive_roots(int n);

/// The n(n-1) level-0 positive real roots, sorted by (start, length).
std::vector<PosRealRoot> all_roots_below_c(int n);

/// Every positive real root whose coefficient vector is <= budget, sorted by
/// (level, start, length).
std::vector<PosRealRoot> roots_within(const Degree& budget);

Degree coeffs(const PosRealRoot& r);

/// Signed coefficient vector over alpha_0..alpha_{n-1} (alpha_0 entry zero).
std::vector<Int> coeffs(const FiniteRoot& r, int n);

/// <a, b^vee> through the cyclic affine Cartan matrix.
Int pairing(std::span<const Int> a, std::span<const Int> b);
Int pairing(const PosRealRoot& a, const PosRealRoot& b);

bool is_perp(const PosRealRoot& a, const PosRealRoot& b);

/// Root order a <= b on coefficient vectors.
bool root_leq(const PosRealRoot& a, const PosRealRoot& b);
bool comparable(const PosRealRoot& a, const PosRealRoot& b);

/// Common support of two roots as sorted simple indices.
std::vector<int> intersection_support(const PosRealRoot& a, const PosRealRoot& b);

/// True when no index of one support equals or is cyclically adjacent to an
/// index of the other.
bool supports_disconnected(const PosRealRoot& a, const PosRealRoot& b);

/// A proper subset of Z/n split into maximal cyclic runs. Each run is returned
/// as a level-0 root; an empty set gives no runs. The full set is rejected.
std::vector<PosRealRoot> cyclic_runs(int n, std::span<const int> indices);

/// The intersection of two level-0 roots: empty, a single root, or the sum of
/// two roots with disconnected supports.
struct Intersection {
  enum class Kind { Empty, Root, TwoRoots };
  Kind kind = Kind::Empty;
  std::vector<PosRealRoot> parts;
};
Intersection classify_intersection(const PosRealRoot& a, const PosRealRoot& b);

/// c - r for a level-0 root r.
PosRealRoot complement_c(const PosRealRoot& r);

/// r = m*c + beta with beta < c.
std::pair<Int, PosRealRoot> decompose(const PosRealRoot& r);

PosRealRoot dynkin_rotate(const PosRealRoot& r, int k);

/// "a0+a1" for level-0 roots, "p(i,j)@m" otherwise.
std::string format_root(const PosRealRoot& r);
/// Accepts "a0+a1+..." (any order, must form a root) and "p(i,j)@m" / "p(i,j)".
PosRealRoot parse_root(std::string_view text, int n);

std::string format_degree(const Degree& d);

}  // namespace affcurve
