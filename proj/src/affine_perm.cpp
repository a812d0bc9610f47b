#include "affcurve/affine_perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "parallel.hpp"

namespace affcurve {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int mod(Int a, Int n) {
  const Int r = a % n;
  return r < 0 ? r + n : r;
}

void require_same_rank(const AffinePerm& u, const AffinePerm& v) {
  if (u.n() != v.n()) {
    throw InvalidArgument("rank mismatch: " + std::to_string(u.n()) + " vs " + std::to_string(v.n()));
  }
}

void require_index(int i, int n) {
  if (i < 0 || i >= n) {
    throw InvalidArgument("simple reflection index " + std::to_string(i) + " out of range for n=" +
                          std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// AffinePerm

AffinePerm AffinePerm::identity(int n) {
  require_rank(n);
  std::vector<Int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), Int{1});
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::simple(int i, int n) {
  require_index(i, n);
  return identity(n).times_simple(i);
}

AffinePerm AffinePerm::from_window(std::vector<Int> window) {
  const int n = static_cast<int>(window.size());
  require_rank(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  Int shift = 0;
  for (int i = 0; i < n; ++i) {
    const auto r = static_cast<std::size_t>(mod(window[static_cast<std::size_t>(i)], n));
    if (seen[r]) throw InvalidArgument("window entries must be distinct modulo n");
    seen[r] = true;
    shift += window[static_cast<std::size_t>(i)] - (i + 1);
  }
  if (shift != 0) throw InvalidArgument("window must satisfy sum(w(i) - i) = 0");
  return AffinePerm(std::move(window));
}

AffinePerm AffinePerm::from_word(std::span<const int> word, int n) {
  AffinePerm w = identity(n);
  for (int i : word) {
    require_index(i, n);
    w = w.times_simple(i);
  }
  return w;
}

Int AffinePerm::operator()(Int i) const {
  const Int nn = n();
  const Int r = mod(i - 1, nn) + 1;
  return window_[static_cast<std::size_t>(r - 1)] + (i - r);
}

bool AffinePerm::is_identity() const {
  for (std::size_t i = 0; i < window_.size(); ++i) {
    if (window_[i] != static_cast<Int>(i + 1)) return false;
  }
  return true;
}

Int AffinePerm::length() const {
  // Affine inversion count: sum over 1 <= i < j <= n of |floor((w(j) - w(i)) / n)|.
  const Int nn = n();
  Int total = 0;
  for (std::size_t i = 0; i < window_.size(); ++i) {
    for (std::size_t j = i + 1; j < window_.size(); ++j) {
      const Int q = floor_div(window_[j] - window_[i], nn);
      total += q < 0 ? -q : q;
    }
  }
  return total;
}

bool AffinePerm::has_right_descent(int i) const {
  require_index(i, n());
  return (*this)(i) > (*this)(i + 1);
}

bool AffinePerm::has_left_descent(int i) const {
  require_index(i, n());
  return inverse(*this).has_right_descent(i);
}

AffinePerm AffinePerm::times_simple(int i) const {
  require_index(i, n());
  std::vector<Int> w(window_);
  const auto nn = static_cast<std::size_t>(n());
  if (i == 0) {
    const Int first = w[0];
    w[0] = w[nn - 1] - static_cast<Int>(nn);
    w[nn - 1] = first + static_cast<Int>(nn);
  } else {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  }
  return AffinePerm(std::move(w));
}

AffinePerm AffinePerm::simple_times(int i) const {
  require_index(i, n());
  const Int nn = n();
  std::vector<Int> w(window_);
  for (Int& v : w) {
    const Int r = mod(v, nn);
    if (r == i) {
      v += 1;
    } else if (r == mod(i + 1, nn)) {
      v -= 1;
    }
  }
  return AffinePerm(std::move(w));
}

std::size_t AffinePerm::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (Int v : window_) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------

AffinePerm multiply(const AffinePerm& u, const AffinePerm& v) {
  require_same_rank(u, v);
  std::vector<Int> w(static_cast<std::size_t>(u.n()));
  for (int i = 0; i < u.n(); ++i) w[static_cast<std::size_t>(i)] = u(v.window()[static_cast<std::size_t>(i)]);
  return AffinePerm::from_window(std::move(w));
}

AffinePerm inverse(const AffinePerm& w) {
  const Int n = w.n();
  std::vector<Int> inv(static_cast<std::size_t>(n));
  for (Int k = 1; k <= n; ++k) {
    const Int v = w.window()[static_cast<std::size_t>(k - 1)];
    const Int r = mod(v - 1, n) + 1;
    inv[static_cast<std::size_t>(r - 1)] = k - (v - r);
  }
  return AffinePerm::from_window(std::move(inv));
}

AffinePerm power(const AffinePerm& w, Int k) {
  AffinePerm base = k < 0 ? inverse(w) : w;
  Int e = k < 0 ? -k : k;
  AffinePerm acc = AffinePerm::identity(w.n());
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

ReducedWord reduced_word(const AffinePerm& w) {
  ReducedWord letters;
  AffinePerm cur = w;
  while (!cur.is_identity()) {
    int i = 0;
    while (!cur.has_right_descent(i)) ++i;
    cur = cur.times_simple(i);
    letters.push_back(i);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

std::string format_word(const ReducedWord& word) {
  if (word.empty()) return "id";
  std::ostringstream os;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) os << ' ';
    os << 's' << word[k];
  }
  return os.str();
}

TranslationSplit split_translation(const AffinePerm& w) {
  const Int n = w.n();
  TranslationSplit out;
  for (Int v : w.window()) {
    const Int fin = mod(v - 1, n) + 1;
    out.finite.push_back(fin);
    out.lambda.push_back((v - fin) / n);
  }
  return out;
}

Int length_from_translation_split(const AffinePerm& w) {
  const auto [finite, lambda] = split_translation(w);
  Int total = 0;
  for (const auto& g : finite_positive_roots(w.n())) {
    const auto a = static_cast<std::size_t>(g.a - 1);
    const auto b = static_cast<std::size_t>(g.b - 1);
    const Int chi = finite[a] > finite[b] ? 1 : 0;
    const Int val = chi + lambda[a] - lambda[b];
    total += val < 0 ? -val : val;
  }
  return total;
}

AffinePerm reflection(const PosRealRoot& r) {
  const int n = r.n();
  if (r.level() == 0) {
    const auto idx = r.indices();
    ReducedWord word(idx.begin(), idx.end());
    for (auto it = idx.rbegin() + 1; it != idx.rend(); ++it) word.push_back(*it);
    return AffinePerm::from_word(word, n);
  }
  const PosRealRoot beta = r.base();
  return multiply(power(translation_pair(beta), r.level()), reflection(beta));
}

AffinePerm translation_pair(const PosRealRoot& beta) {
  if (beta.level() != 0) throw InvalidArgument("translation_pair needs a root below c");
  return multiply(reflection(beta), reflection(complement_c(beta)));
}

AffinePerm translation(std::span<const Int> lambda) {
  const int n = static_cast<int>(lambda.size());
  require_rank(n);
  if (std::accumulate(lambda.begin(), lambda.end(), Int{0}) != 0) {
    throw InvalidArgument("translation vector must have zero sum");
  }
  std::vector<Int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = (i + 1) + n * lambda[static_cast<std::size_t>(i)];
  return AffinePerm::from_window(std::move(w));
}

AffinePerm translation(const FiniteRoot& gamma, int n, Int m) {
  require_rank(n);
  std::vector<Int> lambda(static_cast<std::size_t>(n), 0);
  if (gamma.a < 1 || gamma.a > n || gamma.b < 1 || gamma.b > n || gamma.a == gamma.b) {
    throw InvalidArgument("finite root indices out of range");
  }
  lambda[static_cast<std::size_t>(gamma.a - 1)] += m;
  lambda[static_cast<std::size_t>(gamma.b - 1)] -= m;
  return translation(lambda);
}

AffinePerm translation_from_root_coeffs(std::span<const Int> coeffs) {
  const int n = static_cast<int>(coeffs.size());
  require_rank(n);
  if (coeffs[0] != 0) throw InvalidArgument("finite root lattice element must not involve alpha_0");
  // alpha_i = eps_i - eps_{i+1}, so lambda_i = c_i - c_{i-1} with c_0 = c_n = 0.
  std::vector<Int> lambda(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const Int cur = i < n ? coeffs[static_cast<std::size_t>(i)] : 0;
    const Int prev = i > 1 ? coeffs[static_cast<std::size_t>(i - 1)] : 0;
    lambda[static_cast<std::size_t>(i - 1)] = cur - prev;
  }
  return translation(lambda);
}

// ---------------------------------------------------------------------------
// AffineRealRoot

AffineRealRoot::AffineRealRoot(int n, Int a, Int b) : n_(n) {
  require_rank(n);
  if (mod(a - b, n) == 0) throw InvalidArgument("e_a - e_b is not a real root when a = b mod n");
  const Int shift = floor_div(a, n) * n;
  a_ = a - shift;
  b_ = b - shift;
}

AffineRealRoot AffineRealRoot::from_positive(const PosRealRoot& r) {
  return AffineRealRoot(r.n(), r.start(), r.start() + r.length() + r.level() * r.n());
}

AffineRealRoot AffineRealRoot::from_finite(const FiniteRoot& r, int n) {
  if (r.a < 1 || r.a > n || r.b < 1 || r.b > n || r.a == r.b) {
    throw InvalidArgument("finite root indices out of range");
  }
  return AffineRealRoot(n, r.a, r.b);
}

std::vector<Int> AffineRealRoot::coeffs() const {
  std::vector<Int> v(static_cast<std::size_t>(n_), 0);
  const Int lo = std::min(a_, b_);
  const Int hi = std::max(a_, b_);
  const Int sign = positive() ? 1 : -1;
  for (Int k = lo; k < hi; ++k) v[static_cast<std::size_t>(mod(k, n_))] += sign;
  return v;
}

PosRealRoot AffineRealRoot::to_positive() const {
  if (!positive()) throw InvalidArgument("root is negative");
  const Int span = b_ - a_;
  const Int level = span / n_;
  return PosRealRoot::from_start_length(n_, static_cast<int>(a_), static_cast<int>(span - level * n_),
                                        level);
}

AffineRealRoot act_on_root(const AffinePerm& w, const AffineRealRoot& r) {
  if (w.n() != r.n()) throw InvalidArgument("rank mismatch between element and root");
  return AffineRealRoot(r.n(), w(r.a()), w(r.b()));
}

// ---------------------------------------------------------------------------
// Bruhat order

bool bruhat_leq(const AffinePerm& u_in, const AffinePerm& v_in) {
  require_same_rank(u_in, v_in);
  AffinePerm u = u_in;
  AffinePerm v = v_in;
  Int lu = u.length();
  Int lv = v.length();
  const int n = u.n();
  // Lifting: for a right descent s of v, u <= v iff us <= vs when us < u,
  // and u <= vs otherwise.
  while (true) {
    if (lu > lv) return false;
    if (lu == lv) return u == v;
    if (lu == 0) return true;
    int s = 0;
    while (s < n && !v.has_right_descent(s)) ++s;
    if (u.has_right_descent(s)) {
      u = u.times_simple(s);
      --lu;
    }
    v = v.times_simple(s);
    --lv;
  }
}

std::vector<AffinePerm> bruhat_maximal(std::span<const AffinePerm> elements, int threads) {
  std::vector<AffinePerm> pool(elements.begin(), elements.end());
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  std::vector<Int> lengths(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) lengths[i] = pool[i].length();
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lengths[a] > lengths[b]; });

  // Walk length classes from the top. Anything below some element of the
  // input is below a maximal one, and equal-length elements are incomparable.
  const int nthreads = detail::resolve_threads(threads);
  std::vector<AffinePerm> maximal;
  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin;
    while (end < order.size() && lengths[order[end]] == lengths[order[begin]]) ++end;
    const auto count = static_cast<std::ptrdiff_t>(end - begin);
    std::vector<char> keep(static_cast<std::size_t>(count), 1);
    auto dominated = [&](std::ptrdiff_t k) {
      const AffinePerm& e = pool[order[begin + static_cast<std::size_t>(k)]];
      for (const auto& m : maximal) {
        if (bruhat_leq(e, m)) return true;
      }
      return false;
    };
    if (nthreads > 1 && !maximal.empty()) {
#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 16)
      for (std::ptrdiff_t k = 0; k < count; ++k) keep[static_cast<std::size_t>(k)] = dominated(k) ? 0 : 1;
    } else {
      for (std::ptrdiff_t k = 0; k < count; ++k) keep[static_cast<std::size_t>(k)] = dominated(k) ? 0 : 1;
    }
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      if (keep[static_cast<std::size_t>(k)]) maximal.push_back(pool[order[begin + static_cast<std::size_t>(k)]]);
    }
    begin = end;
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

// ---------------------------------------------------------------------------
// Hecke monoid

AffinePerm hecke_mul_simple(const AffinePerm& u, int i) {
  return u.has_right_descent(i) ? u : u.times_simple(i);
}

AffinePerm hecke_mul(const AffinePerm& u, const AffinePerm& v) {
  require_same_rank(u, v);
  AffinePerm acc = u;
  for (int i : reduced_word(v)) acc = hecke_mul_simple(acc, i);
  return acc;
}

AffinePerm hecke_product(std::span<const AffinePerm> factors, int n) {
  AffinePerm acc = AffinePerm::identity(n);
  for (const auto& f : factors) acc = hecke_mul(acc, f);
  return acc;
}

AffinePerm dynkin_rotate(const AffinePerm& w, int k) {
  const int n = w.n();
  std::vector<Int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = w(i - k) + k;
  return AffinePerm::from_window(std::move(out));
}

std::string format_window(const AffinePerm& w) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < w.n(); ++i) {
    if (i) os << ',';
    os << w.window()[static_cast<std::size_t>(i)];
  }
  os << ']';
  return os.str();
}

}  // namespace affcurve
