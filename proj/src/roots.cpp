#include "affcurve/roots.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace affcurve {

namespace {

int mod(Int a, int n) {
  const Int r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void require_same_rank(int a, int b) {
  if (a != b) {
    throw InvalidArgument("rank mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.empty()) throw InvalidArgument("empty integer in " + std::string(what));
  std::size_t pos = 0;
  bool neg = false;
  if (s[0] == '-' || s[0] == '+') {
    neg = s[0] == '-';
    pos = 1;
  }
  if (pos == s.size()) throw InvalidArgument("malformed integer in " + std::string(what));
  Int value = 0;
  for (; pos < s.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(s[pos]))) {
      throw InvalidArgument("malformed integer '" + std::string(s) + "' in " + std::string(what));
    }
    value = value * 10 + (s[pos] - '0');
  }
  return neg ? -value : value;
}

}  // namespace

void require_rank(int n) {
  if (n < kMinRank) {
    throw InvalidArgument("rank n must be at least 3, got " + std::to_string(n));
  }
}

// ---------------------------------------------------------------------------
// Degree

Degree::Degree(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  for (Int c : coeffs_) {
    if (c < 0) throw InvalidArgument("degree entries must be nonnegative");
  }
}

Degree Degree::zero(int n) {
  require_rank(n);
  return Degree(std::vector<Int>(static_cast<std::size_t>(n), 0));
}

Degree Degree::multiple_of_c(int n, Int m) {
  require_rank(n);
  return Degree(std::vector<Int>(static_cast<std::size_t>(n), m));
}

Degree Degree::simple(int n, int i) {
  require_rank(n);
  std::vector<Int> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(mod(i, n))] = 1;
  return Degree(std::move(v));
}

Int Degree::sum() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), Int{0}); }

Int Degree::min() const {
  return coeffs_.empty() ? 0 : *std::min_element(coeffs_.begin(), coeffs_.end());
}

bool Degree::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

bool Degree::has_zero_component() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

Degree Degree::operator+(const Degree& other) const {
  require_same_rank(n(), other.n());
  std::vector<Int> v(coeffs_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.coeffs_[i];
  return Degree(std::move(v));
}

bool leq(const Degree& a, const Degree& b) {
  require_same_rank(a.n(), b.n());
  for (int i = 0; i < a.n(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Degree sub(const Degree& a, const Degree& b) {
  if (!leq(b, a)) {
    throw InvalidArgument("cannot subtract " + format_degree(b) + " from " + format_degree(a));
  }
  std::vector<Int> v(a.coeffs().begin(), a.coeffs().end());
  for (int i = 0; i < a.n(); ++i) v[static_cast<std::size_t>(i)] -= b[i];
  return Degree(std::move(v));
}

Degree dynkin_rotate(const Degree& d, int k) {
  const int n = d.n();
  std::vector<Int> v(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(mod(i + k, n))] = d[i];
  return Degree(std::move(v));
}

// ---------------------------------------------------------------------------
// PosRealRoot

PosRealRoot PosRealRoot::interval(int n, int i, int j, Int level) {
  require_rank(n);
  if (i < 0 || i >= n || j < 0 || j >= n) {
    throw InvalidArgument("interval endpoints must lie in [0, n)");
  }
  const int length = mod(j - i, n) + 1;
  return from_start_length(n, i, length, level);
}

PosRealRoot PosRealRoot::from_start_length(int n, int start, int length, Int level) {
  require_rank(n);
  if (length < 1 || length > n - 1) {
    throw InvalidArgument("root interval must cover between 1 and n-1 simple roots");
  }
  if (level < 0) throw InvalidArgument("root level must be nonnegative");
  return PosRealRoot(n, level, mod(start, n), length);
}

PosRealRoot PosRealRoot::from_coeffs(std::span<const Int> v) {
  const int n = static_cast<int>(v.size());
  require_rank(n);
  const Int m = *std::min_element(v.begin(), v.end());
  if (m < 0) throw InvalidArgument("coefficient vector has a negative entry");
  std::vector<int> support;
  for (int i = 0; i < n; ++i) {
    const Int r = v[static_cast<std::size_t>(i)] - m;
    if (r > 1) throw InvalidArgument("coefficient vector is not a real root");
    if (r == 1) support.push_back(i);
  }
  if (support.empty()) throw InvalidArgument("coefficient vector is imaginary (a multiple of c)");
  const auto runs = cyclic_runs(n, support);
  if (runs.size() != 1) throw InvalidArgument("support is not a cyclic interval");
  return from_start_length(n, runs[0].start(), runs[0].length(), m);
}

bool PosRealRoot::contains(int i) const { return mod(i - start_, n_) < length_; }

std::vector<int> PosRealRoot::indices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length_));
  for (int k = 0; k < length_; ++k) out.push_back((start_ + k) % n_);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<FiniteRoot> finite_positive_roots(int n) {
  std::vector<FiniteRoot> out;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) out.push_back({a, b});
  return out;
}

std::vector<FiniteRoot> finite_roots(int n) {
  auto out = finite_positive_roots(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b < a; ++b) out.push_back({a, b});
  return out;
}

std::vector<PosRealRoot> all_roots_below_c(int n) {
  require_rank(n);
  std::vector<PosRealRoot> out;
  out.reserve(static_cast<std::size_t>(n * (n - 1)));
  for (int s = 0; s < n; ++s)
    for (int len = 1; len < n; ++len) out.push_back(PosRealRoot::from_start_length(n, s, len));
  return out;
}

std::vector<PosRealRoot> roots_within(const Degree& budget) {
  const int n = budget.n();
  require_rank(n);
  std::vector<PosRealRoot> out;
  for (Int m = 0; m <= budget.min(); ++m) {
    for (const auto& base : all_roots_below_c(n)) {
      bool fits = true;
      for (int i : base.indices()) {
        if (budget[i] < m + 1) {
          fits = false;
          break;
        }
      }
      if (fits) out.push_back(PosRealRoot::from_start_length(n, base.start(), base.length(), m));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Degree coeffs(const PosRealRoot& r) {
  std::vector<Int> v(static_cast<std::size_t>(r.n()), r.level());
  for (int i : r.indices()) v[static_cast<std::size_t>(i)] += 1;
  return Degree(std::move(v));
}

std::vector<Int> coeffs(const FiniteRoot& r, int n) {
  if (r.a < 1 || r.a > n || r.b < 1 || r.b > n || r.a == r.b) {
    throw InvalidArgument("finite root indices out of range");
  }
  // epsilon_a - epsilon_b = +-(alpha_lo + ... + alpha_{hi-1}).
  std::vector<Int> v(static_cast<std::size_t>(n), 0);
  const int lo = std::min(r.a, r.b);
  const int hi = std::max(r.a, r.b);
  const Int sign = r.a < r.b ? 1 : -1;
  for (int i = lo; i < hi; ++i) v[static_cast<std::size_t>(i)] = sign;
  return v;
}

Int pairing(std::span<const Int> a, std::span<const Int> b) {
  require_same_rank(static_cast<int>(a.size()), static_cast<int>(b.size()));
  const int n = static_cast<int>(a.size());
  Int total = 0;
  for (int i = 0; i < n; ++i) {
    const Int ai = a[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    // Row i of the cyclic Cartan matrix: 2 on the diagonal, -1 at i +- 1.
    total += ai * (2 * b[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(mod(i - 1, n))] -
                   b[static_cast<std::size_t>(mod(i + 1, n))]);
  }
  return total;
}

Int pairing(const PosRealRoot& a, const PosRealRoot& b) {
  return pairing(coeffs(a).coeffs(), coeffs(b).coeffs());
}

bool is_perp(const PosRealRoot& a, const PosRealRoot& b) { return pairing(a, b) == 0; }

bool root_leq(const PosRealRoot& a, const PosRealRoot& b) { return leq(coeffs(a), coeffs(b)); }

bool comparable(const PosRealRoot& a, const PosRealRoot& b) {
  return root_leq(a, b) || root_leq(b, a);
}

std::vector<int> intersection_support(const PosRealRoot& a, const PosRealRoot& b) {
  require_same_rank(a.n(), b.n());
  const Degree ca = coeffs(a);
  const Degree cb = coeffs(b);
  std::vector<int> out;
  for (int i = 0; i < a.n(); ++i) {
    if (ca[i] > 0 && cb[i] > 0) out.push_back(i);
  }
  return out;
}

bool supports_disconnected(const PosRealRoot& a, const PosRealRoot& b) {
  require_same_rank(a.n(), b.n());
  const Degree ca = coeffs(a);
  const Degree cb = coeffs(b);
  const int n = a.n();
  for (int i = 0; i < n; ++i) {
    if (ca[i] == 0) continue;
    if (cb[i] > 0 || cb[mod(i - 1, n)] > 0 || cb[mod(i + 1, n)] > 0) return false;
  }
  return true;
}

std::vector<PosRealRoot> cyclic_runs(int n, std::span<const int> indices) {
  require_rank(n);
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (int i : indices) in[static_cast<std::size_t>(mod(i, n))] = true;
  const auto count = std::count(in.begin(), in.end(), true);
  if (count == n) throw InvalidArgument("support covers every simple root");
  std::vector<PosRealRoot> runs;
  if (count == 0) return runs;
  for (int s = 0; s < n; ++s) {
    // A run starts at s when s is in the set and its predecessor is not.
    if (!in[static_cast<std::size_t>(s)] || in[static_cast<std::size_t>(mod(s - 1, n))]) continue;
    int len = 0;
    while (in[static_cast<std::size_t>((s + len) % n)]) ++len;
    runs.push_back(PosRealRoot::from_start_length(n, s, len));
  }
  return runs;
}

Intersection classify_intersection(const PosRealRoot& a, const PosRealRoot& b) {
  if (a.level() != 0 || b.level() != 0) {
    throw InvalidArgument("intersection is defined for roots below c");
  }
  const auto common = intersection_support(a, b);
  Intersection out;
  out.parts = cyclic_runs(a.n(), common);
  switch (out.parts.size()) {
    case 0: out.kind = Intersection::Kind::Empty; break;
    case 1: out.kind = Intersection::Kind::Root; break;
    default: out.kind = Intersection::Kind::TwoRoots; break;
  }
  return out;
}

PosRealRoot complement_c(const PosRealRoot& r) {
  if (r.level() != 0) throw InvalidArgument("complement_c needs a root below c");
  return PosRealRoot::from_start_length(r.n(), r.start() + r.length(), r.n() - r.length());
}

std::pair<Int, PosRealRoot> decompose(const PosRealRoot& r) { return {r.level(), r.base()}; }

PosRealRoot dynkin_rotate(const PosRealRoot& r, int k) {
  return PosRealRoot::from_start_length(r.n(), r.start() + k, r.length(), r.level());
}

// ---------------------------------------------------------------------------
// Text forms

std::string format_root(const PosRealRoot& r) {
  std::ostringstream os;
  if (r.level() == 0) {
    auto idx = r.indices();
    std::sort(idx.begin(), idx.end());
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (k) os << '+';
      os << 'a' << idx[k];
    }
  } else {
    os << "p(" << r.start() << ',' << r.end() << ")@" << r.level();
  }
  return os.str();
}

PosRealRoot parse_root(std::string_view text, int n) {
  require_rank(n);
  text = trim(text);
  if (text.empty()) throw InvalidArgument("empty root");
  if (text[0] == 'p') {
    const auto open = text.find('(');
    const auto comma = text.find(',');
    const auto close = text.find(')');
    if (open != 1 || comma == std::string_view::npos || close == std::string_view::npos ||
        !(open < comma && comma < close)) {
      throw InvalidArgument("malformed root '" + std::string(text) + "', expected p(i,j)@m");
    }
    const Int i = parse_int(text.substr(open + 1, comma - open - 1), "root");
    const Int j = parse_int(text.substr(comma + 1, close - comma - 1), "root");
    Int level = 0;
    auto rest = trim(text.substr(close + 1));
    if (!rest.empty()) {
      if (rest[0] != '@') throw InvalidArgument("malformed root level in '" + std::string(text) + "'");
      level = parse_int(rest.substr(1), "root level");
    }
    if (i < 0 || i >= n || j < 0 || j >= n) throw InvalidArgument("root endpoint out of range");
    return PosRealRoot::interval(n, static_cast<int>(i), static_cast<int>(j), level);
  }
  std::vector<Int> v(static_cast<std::size_t>(n), 0);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto plus = text.find('+', pos);
    auto term = trim(text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos));
    if (term.size() < 2 || term[0] != 'a') {
      throw InvalidArgument("malformed root term '" + std::string(term) + "'");
    }
    const Int i = parse_int(term.substr(1), "root");
    if (i < 0 || i >= n) throw InvalidArgument("simple root index out of range");
    v[static_cast<std::size_t>(i)] += 1;
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  return PosRealRoot::from_coeffs(v);
}

std::string format_degree(const Degree& d) {
  std::ostringstream os;
  for (int i = 0; i < d.n(); ++i) {
    if (i) os << ',';
    os << d[i];
  }
  return os.str();
}

}  // namespace affcurve
