#include "affcurve/z_elem.hpp"

#include <algorithm>
#include <optional>

namespace affcurve {

namespace {

void require_zero_component(const Degree& d) {
  require_rank(d.n());
  if (!d.has_zero_component()) {
    throw InvalidArgument("degree " + format_degree(d) + " has no zero component");
  }
}

int min_index(const PosRealRoot& r) {
  const auto idx = r.indices();
  return *std::min_element(idx.begin(), idx.end());
}

// Removes the endpoints of `small` that it shares with `big`. Returns nullopt
// when nothing is left.
std::optional<PosRealRoot> trim_shared(const PosRealRoot& small, const PosRealRoot& big) {
  int start = small.start();
  int len = small.length();
  if (small.start() == big.start()) {
    start += 1;
    len -= 1;
  }
  if (len > 0 && small.end() == big.end()) len -= 1;
  if (len <= 0) return std::nullopt;
  return PosRealRoot::from_start_length(small.n(), start, len);
}

}  // namespace

std::vector<PosRealRoot> maximal_roots_leq(const Degree& d) {
  require_zero_component(d);
  std::vector<int> support;
  for (int i = 0; i < d.n(); ++i) {
    if (d[i] > 0) support.push_back(i);
  }
  return cyclic_runs(d.n(), support);
}

std::vector<PosRealRoot> greedy_sequence(const Degree& d) {
  require_zero_component(d);
  std::vector<PosRealRoot> seq;
  Degree rest = d;
  while (!rest.is_zero()) {
    const auto runs = maximal_roots_leq(rest);
    // cyclic_runs orders by start, and runs are disjoint.
    seq.push_back(runs.front());
    rest = sub(rest, coeffs(runs.front()));
  }
  return seq;
}

AffinePerm z(const Degree& d) {
  AffinePerm acc = AffinePerm::identity(d.n());
  for (const auto& r : greedy_sequence(d)) acc = hecke_mul(acc, reflection(r));
  return acc;
}

std::vector<PosRealRoot> normalize_factors(std::vector<PosRealRoot> roots) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < roots.size() && !changed; ++j) {
      for (std::size_t i = 0; i < roots.size() && !changed; ++i) {
        if (i == j) continue;
        const auto& big = roots[i];
        const auto& small = roots[j];
        if (!root_leq(small, big) || is_perp(small, big)) continue;
        // Of two equal roots only the later copy is trimmed.
        if (small == big && j < i) continue;
        const auto trimmed = trim_shared(small, big);
        if (trimmed) {
          roots[j] = *trimmed;
        } else {
          roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(j));
        }
        changed = true;
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const PosRealRoot& a, const PosRealRoot& b) {
    const int ma = min_index(a);
    const int mb = min_index(b);
    if (ma != mb) return ma < mb;
    if (a.length() != b.length()) return a.length() > b.length();
    return a.start() < b.start();
  });
  return roots;
}

ZFactorization z_factorization(const Degree& d) {
  ZFactorization out;
  out.factors = normalize_factors(greedy_sequence(d));
  out.element = AffinePerm::identity(d.n());
  for (const auto& r : out.factors) {
    out.element = multiply(out.element, reflection(r));
    out.length += 2 * r.length() - 1;
  }
  return out;
}

}  // namespace affcurve
