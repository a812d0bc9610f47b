#include "affcurve/neighborhoods.hpp"

#include <algorithm>
#include <numeric>

namespace affcurve {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Finite: return "finite";
    case Regime::Translation: return "translation";
    case Regime::General: return "general";
  }
  return "general";
}

Regime regime_from_string(const std::string& s) {
  if (s == "finite") return Regime::Finite;
  if (s == "translation") return Regime::Translation;
  if (s == "general") return Regime::General;
  throw InvalidArgument("unknown regime '" + s + "'");
}

std::string to_string(Source s) {
  switch (s) {
    case Source::ClosedForm: return "closed-form";
    case Source::HeckeReduction: return "hecke-reduction";
    case Source::Oracle: return "oracle";
  }
  return "oracle";
}

Source source_from_string(const std::string& s) {
  if (s == "closed-form") return Source::ClosedForm;
  if (s == "hecke-reduction") return Source::HeckeReduction;
  if (s == "oracle") return Source::Oracle;
  throw InvalidArgument("unknown source '" + s + "'");
}

Regime classify_degree(const Degree& d) {
  const Int m = d.min();
  if (m == 0) return Regime::Finite;
  return sub(d, Degree::multiple_of_c(d.n(), m)).is_zero() ? Regime::Translation : Regime::General;
}

std::vector<PosRealRoot> pi_set(const std::vector<PosRealRoot>& factors, int n) {
  std::vector<PosRealRoot> out;
  for (const auto& bp : all_roots_below_c(n)) {
    const bool ok = std::all_of(factors.begin(), factors.end(), [&](const PosRealRoot& g) {
      if (intersection_support(bp, g).empty()) return true;
      return bp != g && root_leq(g, bp) && is_perp(bp, g);
    });
    if (ok) out.push_back(bp);
  }
  return out;
}

namespace {

void sort_aligned(NbhdResult& r) {
  std::vector<std::size_t> order(r.elements.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return r.elements[a] < r.elements[b]; });
  std::vector<AffinePerm> els;
  std::vector<Witness> wits;
  for (auto k : order) {
    els.push_back(r.elements[k]);
    if (!r.witnesses.empty()) wits.push_back(r.witnesses[k]);
  }
  r.elements = std::move(els);
  r.witnesses = std::move(wits);
}

std::optional<Int> uniform_length(const std::vector<AffinePerm>& els) {
  if (els.empty()) return std::nullopt;
  const Int l = els.front().length();
  for (const auto& e : els) {
    if (e.length() != l) return std::nullopt;
  }
  return l;
}

}  // namespace

NbhdResult gamma_id(const Degree& d) {
  const int n = d.n();
  require_rank(n);
  NbhdResult out;
  out.n = n;
  out.regime = classify_degree(d);
  out.source = Source::ClosedForm;

  const Int m = d.min();
  if (m == 0) {
    const auto f = z_factorization(d);
    Witness w;
    w.z_part = f.factors;
    out.elements.push_back(f.element);
    out.witnesses.push_back(std::move(w));
    out.common_length = f.length;
    return out;
  }

  const auto f = z_factorization(sub(d, Degree::multiple_of_c(n, m)));
  for (const auto& bp : pi_set(f.factors, n)) {
    const PosRealRoot beta = complement_c(bp);
    const AffinePerm t = power(translation_pair(beta), m);
    Witness w;
    w.beta_prime = bp;
    w.beta = beta;
    w.m = m;
    w.shifted = bp.contains(0);
    const Degree cb = coeffs(bp);
    w.translation.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      w.translation[static_cast<std::size_t>(i)] = m * (cb[i] - (w.shifted ? 1 : 0));
    }
    w.z_part = f.factors;
    out.elements.push_back(multiply(t, f.element));
    out.witnesses.push_back(std::move(w));
  }
  out.common_length = 2 * m * (n - 1) + f.length;
  sort_aligned(out);
  return out;
}

NbhdResult gamma_w(const AffinePerm& w, const Degree& d) {
  if (w.n() != d.n()) throw InvalidArgument("rank mismatch between element and degree");
  const NbhdResult base = gamma_id(d);
  if (w.is_identity()) return base;

  std::vector<AffinePerm> products;
  products.reserve(base.elements.size());
  for (const auto& u : base.elements) products.push_back(hecke_mul(w, u));
  const auto maximal = bruhat_maximal(products);

  NbhdResult out;
  out.n = d.n();
  out.regime = base.regime;
  out.source = Source::HeckeReduction;
  for (const auto& v : maximal) {
    out.elements.push_back(v);
    // The witness of the first u producing v.
    const auto it = std::find(products.begin(), products.end(), v);
    out.witnesses.push_back(base.witnesses[static_cast<std::size_t>(it - products.begin())]);
  }
  out.common_length = uniform_length(out.elements);
  return out;
}

}  // namespace affcurve
