#include "affcurve/check.hpp"

#include <algorithm>
#include <functional>

namespace affcurve {

std::vector<Degree> degrees_up_to(int n, Int max_sum) {
  require_rank(n);
  if (max_sum < 0) throw InvalidArgument("degree sum bound must be nonnegative");
  std::vector<Degree> out;
  std::vector<Int> cur(static_cast<std::size_t>(n), 0);
  std::function<void(int, Int)> fill = [&](int i, Int left) {
    if (i == n) {
      out.emplace_back(cur);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(i)] = v;
      fill(i + 1, left - v);
    }
  };
  fill(0, max_sum);
  return out;
}

CheckOutcome check_degree(const AffinePerm& start, const Degree& d, const OracleOptions& options) {
  CheckOutcome out;
  out.degree = d;
  out.start = start;
  out.formula = gamma_w(start, d);
  const auto run = neighborhood_bfs(start, d, options);
  out.oracle = run.result();
  out.states = run.state_count();
  out.pass = out.formula.elements == out.oracle.elements;
  if (!out.pass) {
    const auto& f = out.formula.elements;
    const auto& o = out.oracle.elements;
    std::vector<AffinePerm> diff;
    std::set_symmetric_difference(f.begin(), f.end(), o.begin(), o.end(), std::back_inserter(diff));
    out.mismatch = diff.front();
    out.chain = run.chain_to(diff.front());
  }
  return out;
}

}  // namespace affcurve
