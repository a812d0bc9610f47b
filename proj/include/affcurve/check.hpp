#pragma once

// Closed form against oracle, one degree at a time.

#include <optional>
#include <vector>

#include "affcurve/neighborhoods.hpp"
#include "affcurve/oracle.hpp"

namespace affcurve {

/// Every degree of rank n with entry sum <= max_sum, in lexicographic order.
std::vector<Degree> degrees_up_to(int n, Int max_sum);

struct CheckOutcome {
  Degree degree;
  AffinePerm start;
  bool pass = false;
  NbhdResult formula;
  NbhdResult oracle;
  /// First element in one set but not the other.
  std::optional<AffinePerm> mismatch;
  /// Oracle chain reaching the mismatch, when the oracle found it.
  std::optional<Chain> chain;
  std::size_t states = 0;
};

CheckOutcome check_degree(const AffinePerm& start, const Degree& d, const OracleOptions& options = {});

}  // namespace affcurve
