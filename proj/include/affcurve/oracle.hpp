#pragma once

// Ground-truth curve neighborhoods by exhaustive chain search in the moment
// graph. Vertices are group elements; u and u s_alpha are joined by an edge
// labeled by the positive real root alpha. A chain's degree is the sum of its
// labels. Gamma_d(u) is the set of Bruhat-maximal elements reachable from
// some u' <= u by a chain of degree <= d.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "affcurve/affine_perm.hpp"
#include "affcurve/neighborhoods.hpp"
#include "affcurve/roots.hpp"

namespace affcurve {

/// Longest element accepted by lower_interval.
inline constexpr Int kLowerIntervalMaxLength = 12;

/// {u' : u' <= u} from the subwords of a reduced word of u, sorted.
std::vector<AffinePerm> lower_interval(const AffinePerm& u);

struct OracleOptions {
  /// Only use edge labels below c.
  bool level0_only = false;
  /// Cap on stored search states; exceeding it throws ResourceLimit.
  std::size_t max_states = 4'000'000;
  /// 1 runs the serial reference, 0 uses every OpenMP thread.
  int threads = 1;
};

struct ChainStep {
  PosRealRoot root;
  AffinePerm to;
};

struct Chain {
  AffinePerm start;
  std::vector<ChainStep> steps;
  Degree degree;

  const AffinePerm& end() const { return steps.empty() ? start : steps.back().to; }
};

/// Multiplies out the recorded reflections; throws InvalidArgument if a step
/// does not land on the recorded element.
AffinePerm replay(const Chain& chain);

class OracleRun {
 public:
  struct State {
    AffinePerm element;
    Degree spent;
    std::int64_t parent = -1;
    std::int32_t root = -1;
  };

  const NbhdResult& result() const { return result_; }
  /// Every element reached, sorted.
  const std::vector<AffinePerm>& visited() const { return visited_; }
  std::size_t state_count() const { return states_.size(); }
  const Degree& budget() const { return budget_; }

  /// A stored chain ending at v; nullopt when v was never reached.
  std::optional<Chain> chain_to(const AffinePerm& v) const;

 private:
  friend OracleRun neighborhood_bfs(const AffinePerm&, const Degree&, const OracleOptions&);
  Degree budget_;
  std::vector<PosRealRoot> roots_;
  std::vector<State> states_;
  std::vector<AffinePerm> visited_;
  NbhdResult result_;
};

OracleRun neighborhood_bfs(const AffinePerm& u, const Degree& d, const OracleOptions& options = {});

struct MomentGraphSlice {
  struct Edge {
    AffinePerm from;
    AffinePerm to;
    PosRealRoot root;
  };
  std::vector<AffinePerm> vertices;
  /// Each undirected edge once, with from < to.
  std::vector<Edge> edges;
};

/// Everything reachable from id by chains of degree <= budget, with every
/// edge between those vertices whose label fits the budget.
MomentGraphSlice moment_graph_slice(int n, const Degree& budget, const OracleOptions& options = {});

}  // namespace affcurve
