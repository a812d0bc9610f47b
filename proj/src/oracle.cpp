#include "affcurve/oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "parallel.hpp"

namespace affcurve {

std::vector<AffinePerm> lower_interval(const AffinePerm& u) {
  if (u.length() > kLowerIntervalMaxLength) {
    throw ResourceLimit("lower interval of an element of length " + std::to_string(u.length()) +
                        " exceeds the cap of " + std::to_string(kLowerIntervalMaxLength));
  }
  // Subword products, one letter at a time.
  std::unordered_set<AffinePerm, AffinePermHash> seen{AffinePerm::identity(u.n())};
  for (int s : reduced_word(u)) {
    std::vector<AffinePerm> grown;
    grown.reserve(seen.size());
    for (const auto& x : seen) grown.push_back(x.times_simple(s));
    seen.insert(grown.begin(), grown.end());
  }
  std::vector<AffinePerm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

AffinePerm replay(const Chain& chain) {
  AffinePerm cur = chain.start;
  for (const auto& step : chain.steps) {
    cur = multiply(cur, reflection(step.root));
    if (cur != step.to) throw InvalidArgument("chain step does not land on its recorded element");
  }
  return cur;
}

std::optional<Chain> OracleRun::chain_to(const AffinePerm& v) const {
  for (std::size_t k = 0; k < states_.size(); ++k) {
    if (states_[k].element != v) continue;
    std::vector<std::size_t> path;
    for (std::int64_t s = static_cast<std::int64_t>(k); s >= 0; s = states_[static_cast<std::size_t>(s)].parent) {
      path.push_back(static_cast<std::size_t>(s));
    }
    std::reverse(path.begin(), path.end());
    Chain c;
    c.start = states_[path.front()].element;
    c.degree = states_[k].spent;
    for (std::size_t p = 1; p < path.size(); ++p) {
      const auto& st = states_[path[p]];
      c.steps.push_back({roots_[static_cast<std::size_t>(st.root)], st.element});
    }
    return c;
  }
  return std::nullopt;
}

namespace {

struct Edge {
  AffinePerm reflection;
  Degree coeffs;
};

using ParetoMap = std::unordered_map<AffinePerm, std::vector<std::size_t>, AffinePermHash>;

using State = OracleRun::State;

bool dominated(const ParetoMap& visited, const std::vector<State>& states, const AffinePerm& w,
               const Degree& spent) {
  const auto it = visited.find(w);
  if (it == visited.end()) return false;
  for (std::size_t k : it->second) {
    if (leq(states[k].spent, spent)) return true;
  }
  return false;
}

// Inserts unless an existing state of the same element has spent no larger.
// Existing states that the new one dominates leave the Pareto set.
bool insert_state(ParetoMap& visited, std::vector<State>& states, State st, std::size_t cap) {
  auto& front = visited[st.element];
  for (std::size_t k : front) {
    if (leq(states[k].spent, st.spent)) return false;
  }
  std::erase_if(front, [&](std::size_t k) { return leq(st.spent, states[k].spent); });
  if (states.size() >= cap) {
    throw ResourceLimit("oracle search exceeded " + std::to_string(cap) + " states");
  }
  front.push_back(states.size());
  states.push_back(std::move(st));
  return true;
}

bool alive(const ParetoMap& visited, std::size_t k, const State& st) {
  const auto& front = visited.at(st.element);
  return std::find(front.begin(), front.end(), k) != front.end();
}

}  // namespace

OracleRun neighborhood_bfs(const AffinePerm& u, const Degree& d, const OracleOptions& options) {
  if (u.n() != d.n()) throw InvalidArgument("rank mismatch between element and degree");
  const int n = d.n();
  OracleRun run;
  run.budget_ = d;
  for (const auto& r : roots_within(d)) {
    if (options.level0_only && r.level() != 0) continue;
    run.roots_.push_back(r);
  }
  std::vector<Edge> edges;
  edges.reserve(run.roots_.size());
  for (const auto& r : run.roots_) edges.push_back({reflection(r), coeffs(r)});

  auto& states = run.states_;
  ParetoMap visited;
  std::vector<std::size_t> frontier;
  for (const auto& start : lower_interval(u)) {
    if (insert_state(visited, states, {start, Degree::zero(n), -1, -1}, options.max_states)) {
      frontier.push_back(states.size() - 1);
    }
  }

  const int nthreads = detail::resolve_threads(options.threads);
  while (!frontier.empty()) {
    // States superseded since they were queued add nothing new.
    std::erase_if(frontier, [&](std::size_t k) { return !alive(visited, k, states[k]); });
    std::vector<std::size_t> next;

    if (nthreads <= 1) {
      for (std::size_t k : frontier) {
        const State cur = states[k];
        for (std::size_t e = 0; e < edges.size(); ++e) {
          const Degree spent = cur.spent + edges[e].coeffs;
          if (!leq(spent, d)) continue;
          State st{multiply(cur.element, edges[e].reflection), spent, static_cast<std::int64_t>(k),
                   static_cast<std::int32_t>(e)};
          if (insert_state(visited, states, std::move(st), options.max_states)) next.push_back(states.size() - 1);
        }
      }
    } else {
      // Generate candidates against a read-only snapshot, then merge serially
      // in (frontier, edge) order so the outcome matches the serial reference.
      const auto count = static_cast<std::ptrdiff_t>(frontier.size());
      std::vector<std::vector<State>> candidates(frontier.size());
#pragma omp parallel for num_threads(nthreads) schedule(dynamic, 8)
      for (std::ptrdiff_t f = 0; f < count; ++f) {
        const std::size_t k = frontier[static_cast<std::size_t>(f)];
        const State& cur = states[k];
        auto& out = candidates[static_cast<std::size_t>(f)];
        for (std::size_t e = 0; e < edges.size(); ++e) {
          Degree spent = cur.spent + edges[e].coeffs;
          if (!leq(spent, d)) continue;
          AffinePerm w = multiply(cur.element, edges[e].reflection);
          if (dominated(visited, states, w, spent)) continue;
          out.push_back({std::move(w), std::move(spent), static_cast<std::int64_t>(k), static_cast<std::int32_t>(e)});
        }
      }
      for (auto& batch : candidates) {
        for (auto& st : batch) {
          if (insert_state(visited, states, std::move(st), options.max_states)) next.push_back(states.size() - 1);
        }
      }
    }
    frontier = std::move(next);
  }

  run.visited_.reserve(visited.size());
  for (const auto& [w, front] : visited) run.visited_.push_back(w);
  std::sort(run.visited_.begin(), run.visited_.end());

  auto& res = run.result_;
  res.n = n;
  res.regime = classify_degree(d);
  res.source = Source::Oracle;
  res.elements = bruhat_maximal(run.visited_, options.threads);
  if (!res.elements.empty()) {
    const Int l = res.elements.front().length();
    if (std::all_of(res.elements.begin(), res.elements.end(), [&](const AffinePerm& e) { return e.length() == l; })) {
      res.common_length = l;
    }
  }
  return run;
}

MomentGraphSlice moment_graph_slice(int n, const Degree& budget, const OracleOptions& options) {
  if (budget.n() != n) throw InvalidArgument("budget has the wrong rank");
  const auto run = neighborhood_bfs(AffinePerm::identity(n), budget, options);
  MomentGraphSlice slice;
  slice.vertices = run.visited();
  const std::unordered_set<AffinePerm, AffinePermHash> in_slice(slice.vertices.begin(), slice.vertices.end());
  std::vector<std::pair<PosRealRoot, AffinePerm>> labels;
  for (const auto& r : roots_within(budget)) {
    if (options.level0_only && r.level() != 0) continue;
    labels.emplace_back(r, reflection(r));
  }
  for (const auto& u : slice.vertices) {
    for (const auto& [r, s] : labels) {
      AffinePerm v = multiply(u, s);
      if (u < v && in_slice.contains(v)) slice.edges.push_back({u, std::move(v), r});
    }
  }
  return slice;
}

}  // namespace affcurve
