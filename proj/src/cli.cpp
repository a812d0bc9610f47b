#include "affcurve/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "affcurve/check.hpp"
#include "affcurve/z_elem.hpp"

namespace affcurve {

namespace {

struct Options {
  int n = 0;
  std::string degree;
  std::string start = "id";
  std::string dot;
  bool json = false;
  bool check_oracle = false;
  bool fast = false;
  int threads = 1;
  Int max_sum = 0;
  std::size_t max_states = OracleOptions{}.max_states;
};

std::vector<Int> to_vec(const Degree& d) { return {d.coeffs().begin(), d.coeffs().end()}; }

OracleOptions oracle_options(const Options& o) {
  OracleOptions opt;
  opt.level0_only = o.fast;
  opt.threads = o.threads;
  opt.max_states = o.max_states;
  return opt;
}

std::string format_vec(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

std::string format_roots(const std::vector<PosRealRoot>& roots) {
  if (roots.empty()) return "(none)";
  std::string s;
  for (std::size_t k = 0; k < roots.size(); ++k) s += (k ? ", " : "") + format_root(roots[k]);
  return s;
}

void print_result(std::ostream& out, const NbhdResult& r) {
  out << "regime: " << to_string(r.regime) << '\n';
  out << "source: " << to_string(r.source) << '\n';
  out << "count: " << r.elements.size() << '\n';
  out << "common_length: " << (r.common_length ? std::to_string(*r.common_length) : "mixed") << '\n';
  for (std::size_t k = 0; k < r.elements.size(); ++k) {
    const auto& e = r.elements[k];
    out << "  " << format_window(e) << "  " << format_word(reduced_word(e)) << "  (length " << e.length() << ')';
    if (k < r.witnesses.size()) {
      const auto& w = r.witnesses[k];
      if (w.beta_prime) {
        out << "  beta'=" << format_root(*w.beta_prime) << " t=" << format_vec(w.translation)
            << (w.shifted ? " shifted" : "");
      }
      if (!w.z_part.empty()) out << "  z=" << format_roots(w.z_part);
    }
    out << '\n';
  }
}

void print_chain(std::ostream& out, const Chain& c) {
  out << "    chain from " << format_window(c.start) << " of degree " << format_degree(c.degree) << ":\n";
  for (const auto& s : c.steps) out << "      * s_{" << format_root(s.root) << "} -> " << format_window(s.to) << '\n';
}

int cmd_gamma(const Options& o, RunReport& rep, std::ostream& out) {
  const Degree d = parse_degree(o.degree, o.n);
  const AffinePerm w = parse_element(o.start, o.n);
  rep.degree = d;
  rep.start = w;
  rep.result = gamma_w(w, d);
  int code = kExitOk;
  if (o.check_oracle) {
    rep.oracle = neighborhood_bfs(w, d, oracle_options(o)).result();
    const bool pass = rep.oracle->elements == rep.result->elements;
    rep.verdict = pass ? "PASS" : "FAIL";
    code = pass ? kExitOk : kExitFail;
  }
  if (!o.json) {
    out << "gamma n=" << o.n << " degree=" << format_degree(d) << " start=" << format_word(reduced_word(w)) << '\n';
    print_result(out, *rep.result);
    if (rep.verdict) out << "oracle: " << *rep.verdict << " (" << rep.oracle->elements.size() << " elements)\n";
  }
  return code;
}

int cmd_zd(const Options& o, RunReport& rep, std::ostream& out) {
  const Degree d = parse_degree(o.degree, o.n);
  rep.degree = d;
  const auto f = z_factorization(d);
  Json factors = Json::array();
  for (const auto& r : f.factors) factors.push_back(format_root(r));
  rep.details = Json{{"element", to_json(f.element)}, {"factors", factors}, {"length", f.length}};
  if (!o.json) {
    out << "zd n=" << o.n << " degree=" << format_degree(d) << '\n';
    out << "element: " << format_window(f.element) << "  " << format_word(reduced_word(f.element)) << '\n';
    out << "factors: " << format_roots(f.factors) << '\n';
    out << "length: " << f.length << '\n';
  }
  return kExitOk;
}

int cmd_oracle(const Options& o, RunReport& rep, std::ostream& out) {
  const Degree d = parse_degree(o.degree, o.n);
  const AffinePerm w = parse_element(o.start, o.n);
  rep.degree = d;
  rep.start = w;
  const auto run = neighborhood_bfs(w, d, oracle_options(o));
  rep.oracle = run.result();
  Json chains = Json::array();
  for (const auto& e : run.result().elements) chains.push_back(to_json(*run.chain_to(e)));
  rep.details = Json{{"states", run.state_count()}, {"visited", run.visited().size()}, {"fast", o.fast}, {"chains", chains}};
  if (!o.json) {
    out << "oracle n=" << o.n << " degree=" << format_degree(d) << " start=" << format_word(reduced_word(w))
        << (o.fast ? " (level-0 edges)" : "") << '\n';
    print_result(out, run.result());
    out << "states: " << run.state_count() << "  visited: " << run.visited().size() << '\n';
  }
  return kExitOk;
}

int cmd_graph(const Options& o, RunReport& rep, std::ostream& out) {
  const Degree budget = parse_degree(o.degree, o.n);
  rep.degree = budget;
  const auto slice = moment_graph_slice(o.n, budget, oracle_options(o));
  std::ofstream file(o.dot);
  if (!file) throw InvalidArgument("cannot write " + o.dot);
  file << to_dot(slice);
  rep.details = Json{{"vertices", slice.vertices.size()}, {"edges", slice.edges.size()}, {"dot", o.dot}};
  if (!o.json) {
    out << "graph n=" << o.n << " budget=" << format_degree(budget) << ": " << slice.vertices.size()
        << " vertices, " << slice.edges.size() << " edges -> " << o.dot << '\n';
  }
  return kExitOk;
}

int cmd_check(const Options& o, RunReport& rep, std::ostream& out) {
  const AffinePerm w = parse_element(o.start, o.n);
  rep.start = w;
  Json rows = Json::array();
  std::size_t failures = 0;
  const auto degrees = degrees_up_to(o.n, o.max_sum);
  for (const auto& d : degrees) {
    CheckOutcome c;
    try {
      c = check_degree(w, d, oracle_options(o));
    } catch (const ResourceLimit& e) {
      throw ResourceLimit(std::string(e.what()) + " at degree " + format_degree(d));
    }
    Json row{{"degree", to_vec(d)},
             {"verdict", c.pass ? "PASS" : "FAIL"},
             {"count", c.formula.elements.size()},
             {"states", c.states}};
    if (!o.json) out << (c.pass ? "PASS " : "FAIL ") << format_degree(d) << "  count=" << c.formula.elements.size() << '\n';
    if (!c.pass) {
      ++failures;
      row["mismatch"] = to_json(*c.mismatch);
      row["chain"] = c.chain ? to_json(*c.chain) : Json(nullptr);
      if (!o.json) {
        out << "  first mismatch: " << format_window(*c.mismatch) << '\n';
        if (c.chain) {
          print_chain(out, *c.chain);
        } else {
          out << "    (closed-form element not reached by the oracle)\n";
        }
      }
    }
    rows.push_back(std::move(row));
  }
  rep.verdict = failures == 0 ? "PASS" : "FAIL";
  rep.details = Json{{"max_degree_sum", o.max_sum}, {"degrees", degrees.size()}, {"failures", failures}, {"rows", rows}};
  if (!o.json) {
    out << *rep.verdict << ": " << degrees.size() - failures << "/" << degrees.size() << " degrees agree\n";
  }
  return failures == 0 ? kExitOk : kExitFail;
}

}  // namespace

std::string to_dot(const MomentGraphSlice& slice) {
  std::ostringstream os;
  os << "graph moment {\n";
  for (const auto& v : slice.vertices) {
    os << "  \"" << format_window(v) << "\" [label=\"" << format_word(reduced_word(v)) << "\"];\n";
  }
  for (const auto& e : slice.edges) {
    os << "  \"" << format_window(e.from) << "\" -- \"" << format_window(e.to) << "\" [label=\"" << format_root(e.root)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunReport report;
  return run(args, out, err, report);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, RunReport& report) {
  const auto t0 = std::chrono::steady_clock::now();
  Options o;
  CLI::App app{"Curve neighborhoods in the affine flag manifold of type A_{n-1}^(1)", "affcurve"};
  app.require_subcommand(1);

  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", o.n, "rank n >= 3")->required(); };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "print a JSON report"); };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--threads", o.threads, "oracle threads (0 = all)");
    sub->add_option("--max-states", o.max_states, "oracle state cap");
  };

  auto* gamma = app.add_subcommand("gamma", "closed-form curve neighborhood");
  add_n(gamma);
  gamma->add_option("--degree", o.degree, "d0,...,dn-1")->required();
  gamma->add_option("--start", o.start, "word 's0 s1', window '[..]' or id");
  gamma->add_flag("--check-oracle", o.check_oracle, "compare against the chain search");
  gamma->add_flag("--fast", o.fast, "oracle uses level-0 edges only");
  add_oracle(gamma);
  add_json(gamma);

  auto* zd = app.add_subcommand("zd", "the element z_d for a degree with a zero entry");
  add_n(zd);
  zd->add_option("--degree", o.degree, "d0,...,dn-1")->required();
  add_json(zd);

  auto* oracle = app.add_subcommand("oracle", "chain search in the moment graph");
  add_n(oracle);
  oracle->add_option("--degree", o.degree, "d0,...,dn-1")->required();
  oracle->add_option("--start", o.start, "word, window or id");
  oracle->add_flag("--fast", o.fast, "level-0 edges only");
  add_oracle(oracle);
  add_json(oracle);

  auto* graph = app.add_subcommand("graph", "moment graph slice as DOT");
  add_n(graph);
  graph->add_option("--budget", o.degree, "d0,...,dn-1")->required();
  graph->add_option("--dot", o.dot, "output file")->required();
  graph->add_flag("--fast", o.fast, "level-0 edges only");
  add_oracle(graph);
  add_json(graph);

  auto* check = app.add_subcommand("check", "closed form vs oracle over all small degrees");
  add_n(check);
  check->add_option("--max-degree-sum", o.max_sum, "bound on d0+...+dn-1")->required();
  check->add_option("--start", o.start, "word, window or id");
  check->add_flag("--fast", o.fast, "oracle uses level-0 edges only");
  add_oracle(check);
  add_json(check);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  report = RunReport{};
  report.args = args;
  report.n = o.n;
  int code = kExitOk;
  try {
    require_rank(o.n);
    if (gamma->parsed()) {
      report.command = "gamma";
      code = cmd_gamma(o, report, out);
    } else if (zd->parsed()) {
      report.command = "zd";
      code = cmd_zd(o, report, out);
    } else if (oracle->parsed()) {
      report.command = "oracle";
      code = cmd_oracle(o, report, out);
    } else if (graph->parsed()) {
      report.command = "graph";
      code = cmd_graph(o, report, out);
    } else {
      report.command = "check";
      code = cmd_check(o, report, out);
    }
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  report.exit_code = code;
  report.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (o.json) out << to_json(report).dump(2) << '\n';
  return code;
}

}  // namespace affcurve
