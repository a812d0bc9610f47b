#pragma once

// Text and JSON forms of degrees, elements, neighborhoods and run reports.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "affcurve/affine_perm.hpp"
#include "affcurve/neighborhoods.hpp"
#include "affcurve/oracle.hpp"
#include "affcurve/roots.hpp"

namespace affcurve {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// "d0,d1,...": checked against n when given.
Degree parse_degree(std::string_view text, std::optional<int> n = std::nullopt);

/// "id", a word "s0 s1 s2", or a window "[w1,...,wn]".
AffinePerm parse_element(std::string_view text, int n);

Json to_json(const AffinePerm& w);
/// Accepts {"window": [...]} or {"word": [...]}; both present must agree.
AffinePerm element_from_json(const Json& j, int n);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j, int n);

Json to_json(const NbhdResult& r);
NbhdResult nbhd_from_json(const Json& j);

Json to_json(const Chain& c);
Chain chain_from_json(const Json& j, int n);

struct RunReport {
  std::string command;
  std::vector<std::string> args;
  int n = 0;
  std::optional<Degree> degree;
  std::optional<AffinePerm> start;
  std::optional<NbhdResult> result;
  std::optional<NbhdResult> oracle;
  /// "PASS" or "FAIL" when a comparison ran.
  std::optional<std::string> verdict;
  /// Command-specific payload (factors, slice sizes, sweep rows, ...).
  Json details = Json::object();
  double duration_ms = 0.0;
  int exit_code = 0;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

Json to_json(const RunReport& r);
RunReport report_from_json(const Json& j);

}  // namespace affcurve
