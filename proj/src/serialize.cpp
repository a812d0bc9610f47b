#include "affcurve/serialize.hpp"

#include <cctype>
#include <charconv>

namespace affcurve {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<Int> to_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

Json optional_root(const std::optional<PosRealRoot>& r) {
  return r ? Json(format_root(*r)) : Json(nullptr);
}

std::optional<PosRealRoot> root_or_null(const Json& j, int n) {
  if (j.is_null()) return std::nullopt;
  return parse_root(j.get<std::string>(), n);
}

Json roots_json(const std::vector<PosRealRoot>& roots) {
  Json arr = Json::array();
  for (const auto& r : roots) arr.push_back(format_root(r));
  return arr;
}

std::vector<PosRealRoot> roots_from_json(const Json& j, int n) {
  std::vector<PosRealRoot> out;
  for (const auto& r : j) out.push_back(parse_root(r.get<std::string>(), n));
  return out;
}

}  // namespace

Degree parse_degree(std::string_view text, std::optional<int> n) {
  text = trim(text);
  if (text.empty()) throw InvalidArgument("empty degree");
  std::vector<Int> coeffs;
  for (auto part : split(text, ',')) {
    const auto v = to_int(part);
    if (!v) throw InvalidArgument("malformed degree entry '" + std::string(trim(part)) + "'");
    if (*v < 0) throw InvalidArgument("negative degree entry " + std::to_string(*v));
    coeffs.push_back(*v);
  }
  if (n && static_cast<int>(coeffs.size()) != *n) {
    throw InvalidArgument("degree has " + std::to_string(coeffs.size()) + " entries, expected " +
                          std::to_string(*n));
  }
  require_rank(static_cast<int>(coeffs.size()));
  return Degree(std::move(coeffs));
}

AffinePerm parse_element(std::string_view text, int n) {
  require_rank(n);
  text = trim(text);
  if (text.empty()) throw InvalidArgument("empty element");
  if (text == "id" || text == "e") return AffinePerm::identity(n);
  if (text.front() == '[') {
    if (text.back() != ']') throw InvalidArgument("window must end with ']'");
    std::vector<Int> window;
    for (auto part : split(text.substr(1, text.size() - 2), ',')) {
      const auto v = to_int(part);
      if (!v) throw InvalidArgument("malformed window entry '" + std::string(trim(part)) + "'");
      window.push_back(*v);
    }
    if (static_cast<int>(window.size()) != n) {
      throw InvalidArgument("window has " + std::to_string(window.size()) + " entries, expected " +
                            std::to_string(n));
    }
    return AffinePerm::from_window(std::move(window));
  }
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] != 's') throw InvalidArgument("malformed word near '" + std::string(text.substr(pos)) + "'");
    std::size_t end = pos + 1;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    const auto v = to_int(text.substr(pos + 1, end - pos - 1));
    if (!v) throw InvalidArgument("malformed word letter '" + std::string(text.substr(pos, end - pos)) + "'");
    if (*v >= n) throw InvalidArgument("simple reflection s" + std::to_string(*v) + " out of range");
    word.push_back(static_cast<int>(*v));
    pos = end;
  }
  return AffinePerm::from_word(word, n);
}

Json to_json(const AffinePerm& w) {
  return Json{{"window", std::vector<Int>(w.window().begin(), w.window().end())}, {"word", reduced_word(w)}};
}

AffinePerm element_from_json(const Json& j, int n) {
  std::optional<AffinePerm> from_window;
  std::optional<AffinePerm> from_word;
  if (j.contains("window")) {
    auto window = j.at("window").get<std::vector<Int>>();
    if (static_cast<int>(window.size()) != n) throw InvalidArgument("window has the wrong rank");
    from_window = AffinePerm::from_window(std::move(window));
  }
  if (j.contains("word")) {
    const auto word = j.at("word").get<std::vector<int>>();
    from_word = AffinePerm::from_word(word, n);
  }
  if (from_window && from_word && *from_window != *from_word) {
    throw InvalidArgument("element window and word disagree");
  }
  if (from_window) return *from_window;
  if (from_word) return *from_word;
  throw InvalidArgument("element needs a window or a word");
}

Json to_json(const Witness& w) {
  return Json{{"beta_prime", optional_root(w.beta_prime)},
              {"beta", optional_root(w.beta)},
              {"m", w.m},
              {"translation", w.translation},
              {"shifted", w.shifted},
              {"z_part", roots_json(w.z_part)}};
}

Witness witness_from_json(const Json& j, int n) {
  Witness w;
  w.beta_prime = root_or_null(j.at("beta_prime"), n);
  w.beta = root_or_null(j.at("beta"), n);
  w.m = j.at("m").get<Int>();
  w.translation = j.at("translation").get<std::vector<Int>>();
  w.shifted = j.at("shifted").get<bool>();
  w.z_part = roots_from_json(j.at("z_part"), n);
  return w;
}

Json to_json(const NbhdResult& r) {
  Json els = Json::array();
  for (std::size_t k = 0; k < r.elements.size(); ++k) {
    Json e = to_json(r.elements[k]);
    e["length"] = r.elements[k].length();
    if (k < r.witnesses.size()) e["witness"] = to_json(r.witnesses[k]);
    els.push_back(std::move(e));
  }
  return Json{{"n", r.n},
              {"regime", to_string(r.regime)},
              {"source", to_string(r.source)},
              {"count", r.elements.size()},
              {"common_length", r.common_length ? Json(*r.common_length) : Json(nullptr)},
              {"elements", std::move(els)}};
}

NbhdResult nbhd_from_json(const Json& j) {
  NbhdResult r;
  r.n = j.at("n").get<int>();
  r.regime = regime_from_string(j.at("regime").get<std::string>());
  r.source = source_from_string(j.at("source").get<std::string>());
  if (!j.at("common_length").is_null()) r.common_length = j.at("common_length").get<Int>();
  for (const auto& e : j.at("elements")) {
    r.elements.push_back(element_from_json(e, r.n));
    if (e.contains("witness")) r.witnesses.push_back(witness_from_json(e.at("witness"), r.n));
  }
  return r;
}

Json to_json(const Chain& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(Json{{"root", format_root(s.root)}, {"to", to_json(s.to)}});
  return Json{{"start", to_json(c.start)},
              {"degree", std::vector<Int>(c.degree.coeffs().begin(), c.degree.coeffs().end())},
              {"steps", std::move(steps)}};
}

Chain chain_from_json(const Json& j, int n) {
  Chain c;
  c.start = element_from_json(j.at("start"), n);
  c.degree = Degree(j.at("degree").get<std::vector<Int>>());
  for (const auto& s : j.at("steps")) {
    c.steps.push_back({parse_root(s.at("root").get<std::string>(), n), element_from_json(s.at("to"), n)});
  }
  return c;
}

Json to_json(const RunReport& r) {
  Json inputs{{"n", r.n}};
  inputs["degree"] = r.degree ? Json(std::vector<Int>(r.degree->coeffs().begin(), r.degree->coeffs().end()))
                              : Json(nullptr);
  inputs["start"] = r.start ? to_json(*r.start) : Json(nullptr);
  return Json{{"schema", kSchemaVersion},
              {"command", r.command},
              {"args", r.args},
              {"inputs", std::move(inputs)},
              {"result", r.result ? to_json(*r.result) : Json(nullptr)},
              {"oracle", r.oracle ? to_json(*r.oracle) : Json(nullptr)},
              {"verdict", r.verdict ? Json(*r.verdict) : Json(nullptr)},
              {"details", r.details},
              {"duration_ms", r.duration_ms},
              {"exit_code", r.exit_code}};
}

RunReport report_from_json(const Json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) {
    throw InvalidArgument("unsupported report schema " + j.at("schema").dump());
  }
  RunReport r;
  r.command = j.at("command").get<std::string>();
  r.args = j.at("args").get<std::vector<std::string>>();
  const auto& in = j.at("inputs");
  r.n = in.at("n").get<int>();
  if (!in.at("degree").is_null()) r.degree = Degree(in.at("degree").get<std::vector<Int>>());
  if (!in.at("start").is_null()) r.start = element_from_json(in.at("start"), r.n);
  if (!j.at("result").is_null()) r.result = nbhd_from_json(j.at("result"));
  if (!j.at("oracle").is_null()) r.oracle = nbhd_from_json(j.at("oracle"));
  if (!j.at("verdict").is_null()) r.verdict = j.at("verdict").get<std::string>();
  r.details = j.at("details");
  r.duration_ms = j.at("duration_ms").get<double>();
  r.exit_code = j.at("exit_code").get<int>();
  return r;
}

}  // namespace affcurve
