#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "affcurve/cli.hpp"
#include "affcurve/serialize.hpp"

using namespace affcurve;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  RunReport report;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunReport rep;
  const int code = run(args, out, err, rep);
  return {code, out.str(), err.str(), rep};
}

Json strip_duration(Json j) {
  j.erase("duration_ms");
  return j;
}

}  // namespace

TEST(ParseDegree, Valid) {
  EXPECT_EQ(parse_degree("1,1,1", 3), Degree(std::vector<Int>{1, 1, 1}));
  EXPECT_EQ(parse_degree(" 6, 5 ,8,5 "), Degree(std::vector<Int>{6, 5, 8, 5}));
}

TEST(ParseDegree, DistinctDiagnostics) {
  auto message = [](const char* text, std::optional<int> n) {
    try {
      parse_degree(text, n);
    } catch (const InvalidArgument& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_NE(message("1,x,1", 3).find("malformed"), std::string::npos);
  EXPECT_NE(message("1,-1,1", 3).find("negative"), std::string::npos);
  EXPECT_NE(message("1,1", 3).find("expected 3"), std::string::npos);
  EXPECT_NE(message("", 3).find("empty"), std::string::npos);
  EXPECT_THROW(parse_degree("1,1"), InvalidArgument);
}

TEST(ParseElement, Forms) {
  EXPECT_EQ(parse_element("s0 s1", 3), multiply(AffinePerm::simple(0, 3), AffinePerm::simple(1, 3)));
  EXPECT_EQ(parse_element("[2,1,3]", 3), AffinePerm::simple(1, 3));
  EXPECT_EQ(parse_element("id", 4), AffinePerm::identity(4));
  EXPECT_EQ(parse_element("s1,s2", 3), AffinePerm::from_word(std::vector<int>{1, 2}, 3));
}

TEST(ParseElement, Errors) {
  EXPECT_THROW(parse_element("[1,4,3]", 3), InvalidArgument);
  EXPECT_THROW(parse_element("[2,1]", 3), InvalidArgument);
  EXPECT_THROW(parse_element("s3", 3), InvalidArgument);
  EXPECT_THROW(parse_element("t1", 3), InvalidArgument);
  EXPECT_THROW(parse_element("[2,1,3", 3), InvalidArgument);
}

TEST(Json, ElementForms) {
  const auto w = parse_element("s0 s1 s2 s1", 3);
  const auto j = to_json(w);
  EXPECT_EQ(element_from_json(j, 3), w);
  EXPECT_EQ(element_from_json(Json{{"word", {0, 1, 2, 1}}}, 3), w);
  EXPECT_EQ(element_from_json(Json{{"window", j.at("window")}}, 3), w);
  EXPECT_THROW(element_from_json(Json{{"window", {1, 2, 3}}, {"word", {0}}}, 3), InvalidArgument);
  EXPECT_THROW(element_from_json(Json::object(), 3), InvalidArgument);
}

TEST(Json, NeighborhoodRoundTrip) {
  for (const auto& d : {std::vector<Int>{1, 1, 1}, {6, 5, 8, 5}, {0, 2, 1}, {2, 1, 1, 1, 2}}) {
    const auto r = gamma_id(Degree(d));
    EXPECT_EQ(nbhd_from_json(to_json(r)), r);
  }
}

TEST(Json, ChainRoundTrip) {
  const auto run = neighborhood_bfs(AffinePerm::identity(3), Degree(std::vector<Int>{2, 1, 1}));
  for (const auto& e : run.result().elements) {
    const auto c = *run.chain_to(e);
    const auto back = chain_from_json(to_json(c), 3);
    EXPECT_EQ(back.start, c.start);
    EXPECT_EQ(back.degree, c.degree);
    EXPECT_EQ(replay(back), e);
  }
}

TEST(Json, ReportRoundTrip) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"gamma", "--n", "3", "--degree", "1,1,1", "--check-oracle", "--json"},
           {"gamma", "--n", "3", "--degree", "1,2,1", "--start", "s0 s1", "--json"},
           {"zd", "--n", "7", "--degree", "5,0,2,2,3,0,4", "--json"},
           {"oracle", "--n", "3", "--degree", "1,1,0", "--json"},
           {"check", "--n", "3", "--max-degree-sum", "2", "--json"}}) {
    const auto o = invoke(args);
    ASSERT_EQ(o.code, 0) << o.err;
    const Json printed = Json::parse(o.out);
    EXPECT_EQ(printed.at("schema"), 1);
    EXPECT_EQ(report_from_json(printed), o.report);
    EXPECT_EQ(to_json(report_from_json(to_json(o.report))), to_json(o.report));
  }
  EXPECT_THROW(report_from_json(Json{{"schema", 2}}), InvalidArgument);
}

TEST(Run, GammaText) {
  const auto o = invoke({"gamma", "--n", "3", "--degree", "1,1,1"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("count: 6"), std::string::npos);
  EXPECT_NE(o.out.find("common_length: 4"), std::string::npos);
}

TEST(Run, GammaJsonFields) {
  const auto o = invoke({"gamma", "--n", "4", "--degree", "6,5,8,5", "--json"});
  ASSERT_EQ(o.code, 0);
  const auto j = Json::parse(o.out);
  EXPECT_EQ(j.at("result").at("count"), 4);
  EXPECT_EQ(j.at("result").at("common_length"), 32);
  EXPECT_EQ(j.at("result").at("regime"), "general");
  for (const auto& e : j.at("result").at("elements")) {
    EXPECT_EQ(e.at("witness").at("z_part"), (Json{"a0", "a2"}));
  }
}

TEST(Run, ZdText) {
  const auto o = invoke({"zd", "--n", "7", "--degree", "5,0,2,2,3,0,4"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("factors: a0+a6, a2+a3+a4, a3"), std::string::npos);
  EXPECT_NE(o.out.find("length: 9"), std::string::npos);
}

TEST(Run, DeterministicJson) {
  const std::vector<std::string> args{"gamma", "--n", "4", "--degree", "2,1,2,1", "--check-oracle", "--json"};
  EXPECT_EQ(strip_duration(Json::parse(invoke(args).out)).dump(), strip_duration(Json::parse(invoke(args).out)).dump());
}

TEST(Run, CheckPasses) {
  const auto o = invoke({"check", "--n", "3", "--max-degree-sum", "4"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("PASS: 35/35"), std::string::npos);
}

TEST(Run, GraphWritesDot) {
  const std::string path = ::testing::TempDir() + "affcurve_slice.dot";
  const auto o = invoke({"graph", "--n", "3", "--budget", "1,0,0", "--dot", path});
  ASSERT_EQ(o.code, 0) << o.err;
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(),
            "graph moment {\n"
            "  \"[0,2,4]\" [label=\"s0\"];\n"
            "  \"[1,2,3]\" [label=\"id\"];\n"
            "  \"[0,2,4]\" -- \"[1,2,3]\" [label=\"a0\"];\n"
            "}\n");
}

TEST(Run, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"gamma", "--n", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gamma", "--n", "3", "--degree", "1,1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gamma", "--n", "2", "--degree", "1,1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"zd", "--n", "3", "--degree", "1,1,1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"oracle", "--n", "3", "--degree", "3,3,3", "--max-states", "10"}).code, kExitResource);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}
