#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "ghlab/io.hpp"
#include "ghlab/verify.hpp"

using namespace ghlab;

namespace {

RunConfig run_config(std::vector<double> centers, std::uint64_t seed = 1) {
  RunConfig rc;
  rc.centers = CenterConfig(std::move(centers));
  rc.seed = seed;
  return rc;
}

std::string message_of(const std::string& text) {
  try {
    parse_run_config(text, "cfg.json");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Config, ParsesAllFields) {
  const RunConfig rc = parse_run_config(R"({"centers": [-1, 0.5, 2], "C1": 0.25, "C2": 3, "seed": 42,
      "output_path": "out.json", "tolerances": {"fd_step": 1e-6, "shell": 1e-10}})");
  EXPECT_EQ(rc.centers.centers(), (std::vector<double>{-1.0, 0.5, 2.0}));
  EXPECT_EQ(rc.C1, 0.25);
  EXPECT_EQ(rc.C2, 3.0);
  EXPECT_EQ(rc.seed, 42u);
  EXPECT_EQ(rc.output_path, "out.json");
  EXPECT_EQ(rc.tolerances.fd_step, 1e-6);
  EXPECT_EQ(rc.tolerances.shell, 1e-10);
  EXPECT_EQ(rc.tolerances.ricci_step, kDefaultTolerances.ricci_step);
}

TEST(Config, DefaultsWhenEmpty) {
  const RunConfig rc = parse_run_config("{}");
  EXPECT_EQ(rc.centers.centers(), std::vector<double>{0.0});
  EXPECT_FALSE(rc.C1.has_value());
  EXPECT_EQ(rc.seed, 0u);
}

TEST(Config, MalformedJsonReportsLineAndColumn) {
  const std::string msg = message_of("{\"centers\": [0, 1,\n  \"seed\": 3}");
  EXPECT_EQ(msg.rfind("cfg.json:2:", 0), 0u) << msg;
}

TEST(Config, RejectsUnknownAndMistypedFields) {
  EXPECT_NE(message_of(R"({"centres": [0]})").find("'centres'"), std::string::npos);
  EXPECT_NE(message_of(R"({"centers": [0, "1"]})").find("centers[1]"), std::string::npos);
  EXPECT_NE(message_of(R"({"centers": [1, 0]})").find("'centers'"), std::string::npos);
  EXPECT_NE(message_of(R"({"centers": []})").find("'centers'"), std::string::npos);
  EXPECT_NE(message_of(R"({"seed": -1})").find("'seed'"), std::string::npos);
  EXPECT_NE(message_of(R"({"seed": 1.5})").find("'seed'"), std::string::npos);
  EXPECT_NE(message_of(R"({"tolerances": {"fd_step": 0}})").find("tolerances.fd_step"), std::string::npos);
  EXPECT_NE(message_of(R"({"tolerances": {"bogus": 1}})").find("tolerances.bogus"), std::string::npos);
  EXPECT_NE(message_of("[1, 2]").find("top level"), std::string::npos);
  EXPECT_THROW(load_run_config("/nonexistent/ghlab.json"), ConfigError);
}

TEST(Config, NumberLists) {
  EXPECT_EQ(parse_number_list("0,1.5,-2", "--centers"), (std::vector<double>{0.0, 1.5, -2.0}));
  EXPECT_THROW(parse_number_list("0,x", "--centers"), ConfigError);
  EXPECT_THROW(parse_number_list("1e", "--centers"), ConfigError);
  EXPECT_THROW(parse_number_list("", "--centers"), ConfigError);
}

TEST(Streams, FnvAndSplitting) {
  // Published FNV-1a 64-bit test vectors.
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(fnv1a("foobar"), 0x85944171f73967e8ull);
  auto a = split_stream(7, "x"), b = split_stream(7, "x"), c = split_stream(7, "y"), d = split_stream(8, "x");
  const auto va = a();
  EXPECT_EQ(va, b());
  EXPECT_NE(va, c());
  EXPECT_NE(va, d());
}

TEST(Registry, NamesAreUniqueAndGroupedBySuite) {
  std::set<std::string> seen;
  for (const std::string& suite : suite_names()) {
    if (suite == "all") continue;
    for (const std::string& name : check_names(suite, 5)) {
      EXPECT_TRUE(seen.insert(name).second) << name;
      EXPECT_EQ(name.rfind(suite + ".", 0), 0u) << name;
    }
  }
  EXPECT_EQ(check_names("all", 5).size(), seen.size());
  // Two-center checks only apply to n = 2.
  const auto n1 = check_names("legendre", 1), n2 = check_names("legendre", 2);
  EXPECT_LT(n1.size(), n2.size());
  EXPECT_THROW(check_names("nope", 1), DomainError);
}

TEST(Verify, SuitesPassOnSmallConfigurations) {
  struct Case {
    std::vector<double> centers;
    const char* suite;
  };
  for (const Case& c : {Case{{0.0}, "kahler"}, Case{{0.0, 1.0}, "hessian"}, Case{{-1.0, 0.5, 2.0}, "ricci"},
                        Case{{0.0, 1.0}, "phase"}, Case{{-1.0, 0.5, 2.0}, "connection"}}) {
    const Report r = verify_suite(run_config(c.centers), c.suite);
    EXPECT_TRUE(r.all_pass()) << report_text(r);
    EXPECT_FALSE(r.checks.empty());
    for (std::size_t i = 1; i < r.checks.size(); ++i) EXPECT_LT(r.checks[i - 1].name, r.checks[i].name);
  }
  EXPECT_THROW(verify_suite(run_config({0.0}), "nope"), DomainError);
}

TEST(Verify, ReportsAreReproducible) {
  const RunConfig rc = run_config({0.0, 1.0}, 5);
  const std::string a = report_json(verify_suite(rc, "harmonic"));
  const std::string b = report_json(verify_suite(rc, "harmonic"));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"seed\": 5"), std::string::npos);
}

TEST(Verify, CoarseStepFailsClosedness) {
  RunConfig rc = run_config({0.0, 1.0});
  rc.tolerances.fd_step = 0.5;
  const Report r = verify_suite(rc, "kahler");
  EXPECT_FALSE(r.all_pass());
  EXPECT_NE(report_text(r).find("some checks FAILED"), std::string::npos);
}

TEST(Emit, PolytopeAndMatrices) {
  const CenterConfig two({0.0, 1.0});
  const MomentPolytope poly = build_polytope(two);
  const std::string j = polytope_json(two, poly);
  EXPECT_NE(j.find("\"vertices\""), std::string::npos);
  EXPECT_NE(j.find("\"edges\""), std::string::npos);
  std::ostringstream csv;
  write_polytope_csv(csv, poly);
  EXPECT_EQ(csv.str().rfind("kind,index,a,b,k,mu1,mu2\n", 0), 0u);
  EXPECT_NE(csv.str().find("vertex,1,,,,0,0\n"), std::string::npos);
  EXPECT_NE(csv.str().find("vertex,2,,,,-1,1\n"), std::string::npos);
  EXPECT_EQ(matrix_json(Eigen::MatrixXd(Eigen::Matrix2d::Identity())), "[[1.0,0.0],[0.0,1.0]]");
  Eigen::MatrixXcd m(1, 1);
  m(0, 0) = std::complex<double>(0.5, -2.0);
  EXPECT_EQ(matrix_json(m), "[[[0.5,-2.0]]]");
}
