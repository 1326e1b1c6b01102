#include <gtest/gtest.h>

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "picknorm_cli/commands.hpp"
#include "picknorm_cli/problem_io.hpp"
#include "picknorm_cli/result_io.hpp"

namespace picknorm::cli {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "picknorm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(PICKNORM_TEST_DATA) + "/" + name; }

TEST(Cli, ComputeHardyJson) {
  const CliRun r = run({"compute", data("hardy.json"), "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc.at("norm_lower").get<double>(), 0.5, 1e-9);
  EXPECT_NEAR(doc.at("norm_upper").get<double>(), 0.5, 1e-9);
  EXPECT_TRUE(doc.at("timing_ms").is_null());
  EXPECT_EQ(doc.at("backend_echo").at("backend"), "hardy");
}

TEST(Cli, ResultDocumentRoundTrips) {
  for (const char* f : {"hardy.json", "finite_sup.json", "torus.json"}) {
    const CliRun r = run({"compute", data(f)});
    ASSERT_EQ(r.code, kExitOk) << f << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    const ResultDocument parsed = parse_result_document(doc);
    EXPECT_NO_THROW(validate_result_document(parsed));
    const InterpolationProblem echo = parse_problem(parsed.backend_echo);
    EXPECT_EQ(problem_to_json(echo), parsed.backend_echo);
  }
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  for (const char* f : {"hardy.json", "torus.json"}) {
    EXPECT_EQ(run({"compute", data(f)}).out, run({"compute", data(f)}).out);
  }
  EXPECT_EQ(run({"verify", "np_infty", "--seed", "3"}).out, run({"verify", "np_infty", "--seed", "3"}).out);
}

TEST(Cli, FiniteSupNormIsMaxTarget) {
  const CliRun r = run({"compute", data("finite_sup.json")});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc.at("norm_upper").get<double>(), std::sqrt(0.5), 1e-12);
}

TEST(Cli, ToleranceOverrideIsEchoed) {
  const CliRun r = run({"compute", data("hardy.json"), "--tol", "1e-6"});
  ASSERT_EQ(r.code, kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc.at("config_echo").at("tolerance_overridden").get<bool>());
  EXPECT_DOUBLE_EQ(doc.at("config_echo").at("tolerance").get<double>(), 1e-6);
}

TEST(Cli, CsvRow) {
  const CliRun r = run({"compute", data("hardy.json"), "--csv"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream is(r.out);
  std::string header, row;
  std::getline(is, header);
  std::getline(is, row);
  EXPECT_EQ(header, result_csv_header());
  EXPECT_EQ(row.rfind("hardy,2,", 0), 0u) << row;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"compute", data("does_not_exist.json")}).code, kExitIo);
  const CliRun dup = run({"compute", data("hardy_duplicate.json")});
  EXPECT_EQ(dup.code, kExitValidation);
  EXPECT_NE(dup.err.find("site 2"), std::string::npos) << dup.err;
  const CliRun bad = run({"compute", data("bad_site.json")});
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_NE(bad.err.find("sites[1]"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"compute", data("truncated.json")}).code, kExitValidation);
  EXPECT_EQ(run({"verify", "nonsense"}).code, kExitValidation);
  EXPECT_EQ(run({"gleason", data("single_site.json")}).code, kExitValidation);
  EXPECT_EQ(run({"frobnicate"}).code, kExitValidation);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({"compute", data("hardy.json"), "--json", "--csv"}).code, kExitValidation);
}

TEST(Cli, GleasonHardyPair) {
  const CliRun r = run({"gleason", data("hardy_sites.json"), "--theorem4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc.at("distances")[0][1][0].get<double>(), 4.0 - 2.0 * std::sqrt(3.0), 1e-4);
  EXPECT_EQ(doc.at("partition").size(), 1u);
  EXPECT_TRUE(doc.contains("theorem4"));
}

TEST(Cli, GleasonFiniteSupSingletons) {
  const CliRun r = run({"gleason", data("finite_sup.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("partition").size(), 3u);
  EXPECT_NEAR(doc.at("distances")[0][2][1].get<double>(), 2.0, 1e-8);
}

TEST(Cli, KernelProbeCsv) {
  const CliRun r = run({"kernel-probe", "--lmax", "3"});
  ASSERT_EQ(r.code, kExitOk);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "l,grid,l1_norm");
  int rows = 0;
  while (std::getline(is, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(Cli, VerifyKernelsPasses) {
  const CliRun r = run({"verify", "kernels"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("dlvp_property2_exact"), std::string::npos);
}

}  // namespace
}  // namespace picknorm::cli
