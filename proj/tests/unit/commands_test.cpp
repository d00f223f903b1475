#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "test_support.hpp"

namespace qwiso::cli {
namespace {

using qwiso::testing::code_of;

const std::string kData = QWISO_TEST_DATA_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qwiso");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

TEST(Run, Paley) {
  const auto r = invoke({"paley", "--p", "13"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "{\"p\":13,\"elements\":[1,3,4,9,10,12]}\n");
  EXPECT_EQ(invoke({"paley", "--p", "13", "--format", "plain"}).out, "Z_13 {1,3,4,9,10,12}\n");
}

TEST(Run, VerifyJson) {
  const auto r = invoke({"verify", "--p", "17"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["params"], nlohmann::json::parse("[17,8,3,4]"));
  EXPECT_DOUBLE_EQ(j["c"][0].get<double>(), -0.320194);
  EXPECT_DOUBLE_EQ(j["c"][1].get<double>(), 0.195194);
  EXPECT_LE(j["residual"].get<double>(), 1e-10);
  EXPECT_TRUE(j["recovered"].get<bool>());
}

TEST(Run, VerifyRejectsNonPaleyPrimes) {
  const auto r = invoke({"verify", "--p", "7"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("NotCongruentOneModFour"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"verify", "--p", "15"}).code, kExitError);
}

TEST(Run, Table2) {
  const auto r = invoke({"table2", "--p", "13", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "j,direct,recovered,abs_diff");
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("0,1.000000,1.000000,", 0), 0u) << line;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("1,0.217129,0.217129,", 0), 0u) << line;
  std::getline(lines, line);
  EXPECT_EQ(line.rfind("2,-0.383796,-0.383796,", 0), 0u) << line;
}

TEST(Run, RecoverFromPaleyAndFile) {
  const auto a = invoke({"recover", "--p", "13"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const auto b = invoke({"recover", "--set", kData + "/paley13.json"});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["recovered_set"]["elements"], nlohmann::json::parse("[1,3,4,9,10,12]"));

  EXPECT_EQ(invoke({"recover"}).code, kExitError);
  EXPECT_EQ(invoke({"recover", "--p", "13", "--set", kData + "/paley13.json"}).code, kExitError);
}

TEST(Run, MalformedAndMissingInput) {
  const auto r = invoke({"recover", "--set", kData + "/malformed.json"});
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"isotest", "--a", kData + "/nope.json", "--b", kData + "/paley13.json"}).code, kExitError);
}

TEST(Run, IsotestAgreement) {
  const auto r = invoke({"isotest", "--a", kData + "/paley13.json", "--b", kData + "/nonresidues13.json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["witness_multiplier"], 2);
  EXPECT_EQ(j["method_agreement"], true);
  // Different moduli cannot be compared.
  EXPECT_EQ(invoke({"isotest", "--a", kData + "/paley13.json", "--b", kData + "/paley17.json"}).code, kExitError);
}

TEST(Run, Scan) {
  const auto r = invoke({"scan", "--p", "5", "--k", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["total_sets"], 2);
  EXPECT_EQ(j["chi_groups"], 1);
  EXPECT_EQ(invoke({"scan", "--p", "13", "--k", "14"}).code, kExitError);
  EXPECT_EQ(invoke({"scan", "--p", "13", "--k", "5"}).code, kExitError);
}

TEST(Run, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitError);
  EXPECT_EQ(invoke({"verify"}).code, kExitError);
  EXPECT_EQ(invoke({"verify", "--p", "13", "--format", "xml"}).code, kExitError);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Run, ToleranceValidation) {
  EXPECT_EQ(invoke({"verify", "--p", "13", "--tol-eig", "0.5"}).code, kExitError);
  EXPECT_EQ(invoke({"verify", "--p", "13", "--tol-eig", "0"}).code, kExitError);
  EXPECT_EQ(invoke({"verify", "--p", "13", "--tol-poly", "-1e-6"}).code, kExitError);
  EXPECT_EQ(invoke({"verify", "--p", "13", "--tol-eig", "1e-7"}).code, kExitOk);
  EXPECT_EQ(code_of([] { validate_tolerance(1e-2, "x"); }), std::nullopt);
  EXPECT_EQ(code_of([] { validate_tolerance(0.011, "x"); }), ErrorCode::kInvalidArgument);
}

TEST(Run, EnvironmentTolerance) {
  {
    ScopedEnv env("QWISO_TOL_EIG", "1e-7");
    EXPECT_EQ(eigen_tolerance_from_env(), 1e-7);
    EXPECT_EQ(invoke({"verify", "--p", "13"}).code, kExitOk);
  }
  {
    ScopedEnv env("QWISO_TOL_EIG", "bogus");
    EXPECT_EQ(code_of([] { eigen_tolerance_from_env(); }), ErrorCode::kInvalidArgument);
    EXPECT_EQ(invoke({"verify", "--p", "13"}).code, kExitError);
  }
  {
    ScopedEnv env("QWISO_TOL_EIG", "0.1");
    EXPECT_EQ(invoke({"verify", "--p", "13"}).code, kExitError);
  }
  EXPECT_EQ(eigen_tolerance_from_env(), std::nullopt);
}

TEST(Run, OutputFileAndByteStability) {
  const auto path = std::filesystem::temp_directory_path() / "qwiso_commands_test_verify.json";
  const auto r = invoke({"verify", "--p", "13", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::filesystem::remove(path);
  EXPECT_EQ(written, invoke({"verify", "--p", "13"}).out);
  for (const char* fmt : {"json", "csv", "plain"}) {
    EXPECT_EQ(invoke({"scan", "--p", "7", "--k", "4", "--format", fmt}).out,
              invoke({"scan", "--p", "7", "--k", "4", "--format", fmt}).out);
  }
  EXPECT_EQ(invoke({"verify", "--p", "13", "--out", "/nonexistent/dir/x.json"}).code, kExitError);
}

TEST(Scan, ReportContents) {
  const auto report = cmd_scan(13, 6);
  EXPECT_EQ(report.entries.size(), 20u);
  EXPECT_EQ(report.group_count, 4);
  EXPECT_EQ(report.turner_class_count, 4);
  EXPECT_TRUE(report.anomalies.empty());
  int srg = 0;
  for (const auto& e : report.entries) srg += e.srg.has_value();
  EXPECT_EQ(srg, 2);
  EXPECT_EQ(code_of([] { cmd_scan(41, 20); }), ErrorCode::kTooManySets);
}

TEST(Scan, DisagreementFlagNeedsTwoSrgMembers) {
  ScanReport r;
  r.anomalies.push_back({0, 1, false, "same_chi_not_isomorphic"});
  EXPECT_FALSE(r.srg_disagreement());
  r.anomalies.push_back({0, 2, true, "same_chi_not_isomorphic"});
  EXPECT_TRUE(r.srg_disagreement());
}

TEST(Round6, NoNegativeZero) {
  EXPECT_FALSE(std::signbit(round6(-1e-9)));
  EXPECT_DOUBLE_EQ(round6(0.2171292), 0.217129);
  EXPECT_DOUBLE_EQ(round6(-0.3837959), -0.383796);
}

}  // namespace
}  // namespace qwiso::cli
