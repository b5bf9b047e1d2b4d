#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "fixtures.hpp"
#include "igm/methods.hpp"

namespace igm::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "igm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return test::data_file(name).string(); }

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("igm_cli_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(CliSolve, A2PigmTable) {
  const auto r = run({"solve", "--input", data("a2.csv"), "--method", "pigm"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* w : {"0.415", "0.094", "0.035", "0.112", "0.219", "0.125"}) {
    EXPECT_NE(r.out.find(w), std::string::npos) << w;
  }
  EXPECT_NE(r.out.find("CI          0.284"), std::string::npos);
  EXPECT_NE(r.out.find("CR          0.229"), std::string::npos);
}

TEST(CliSolve, A1BlankmeyerIsSingular) {
  const auto r = run({"solve", "--input", data("a1.csv"), "--method", "blankmeyer"});
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_NE(r.err.find("SingularMatrix"), std::string::npos);
  EXPECT_NE(r.err.find("consistent"), std::string::npos);
}

TEST(CliSolve, A1Ligm) {
  const auto r = run({"solve", "--input", data("a1.csv"), "--method", "ligm"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("lambda      0.000"), std::string::npos);
  for (const char* w : {"0.533", "0.267", "0.133", "0.067"}) EXPECT_NE(r.out.find(w), std::string::npos);
}

TEST(CliSolve, A2LigmShiftedMultiplier) {
  const auto r = run({"solve", "--input", data("a2_upper.csv"), "--method", "ligm", "--r", "1"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("LIGM(1)"), std::string::npos);
  EXPECT_NE(r.out.find("lambda      -1.633"), std::string::npos);
}

TEST(CliSolve, NigmZeroShiftOnConsistent) {
  const auto r = run({"solve", "--input", data("a1.csv"), "--method", "nigm", "--r", "0"});
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_NE(r.err.find("ZeroShiftOnConsistent"), std::string::npos);
}

TEST(CliSolve, WlsMatchesClosedFormAtDisplayPrecision) {
  const auto r = run({"solve", "--input", data("a2.json"), "--method", "wls", "--seed", "3", "--json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["method"], "WLS");
  EXPECT_TRUE(j["lambda"].is_null());
  const auto ref = pigm(test::a2()).weights;
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(j["weights"][i].get<double>(), ref[i], 1e-5);
}

// The table and the JSON come from the same SolveOutput; every displayed
// number must be the JSON number rounded to three places.
TEST(CliSolve, TableAndJsonAgree) {
  for (const char* method : {"pigm", "nigm", "ligm", "blankmeyer"}) {
    const auto table = run({"solve", "--input", data("a2.csv"), "--method", method});
    const auto json = run({"solve", "--input", data("a2.csv"), "--method", method, "--json"});
    ASSERT_EQ(table.code, 0);
    ASSERT_EQ(json.code, 0);
    const auto j = nlohmann::json::parse(json.out);

    std::map<std::string, std::string> rows;
    std::istringstream lines(table.out);
    for (std::string line; std::getline(lines, line);) {
      const auto sp = line.find(' ');
      rows[line.substr(0, sp)] = line.substr(line.find_first_not_of(' ', sp));
    }
    const auto three = [](double v) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", test::round_dp(v, 3) + 0.0);
      return std::string(buf);
    };
    EXPECT_EQ(rows["method"], j["method"].get<std::string>());
    for (std::size_t i = 0; i < j["weights"].size(); ++i) {
      EXPECT_EQ(rows["w" + std::to_string(i + 1)], three(j["weights"][i].get<double>()));
    }
    if (!j["lambda"].is_null()) EXPECT_EQ(rows["lambda"], three(j["lambda"].get<double>()));
    else EXPECT_EQ(rows.count("lambda"), 0u);
    EXPECT_EQ(rows["objective"], three(j["wls_objective"].get<double>()));
    EXPECT_EQ(rows["lambda_max"], three(j["consistency"]["lambda_max"].get<double>()));
    EXPECT_EQ(rows["CI"], three(j["consistency"]["ci"].get<double>()));
    EXPECT_EQ(rows["CR"], three(j["consistency"]["cr"].get<double>()));
  }
}

TEST(CliSolve, JsonCarriesTwelvePlaces) {
  const auto r = run({"solve", "--input", data("a2.csv"), "--json"});
  const auto j = nlohmann::json::parse(r.out);
  const auto ref = pigm(test::a2()).weights;
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(j["weights"][i].get<double>(), ref[i], 5e-13);
}

TEST(CliSolve, ErrorPathsMapToCodes) {
  EXPECT_EQ(run({"solve", "--input", "/nonexistent/a.csv"}).code, kExitIo);
  EXPECT_EQ(run({"solve"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--input", data("a1.csv"), "--method", "eigen"}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "--input", data("a1.csv"), "--format", "json"}).code, kExitUsage);

  const auto dir = scratch_dir("bad");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bad.csv") << "1,2\n0.4,1\n";
  const auto r = run({"solve", "--input", (dir / "bad.csv").string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("ReciprocityViolation at (2,1)"), std::string::npos) << r.err;
}

TEST(CliSolve, ExitCodeTableIsTotal) {
  for (int c = 0; c <= static_cast<int>(ErrorCode::InvalidArgument); ++c) {
    const int code = exit_code_for(static_cast<ErrorCode>(c));
    EXPECT_TRUE(code == kExitUsage || code == kExitNumerical) << c;
  }
  EXPECT_EQ(exit_code_for(ErrorCode::SingularMatrix), kExitNumerical);
  EXPECT_EQ(exit_code_for(ErrorCode::ReciprocityViolation), kExitUsage);
}

TEST(CliSimulate, ZeroSamplesIsUsageError) { EXPECT_EQ(run({"simulate", "--samples", "0"}).code, kExitUsage); }

TEST(CliSimulate, InvalidConfigIsUsageError) {
  EXPECT_EQ(run({"simulate", "--nmax", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--r-min", "5", "--r-max", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"simulate", "--mode", "other"}).code, kExitUsage);
}

TEST(CliSimulate, WritesReports) {
  const auto dir = scratch_dir("reports");
  const auto r = run({"simulate", "--samples", "20", "--seed", "7", "--out", dir.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto csv = slurp(dir / "trials.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 21);
  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  EXPECT_EQ(summary["error_detected"], false);
  EXPECT_EQ(summary["counts"]["trials"], 20);
}

TEST(CliSimulate, IdenticalFlagsGiveIdenticalCsv) {
  const auto a = scratch_dir("det_a");
  const auto b = scratch_dir("det_b");
  ASSERT_EQ(run({"simulate", "--samples", "200", "--seed", "3", "--out", a.string()}).code, 0);
  ASSERT_EQ(run({"simulate", "--samples", "200", "--seed", "3", "--out", b.string(), "--workers", "3"}).code, 0);
  EXPECT_EQ(slurp(a / "trials.csv"), slurp(b / "trials.csv"));
}

TEST(CliSimulate, DiscrepancyExitAndReplay) {
  const auto r = run({"simulate", "--mode", "wls-oracle", "--samples", "20", "--seed", "7", "--epsilon", "12",
                      "--wls-start", "uniform"});
  ASSERT_EQ(r.code, kExitDiscrepancy);
  const auto pos = r.err.find("replay: igm ");
  ASSERT_NE(pos, std::string::npos);
  std::istringstream words(r.err.substr(pos + 12));
  std::vector<std::string> args;
  for (std::string w; words >> w;) args.push_back(w);
  const auto replay = run(args);
  EXPECT_EQ(replay.code, kExitDiscrepancy);
  EXPECT_NE(replay.out.find("discrepancy"), std::string::npos);
}

TEST(CliSimulate, UnwritableOutputIsIoError) {
  const auto dir = scratch_dir("io");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "file") << "x";
  EXPECT_EQ(run({"simulate", "--out", (dir / "file" / "sub").string()}).code, kExitIo);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, kExitOk); }

}  // namespace
}  // namespace igm::cli
