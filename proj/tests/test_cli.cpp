#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polyring/cli.hpp"

using polyring::cli::run;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("polyring_test_" + name);
}

}  // namespace

TEST(Report, Z4Text) {
  const Result r = cli({"report", "Z/4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("units: {1, 3}"), std::string::npos);
  EXPECT_NE(r.out.find("nilpotency index: 2"), std::string::npos);
  EXPECT_NE(r.out.find("polynomial functions: 64"), std::string::npos);
}

TEST(Report, Z4Json) {
  const Result r = cli({"report", "Z/4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["kind"], "report");
  EXPECT_EQ(j["ring"], "Z/4");
  EXPECT_EQ(j["invariants"]["units"], Json::array({1, 3}));
  EXPECT_EQ(j["invariants"]["nilpotency_index"], 2);
  EXPECT_EQ(j["polynomial_functions"]["count"], 64);
  EXPECT_EQ(j["polynomial_functions"]["stabilization"]["preperiod"], 2);
}

TEST(Report, ProductHasTwoLocalFactors) {
  const Result r = cli({"report", "Z/2 x Z/3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["local_factors"].size(), 2u);
}

TEST(Report, LargeFieldCountAsPowerText) {
  const Result r = cli({"report", "GF(27)", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_TRUE(j["polynomial_functions"]["count"].is_null());
  EXPECT_EQ(j["polynomial_functions"]["count_text"], "27^27");
}

TEST(Report, BadSpecExitsTwo) {
  for (const char* spec : {"Z/0", "Z/", "GF(6)", "Z/2[x]/(2x)"}) {
    const Result r = cli({"report", spec});
    EXPECT_EQ(r.code, 2) << spec;
    EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << r.err;
  }
}

TEST(Usage, MissingSubcommandAndUnknownFlag) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"report"}).code, 2);
  EXPECT_EQ(cli({"report", "Z/4", "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"check", "Z/4", "P9.9"}).code, 2);
}

TEST(Usage, HelpAndVersion) {
  const Result h = cli({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("sweep"), std::string::npos);
  const Result v = cli({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, std::string(polyring::kToolVersion) + "\n");
}

TEST(Check, Z6LocalIndicator) {
  const Result r = cli({"check", "Z/6", "P2.7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds"), std::string::npos);
}

TEST(Check, Z4LocalIndicatorPrintsWitness) {
  const Result r = cli({"check", "Z/4", "P2.7", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  const Json& v = j["verdicts"][0];
  EXPECT_EQ(v["outcome"], "holds");
  EXPECT_EQ(v["witness"]["kind"], "polynomial");
  EXPECT_EQ(v["witness"]["polynomial"], "x^2");
  EXPECT_EQ(v["recheck"], Json::array({"check", "Z/4", "P2.7", "--poly=x^2"}));
}

TEST(Check, GF8BijectionsSkippedUnlessRaised) {
  const Result skipped = cli({"check", "GF(8)", "P1.2", "--format", "json"});
  EXPECT_EQ(skipped.code, 0);
  EXPECT_EQ(Json::parse(skipped.out)["verdicts"][0]["outcome"], "skipped");
  const Result raised = cli({"check", "GF(8)", "P1.2", "--max-bijection-order=8", "--format", "json"});
  EXPECT_EQ(raised.code, 0);
  EXPECT_EQ(Json::parse(raised.out)["verdicts"][0]["outcome"], "holds");
}

TEST(Check, CaveatIsPreconditionFailed) {
  const Result r = cli({"check", "Z/6", "L2.5", "--poly", "x^2 + x", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["verdicts"][0]["outcome"], "precondition-failed");
}

TEST(Check, CapGivesExitThree) {
  const Result r = cli({"check", "Z/8", "P2.7", "--cap-functions", "4"});
  EXPECT_EQ(r.code, 3) << r.out << r.err;
}

TEST(Check, WitnessFlagsAreValidated) {
  EXPECT_EQ(cli({"check", "Z/4", "P2.7", "--subset", "1,3"}).code, 2);
  EXPECT_EQ(cli({"check", "Z/4", "L1.1", "--pair", "1,9"}).code, 2);
  EXPECT_EQ(cli({"check", "Z/4", "L2.2", "--b", "1"}).code, 2);
  EXPECT_EQ(cli({"check", "Z/4", "P2.7", "--poly", "x^"}).code, 2);
}

TEST(Check, SpecificWitnesses) {
  EXPECT_EQ(cli({"check", "Z/4", "L1.1", "--pair=2,1"}).code, 0);
  EXPECT_EQ(cli({"check", "Z/4", "P1.2", "--table=0,2,1,3"}).code, 0);
  EXPECT_EQ(cli({"check", "Z/4", "P1.3", "--subset=1,2,3"}).code, 0);
  EXPECT_EQ(cli({"check", "Z/8", "L2.2", "--b=1", "--c=2"}).code, 0);
  EXPECT_EQ(cli({"check", "Z/4", "R2.8", "--subset=1,3"}).code, 0);
  EXPECT_EQ(cli({"check", "Z/9", "P2.6lift", "--poly=x"}).code, 0);
  EXPECT_EQ(cli({"check", "Z/2", "P2.1", "--into", "GF(4)", "--map", "0,1", "--poly", "x"}).code, 0);
}

TEST(Check, EveryIdOnZ9RechecksItself) {
  for (polyring::ResultId id : polyring::kAllResults) {
    const Result r = cli({"check", "Z/9", std::string(polyring::to_string(id)), "--format", "json"});
    ASSERT_EQ(r.code, 0) << polyring::to_string(id) << r.err;
    const Json v = Json::parse(r.out)["verdicts"][0];
    const auto args = v["recheck"].get<std::vector<std::string>>();
    std::vector<std::string> with_json = args;
    with_json.insert(with_json.end(), {"--format", "json"});
    const Result again = cli(with_json);
    EXPECT_EQ(again.code, 0) << polyring::shell_join(args) << again.err;
  }
}

TEST(Sweep, WritesJsonAndCsv) {
  const auto json_path = temp_path("sweep.json"), csv_path = temp_path("sweep.csv");
  const Result a = cli({"sweep", "--max-order", "4", "--out", json_path.string()});
  ASSERT_EQ(a.code, 0) << a.out << a.err;
  std::ifstream jf(json_path);
  const Json j = Json::parse(jf);
  EXPECT_EQ(j["kind"], "sweep");
  EXPECT_EQ(j["summary"]["violated"], 0);
  EXPECT_FALSE(j["verdicts"].empty());
  const std::size_t rows = j["verdicts"].size();

  const Result b = cli({"sweep", "--max-order", "4", "--out", csv_path.string(), "--format", "csv", "--jobs", "2"});
  ASSERT_EQ(b.code, 0);
  std::ifstream cf(csv_path);
  std::string line;
  std::getline(cf, line);
  EXPECT_EQ(line, polyring::kCsvHeader);
  std::size_t count = 0;
  while (std::getline(cf, line)) ++count;
  EXPECT_EQ(count, rows);
  std::filesystem::remove(json_path);
  std::filesystem::remove(csv_path);
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const auto p1 = temp_path("d1.csv"), p4 = temp_path("d4.csv");
  ASSERT_EQ(cli({"sweep", "--max-order", "6", "--out", p1.string(), "--format", "csv", "--jobs", "1"}).code, 0);
  ASSERT_EQ(cli({"sweep", "--max-order", "6", "--out", p4.string(), "--format", "csv", "--jobs", "4"}).code, 0);
  auto strip_times = [](const std::filesystem::path& p) {
    std::ifstream in(p);
    std::vector<std::string> rows;
    for (std::string line; std::getline(in, line);) {
      // The timing column is the only one allowed to differ.
      std::size_t commas = 0, start = std::string::npos, end = std::string::npos;
      bool quoted = false;
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] != ',' || quoted) continue;
        ++commas;
        if (commas == 7) start = i;
        if (commas == 8) end = i;
      }
      rows.push_back(start == std::string::npos ? line : line.substr(0, start) + line.substr(end));
    }
    return rows;
  };
  EXPECT_EQ(strip_times(p1), strip_times(p4));
  std::filesystem::remove(p1);
  std::filesystem::remove(p4);
}

TEST(Sweep, UnwritablePathExitsTwo) {
  const Result r = cli({"sweep", "--max-order", "4", "--out", "/nonexistent-dir/x.json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("io-error"), std::string::npos);
}

TEST(Sweep, OrderLimit) {
  EXPECT_EQ(cli({"sweep", "--max-order", "17", "--out", temp_path("big.json").string()}).code, 2);
}

TEST(Binary, ExitCodesThroughProcess) {
  const std::string bin = POLYRING_CLI;
  auto status = [&](const std::string& args) {
    const int s = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(s);
  };
  EXPECT_EQ(status("report Z/4"), 0);
  EXPECT_EQ(status("report Z/0"), 2);
  EXPECT_EQ(status("check Z/8 P2.7 --cap-functions 4"), 3);
}
