#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gk/cli.hpp"
#include "json.hpp"

namespace gk {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json strip_timing(nlohmann::json j) {
  for (auto& row : j["rows"]) row.erase("ms");
  return j;
}

TEST(CliMa, PrintsDimensionAndBasis) {
  const CliRun r = run({"ma", "--p", "3", "--a", "2", "--basis", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["a"], 2);
  EXPECT_EQ(j["f"], "x^6 + t^2*x^4 + t^4*x^2");
  EXPECT_EQ(j["basis"], (nlohmann::json{"x^3", "t^3"}));

  const CliRun text = run({"ma", "--p", "3", "--a", "2", "--basis"});
  EXPECT_NE(text.out.find("dim M_2 = 2"), std::string::npos);
  EXPECT_NE(text.out.find("t^3"), std::string::npos);

  const CliRun p5 = run({"ma", "--p", "5", "--a", "2", "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(p5.out)["dim"], 3);
  EXPECT_FALSE(nlohmann::json::parse(p5.out).contains("basis"));
}

TEST(CliMa, UsageErrors) {
  const CliRun bad_p = run({"ma", "--p", "4", "--a", "2"});
  EXPECT_EQ(bad_p.code, kExitUsage);
  EXPECT_NE(bad_p.err.find("p must be an odd prime"), std::string::npos);
  EXPECT_EQ(run({"ma", "--p", "2", "--a", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"ma", "--p", "5", "--a", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"ma", "--p", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"ma", "--p", "5", "--a", "2", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CliVerify, Suites) {
  const CliRun all = run({"verify", "--p", "5", "--suite", "all", "--format", "json"});
  ASSERT_EQ(all.code, kExitOk) << all.out;
  const auto j = nlohmann::json::parse(all.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  for (const auto& c : j["checks"]) EXPECT_TRUE(c["pass"].get<bool>()) << c["name"];

  EXPECT_EQ(run({"verify", "--p", "13", "--suite", "qr"}).code, kExitOk);

  const CliRun fam = run({"verify", "--p", "3", "--suite", "family", "--format", "json"});
  ASSERT_EQ(fam.code, kExitOk);
  const auto jf = nlohmann::json::parse(fam.out);
  EXPECT_EQ(jf["checks"].size(), 3u);  // two members plus the independence check
  EXPECT_EQ(jf["checks"][2]["detail"], "2 elements checked, rank 2");

  EXPECT_EQ(run({"verify", "--p", "5", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--p", "9"}).code, kExitUsage);
}

TEST(CliFiltration, TextAndJson) {
  const CliRun text = run({"filtration", "--p", "3", "--a", "2", "--format", "text"});
  ASSERT_EQ(text.code, kExitOk);
  std::istringstream lines(text.out);
  std::string line, last;
  int rows = 0;
  std::getline(lines, line);  // title
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    ++rows;
    last = line;
  }
  EXPECT_EQ(rows, 4);
  std::istringstream fields(last);
  int k, dim, hom, ext;
  fields >> k >> dim >> hom >> ext;
  EXPECT_EQ(hom, 2);
  EXPECT_EQ(ext, 1);

  const CliRun json = run({"filtration", "--p", "5", "--a", "2", "--format", "json"});
  ASSERT_EQ(json.code, kExitOk);
  const auto j = nlohmann::json::parse(json.out);
  EXPECT_EQ(j["rows"].size(), 6u);
  EXPECT_TRUE(j["pre_filtration"].is_null());
  EXPECT_TRUE(j["rows"][0]["ext11"].is_null());

  const auto j33 = nlohmann::json::parse(run({"filtration", "--p", "3", "--a", "3", "--format", "json"}).out);
  const auto j32 = nlohmann::json::parse(run({"filtration", "--p", "3", "--a", "2", "--format", "json"}).out);
  EXPECT_EQ(j33["rows"][0]["hom_dim"], j32["rows"][0]["hom_dim"]);
  EXPECT_EQ(j33["rows"][3]["hom_dim"], j32["rows"][3]["hom_dim"]);
  EXPECT_EQ(j33["pre_filtration"], (nlohmann::json{0, 1, 2, 3}));

  const CliRun csv = run({"filtration", "--p", "3", "--a", "2", "--format", "csv"});
  EXPECT_EQ(csv.out, "k,rep_dim,hom_dim,ext11\n0,3,3,\n1,4,3,\n2,5,2,1\n3,6,2,1\n");
}

TEST(CliSweep, RowsDeterminismAndOutputFile) {
  const CliRun small = run({"sweep", "--max-pa", "6"});
  ASSERT_EQ(small.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(small.out)["rows"].size(), 1u);

  const auto dir = std::filesystem::temp_directory_path() / "gk_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "sweep.json").string();
  const CliRun full = run({"sweep", "--max-pa", "50", "--jobs", "4", "--format", "json", "--out", path});
  ASSERT_EQ(full.code, kExitOk) << full.err;
  EXPECT_TRUE(full.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["rows"].size(), 38u);
  EXPECT_EQ(j["max_pa"], 50);

  const auto serial = strip_timing(nlohmann::json::parse(run({"sweep", "--max-pa", "30", "--jobs", "1"}).out));
  const auto parallel = strip_timing(nlohmann::json::parse(run({"sweep", "--max-pa", "30", "--jobs", "8"}).out));
  EXPECT_EQ(serial.dump(), parallel.dump());

  const CliRun csv = run({"sweep", "--max-pa", "10", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "p,a,dim_ma,ext11,rank_lower,rank_upper,conjecture_zp,ms");
}

TEST(CliSweep, Errors) {
  EXPECT_EQ(run({"sweep", "--max-pa", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--jobs", "0"}).code, kExitUsage);
  const CliRun io = run({"sweep", "--max-pa", "6", "--out", "/nonexistent-dir/for/sure/out.json"});
  EXPECT_EQ(io.code, kExitIo);
  EXPECT_NE(io.err.find("cannot open"), std::string::npos);
}

}  // namespace
}  // namespace gk
