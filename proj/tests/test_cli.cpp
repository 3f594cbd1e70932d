#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ajd/cli.hpp"

using namespace ajd;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::main(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<nlohmann::json> json_lines(const std::string& s) {
  std::vector<nlohmann::json> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST(ParseChain, Examples) {
  cli::Command c;
  Chain a = cli::parse_chain("1*[1,2] - 1*[2,1]", c);
  Chain b = Chain::word(Word{1, 2}, 0);
  b -= Chain::word(Word{2, 1}, 0);
  EXPECT_EQ(a, b);
  Chain merged = cli::parse_chain("2*[1,2] + 3*[1,2]", c);
  EXPECT_EQ(merged.size(), 1U);
  EXPECT_EQ(merged.coefficient(Word{1, 2}), Coefficient(5));
  c.p = 3;
  EXPECT_THROW(cli::parse_chain("[1,5]", c), InputError);
  EXPECT_THROW(cli::parse_chain("1*[1,", c), ParseError);
}

TEST(ParseChain, RenderRoundTrip) {
  cli::Command c;
  for (const char* text : {"1*[1,2] - 1*[2,1]", "3/2*[1] + 1*[2,2,1]", "0", "-1*[3,1,2]"}) {
    Chain x = cli::parse_chain(text, c);
    EXPECT_EQ(cli::parse_chain(x.str(), c), x) << text;
    EXPECT_EQ(cli::parse_chain(x.str(), c).str(), x.str()) << text;
  }
}

TEST(Cli, DimsTotal) {
  CliRun r = run({"dims", "h", "--n", "9", "--p", "9", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1U);
  EXPECT_EQ(lines[0]["value"], "5373540");
  EXPECT_EQ(lines[0]["anchor"], "h-dimension-total");
  EXPECT_EQ(lines[0]["method"], "formula");
}

TEST(Cli, DimsBothMethods) {
  CliRun r = run({"dims", "h", "--multidegree", "2,2,2", "--method", "both", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1U);
  EXPECT_EQ(lines[0]["status"], "pass");
  EXPECT_EQ(lines[0]["value"], lines[0]["oracle_value"]);
}

TEST(Cli, ReducePrimeLengthOne) {
  CliRun r = run({"reduce", "--space", "prime", "--chain", "1*[1]", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_lines(r.out).at(0)["result"], "0");
}

TEST(Cli, EtaAndFold) {
  CliRun r = run({"eta", "--chain", "1*[1,2]", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_lines(r.out).at(0)["result"], "-1*[1,2] + 1*[2,1]");
  CliRun f = run({"fold", "--kind", "l", "--n", "2", "--chain", "1*[1,2]"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("INFO fold"), std::string::npos);
}

TEST(Cli, EnumerateJson) {
  CliRun r = run({"enumerate", "--space", "lie", "--multidegree", "3,5", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  nlohmann::json j = json_lines(r.out).at(0);
  EXPECT_EQ(j["multidegree"], nlohmann::json::array({3, 5}));
  EXPECT_EQ(j["space"], "lie");
  EXPECT_EQ(j["dimension"], 7);
  EXPECT_EQ(j["words"].size(), 7U);
  EXPECT_EQ(j["certificate"]["rank"], 7);
}

TEST(Cli, RhoSchedules) {
  CliRun r = run({"rho", "--swingword", "<1 | (2 3) | 4>", "--check-schedules"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS rho:schedule-independence"), std::string::npos);
}

TEST(Cli, ClassFromTreeFile) {
  std::filesystem::path path = std::filesystem::temp_directory_path() / "ajd_cli_strut.json";
  {
    std::ofstream f(path);
    f << R"({"vertices":[0,1],"edges":[[0,1]],"cyclic":{},"legs":{"0":1,"1":2}})";
  }
  CliRun r = run({"class", "--tree", path.string(), "--format", "json"});
  std::filesystem::remove(path);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json_lines(r.out).at(0)["swingword"], "<2 | 1>");
  EXPECT_EQ(run({"class", "--tree", "/nonexistent/tree.json"}).code, 2);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"eta", "--chain", "1*[1,"}).code, 2);
  EXPECT_EQ(run({"eta", "--chain", "1*[1,4]", "--p", "3"}).code, 2);
  EXPECT_EQ(run({"dims", "h", "--n", "9", "--p", "9", "--char", "2"}).code, 2);
  EXPECT_EQ(run({"dims", "h", "--n", "9", "--p", "9", "--char", "3"}).code, 0);
  EXPECT_EQ(run({"enumerate", "--space", "h", "--multidegree", "5,5,5", "--max-degree", "9"}).code,
            2);
  EXPECT_EQ(run({"verify", "--suite", "oracle", "--max-degree", "4", "--p", "2"}).code, 0);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, FailureExitsOneWithInput) {
  // The lemmas suite includes the all-tails form of y-triviality, which fails on the empty tail.
  CliRun r = run({"verify", "--suite", "lemmas", "--max-degree", "3", "--p", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL prop:y-triviality"), std::string::npos);
  EXPECT_NE(r.out.find("input: "), std::string::npos);
}

TEST(Cli, JsonOneObjectPerRecord) {
  CliRun r = run({"section4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto lines = json_lines(r.out);
  EXPECT_EQ(lines.size(), 27U + 3U + 2U);
  for (const auto& j : lines) {
    EXPECT_TRUE(j.contains("anchor"));
    EXPECT_TRUE(j.contains("status"));
  }
}

TEST(Cli, Deterministic) {
  std::vector<std::string> args{"evenruns", "--multidegree", "3,5", "--format", "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  std::vector<std::string> spot{"verify", "--suite", "lemmas", "--max-degree", "3", "--p", "2",
                                "--seed", "7"};
  EXPECT_EQ(run(spot).out, run(spot).out);
}
