#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using namespace monoconj;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "monoconj");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, AnalyzeTextContainsZetaLine) {
  const auto r = invoke({"analyze", "--gens", "4,6,13", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Z = (1-t^2)^2 (1-t^13) / (1-t^6) (1-t^26)\n"), std::string::npos);
  EXPECT_NE(r.out.find("poles: 2, 8/6, 37/26"), std::string::npos);
}

TEST(Cli, AnalyzeJsonDocument) {
  const auto r = invoke({"analyze", "8,12,26,53"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("milnor").get<int>(), 84);
  EXPECT_EQ(doc.at("zeta").at("text").get<std::string>(), "(1-t^2)^4 (1-t^53) / (1-t^6)^2 (1-t^26) (1-t^106)");
  EXPECT_TRUE(doc.at("conjecture").at("pass").get<bool>());
  EXPECT_EQ(doc.at("resolution").at("levels").size(), 3u);
}

TEST(Cli, IntegerPoleReport) {
  const auto r = invoke({"conjecture", "--gens", "12,18,37"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  const auto& p1 = doc.at("poles").at(1);
  EXPECT_EQ(p1.at("k").get<int>(), 1);
  EXPECT_TRUE(p1.at("integer").get<bool>());
  EXPECT_EQ(p1.at("case").get<std::string>(), "trivial");
}

TEST(Cli, InvalidGeneratorsExitTwo) {
  auto r = invoke({"analyze", "--gens", "2,3,5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotPlane"), std::string::npos);
  r = invoke({"analyze", "--gens", "4,6,x"});
  EXPECT_EQ(r.code, 2);
  r = invoke({"analyze"});
  EXPECT_EQ(r.code, 2);
  r = invoke({"bogus"});
  EXPECT_EQ(r.code, 2);
  r = invoke({"zeta", "4,6,14"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("NotCoprime"), std::string::npos);
}

TEST(Cli, GraphFormats) {
  const auto dot = invoke({"graph", "4,6,13"});
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("graph resolution {", 0), 0u);
  const auto js = invoke({"graph", "4,6,13", "--format", "json"});
  ASSERT_EQ(js.code, 0);
  EXPECT_EQ(nlohmann::json::parse(js.out).at("edges").size(), 5u);
  EXPECT_EQ(invoke({"graph", "4,6,13", "--format", "yaml"}).code, 2);
}

TEST(Cli, ZetaText) {
  const auto r = invoke({"zeta", "4,6,13"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Delta = (t-1) (t^6-1) (t^26-1) / (t^2-1)^2 (t^13-1)"), std::string::npos);
}

TEST(Cli, OutputIsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "8,12,26,53"}, {"graph", "8,12,26,53"}, {"fuzz", "--seed", "3", "--count", "20"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

TEST(Cli, FuzzSummary) {
  const auto r = invoke({"fuzz", "--seed", "5", "--count", "25", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc.at("instances").get<int>(), 25);
  EXPECT_TRUE(doc.at("failures").empty());
}

TEST(Cli, WritesOutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "monoconj_cli_test.txt";
  const auto r = invoke({"zeta", "4,6,13", "-o", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "Z = (1-t^2)^2 (1-t^13) / (1-t^6) (1-t^26)");
  std::filesystem::remove(path);
}
