#include "cli/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli/envelope.hpp"
#include "permball/text_format.hpp"

namespace permball::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = invoke(args);
  EXPECT_EQ(r.code, kSuccess) << r.err;
  return Json::parse(r.out);
}

TEST(Cli, DistanceExamples) {
  EXPECT_EQ(invoke_json({"distance", "1352647"})["result"]["distance"], 2);
  EXPECT_EQ(invoke_json({"distance", "--model", "ptd", "32415"})["result"]["distance"], 2);
  EXPECT_EQ(invoke_json({"distance", "123"})["result"]["distance"], 0);
  const auto text = invoke({"distance", "1324"});
  EXPECT_EQ(text.code, kSuccess);
  EXPECT_NE(text.out.find("distance: 1\n"), std::string::npos);
  EXPECT_NE(text.err.find("elapsed:"), std::string::npos);
}

TEST(Cli, EnvelopeSchema) {
  const auto doc = invoke_json({"genset", "-k", "2", "--method", "constructive"});
  for (const char* key : {"command", "model", "parameters", "result", "elapsed_ms"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["command"], "genset");
  EXPECT_EQ(doc["model"], "td");
  EXPECT_EQ(doc["result"]["count"], 11);
  EXPECT_EQ(doc["result"]["elements"].size(), 11u);
}

TEST(Cli, CountsAndSets) {
  EXPECT_EQ(invoke_json({"ball", "-n", "4", "-k", "1", "--count-only"})["result"]["count"], 11);
  EXPECT_FALSE(
      invoke_json({"ball", "-n", "4", "-k", "1", "--count-only"})["result"].contains("elements"));
  EXPECT_EQ(invoke_json({"count-irreducible", "-n", "7"})["result"]["count"], 2119);
  EXPECT_EQ(invoke_json({"count-irreducible", "-n", "6", "--cross-check"})["result"]["enumerated"],
            309);
  EXPECT_EQ(invoke_json({"neighbors", "--count-only", "4321"})["result"]["count"], 10);
  EXPECT_EQ(invoke_json({"genset", "--model", "ptd", "-k", "3", "--count-only"})["result"]["count"],
            90);
}

TEST(Cli, BasisWithProbe) {
  const auto doc =
      invoke_json({"basis", "--model", "ptd", "-k", "1", "--probe-extra-length"})["result"];
  EXPECT_EQ(doc["elements"], Json::array({"132", "321"}));
  EXPECT_EQ(doc["probe"]["length"], 4);
  EXPECT_EQ(doc["probe"]["found"], 0);
  const auto descent = invoke_json({"basis", "-k", "1", "--method", "descent"})["result"];
  EXPECT_EQ(descent["elements"], Json::array({"2143", "2413", "3142", "321"}));
}

TEST(Cli, EmittedPermutationsRoundTrip) {
  const auto doc = invoke_json({"genset", "-k", "2"})["result"];
  for (const auto& item : doc["elements"]) {
    const auto text = item.get<std::string>();
    EXPECT_EQ(format_permutation(parse_permutation(text)), text);
  }
}

TEST(Cli, TextMatchesJsonPayload) {
  const std::vector<std::vector<std::string>> commands = {
      {"distance", "1352647"},
      {"ball", "--model", "ptd", "-n", "4", "-k", "1"},
      {"basis", "-k", "1", "--probe-extra-length"},
      {"count-irreducible", "-n", "5"},
  };
  for (const auto& args : commands) {
    Envelope env;
    env.result = invoke_json(args)["result"];
    const auto text = invoke(args);
    EXPECT_EQ(text.out, render_text(env));
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"distance", "12a"}).code, kUsageError);
  EXPECT_EQ(invoke({"distance", "--model", "rev", "12"}).code, kUsageError);
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"genset", "-k", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"ball", "-n", "4"}).code, kUsageError);
  EXPECT_EQ(invoke({"verify", "--golden", "/nonexistent/golden.json"}).code, kUsageError);
}

TEST(Cli, BudgetRefusals) {
  EXPECT_EQ(invoke({"genset", "-k", "3"}).code, kBudgetRefused);
  EXPECT_EQ(invoke({"--max-len", "5", "ball", "-n", "6", "-k", "1"}).code, kBudgetRefused);
  EXPECT_EQ(invoke({"--max-states", "100", "basis", "-k", "1"}).code, kSuccess);
  EXPECT_EQ(invoke({"--max-states", "10", "basis", "-k", "1"}).code, kBudgetRefused);
}

TEST(Cli, MaxLenFromEnvironment) {
  ::setenv("PERMBALL_MAX_LEN", "5", 1);
  const auto refused = invoke({"ball", "-n", "6", "-k", "1", "--count-only"});
  const auto overridden = invoke({"--max-len", "6", "ball", "-n", "6", "-k", "1", "--count-only"});
  ::unsetenv("PERMBALL_MAX_LEN");
  EXPECT_EQ(refused.code, kBudgetRefused);
  EXPECT_EQ(overridden.code, kSuccess);
}

TEST(Cli, VerifyPassesOnTdRadiusOne) {
  const auto doc = invoke_json({"verify", "-k", "1", "--max-n", "6"});
  EXPECT_EQ(doc["result"]["failed"], 0);
  EXPECT_GT(doc["result"]["passed"], 10);
}

TEST(Cli, VerifyFailsOnCorruptedGolden) {
  std::ifstream in(PERMBALL_DEFAULT_GOLDEN);
  auto golden = Json::parse(in);
  golden["generating_sets"]["td"]["1"] = Json::array({"2413"});
  const auto path = std::filesystem::temp_directory_path() / "permball_corrupt_golden.json";
  std::ofstream(path) << golden.dump();
  const auto r = invoke({"verify", "-k", "1", "--max-n", "5", "--golden", path.string()});
  std::filesystem::remove(path);
  EXPECT_EQ(r.code, kVerificationFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace permball::cli
