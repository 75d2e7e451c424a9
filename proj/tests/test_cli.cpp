#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bpm/cli.hpp"

namespace bpm::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("bpm_cli_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

std::string run_binary(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" BPMSTAR_EXE "\" " + args;
  std::string text;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return text;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, got);
  pclose(pipe);
  return text;
}

TEST(Cli, CoeffAcrossMethods) {
  const auto k22 = temp_file("k22.txt", "2\n11\n11\n");
  for (const char* m : {"formula", "mobius", "chisum", "elemsum", "permitted"}) {
    const auto r = call({"coeff", "--graph", k22, "--method", m});
    EXPECT_EQ(r.code, 0) << m;
    EXPECT_EQ(r.out, "1\n") << m;
  }
  const auto g4 = temp_file("g4.txt", "4\n1011\n1011\n1011\n0000\n");
  for (const char* m : {"formula", "mobius", "chisum", "permitted"}) EXPECT_EQ(call({"coeff", "--graph", g4, "--method", m}).out, "4\n") << m;
  EXPECT_EQ(call({"coeff", "--graph", g4, "--method", "elemsum"}).code, 2);
  EXPECT_EQ(call({"coeff", "--seq", "4; (1,2)(4,4)"}).out, "-2\n");
}

TEST(Cli, Verify) {
  const auto r = call({"verify", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "16 subset coefficients checked; 16 evaluation points checked\nOK\n");
  EXPECT_EQ(call({"verify", "--n", "3"}).code, 0);
  const auto capped = call({"verify", "--n", "5"});
  EXPECT_EQ(capped.code, 2);
  EXPECT_NE(capped.err.find("--huge"), std::string::npos);
}

TEST(Cli, Count) {
  const auto r = call({"count", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("monomial_count\t9\n"), std::string::npos);
  EXPECT_NE(r.out.find("max_abs_coefficient\t1\n"), std::string::npos);
  EXPECT_EQ(r.out.find("FAILED"), std::string::npos);
}

TEST(Cli, Sens) {
  const auto r = call({"sens", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("4\t6\t6\t1\n"), std::string::npos);
  EXPECT_NE(call({"sens", "--n", "2", "--format", "json"}).out.find("\"sensitivity\": 2"), std::string::npos);
}

TEST(Cli, Apxdeg) {
  const auto r = call({"apxdeg", "--n", "3", "--eps", "1/3", "--assemble"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("OK\n"), std::string::npos);
  const auto w = call({"apxdeg", "--n", "2", "--eps", "1/3"});
  EXPECT_EQ(w.code, 0);
  EXPECT_NE(w.err.find("warning"), std::string::npos);
  EXPECT_EQ(call({"apxdeg", "--n", "2", "--eps", "0.3"}).code, 2);
  EXPECT_EQ(call({"apxdeg", "--n", "2", "--eps", "1/2"}).code, 2);
}

TEST(Cli, PolyAndEval) {
  const auto tsv = call({"poly", "--n", "2"});
  EXPECT_EQ(tsv.code, 0);
  EXPECT_EQ(std::count(tsv.out.begin(), tsv.out.end(), '\n'), 9);
  const auto poly = temp_file("p2.tsv", tsv.out);
  const auto k22 = temp_file("k22e.txt", "2\n11\n11\n");
  EXPECT_EQ(call({"eval", "--graph", k22, "--poly", poly}).out, "1\n");
  const auto json = temp_file("p2.json", call({"poly", "--n", "2", "--format", "json"}).out);
  EXPECT_EQ(call({"eval", "--graph", k22, "--poly", json}).out, "1\n");
  const auto empty = temp_file("e2.txt", "2\n00\n00\n");
  EXPECT_EQ(call({"eval", "--graph", empty, "--poly", poly}).out, "0\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"nope"}).code, 2);
  EXPECT_EQ(call({"poly", "--n", "9"}).code, 2);
  const auto bad = temp_file("bad.txt", "2\n10\n1\n");
  EXPECT_EQ(call({"coeff", "--graph", bad}).code, 2);
  EXPECT_NE(call({"--help"}).out.find("4096"), std::string::npos);
}

TEST(Cli, PolyIsByteIdenticalAcrossThreadCounts) {
  const auto a = run_binary("poly --n 3", "OMP_NUM_THREADS=1");
  const auto b = run_binary("poly --n 3", "OMP_NUM_THREADS=4");
  const auto c = run_binary("poly --n 3");
  EXPECT_FALSE(a.empty());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

}  // namespace
}  // namespace bpm::cli
