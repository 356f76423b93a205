#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bmat/bmx.hpp"
#include "bmat/catalog.hpp"
#include "bmat/cli.hpp"

using namespace bmat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bmat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string last_line(const std::string& s) {
  auto t = s;
  if (!t.empty() && t.back() == '\n') t.pop_back();
  return t.substr(t.rfind('\n') + 1);
}

}  // namespace

TEST(Cli, Cat) {
  auto r = run({"cat", "S10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, bmx::to_string(catalog::matroid("S10")));
  EXPECT_EQ(run({"cat", "R10"}).code, 2);
}

TEST(Cli, Lambda) {
  auto r = run({"lambda", "P9", "1,2,5,6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n# 3-separation, exact, non-minimal\n");
  auto braces = run({"lambda", "P9", "{1,2,5,6}"});
  EXPECT_EQ(braces.out, r.out);
  auto small = run({"lambda", "P9", "1,2"});
  EXPECT_EQ(small.code, 0);
  EXPECT_EQ(first_line(small.out), "2");
  EXPECT_NE(small.out.find("# not a 3-separation"), std::string::npos);
}

TEST(Cli, LambdaFromFile) {
  std::string path = testing::TempDir() + "p9.bmx";
  {
    std::ofstream f(path);
    f << bmx::to_string(catalog::matroid("P9"));
  }
  EXPECT_EQ(first_line(run({"lambda", path, "1,2,5,6"}).out), "2");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"lambda", "P9", "1,x"}).code, 2);
  EXPECT_EQ(run({"lambda", "P9", "1,,2"}).code, 2);
  EXPECT_EQ(run({"lambda", "P9", "10"}).code, 2);
  EXPECT_EQ(run({"lambda", "Q7", "1"}).code, 2);
  EXPECT_EQ(run({"--threads", "0", "exts", "P9"}).code, 2);
}

TEST(Cli, Minor) {
  EXPECT_EQ(first_line(run({"minor", "S10", "P9"}).out).substr(0, 4), "yes:");
  EXPECT_EQ(run({"minor", "P9", "S10"}).out, "no\n");
}

TEST(Cli, Exts) {
  auto r = run({"exts", "P9"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(last_line(r.out), "3 classes from 6 candidates");
  EXPECT_NE(r.out.find("[0101],[0110],[1001],[1010] ~ S10"), std::string::npos);
  auto co = run({"exts", "P9", "--co"});
  EXPECT_EQ(last_line(co.out), "8 classes from 22 candidates");
  auto filtered = run({"exts", "P9", "--exclude", "S10"});
  EXPECT_EQ(last_line(filtered.out), "2 classes from 6 candidates");
}

TEST(Cli, ThreadsDoNotChangeOutput) {
  EXPECT_EQ(run({"--threads", "2", "exts", "E5", "--co"}).out, run({"exts", "E5", "--co"}).out);
}

TEST(Cli, Splitter) {
  auto r = run({"splitter", "E5", "--exclude", "S10,S10*"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "splitter: yes");
  auto p9 = run({"splitter", "P9", "--exclude", "S10,S10*"});
  EXPECT_EQ(first_line(p9.out), "splitter: no");
  EXPECT_EQ(run({"splitter", "S10", "--exclude", "S10"}).code, 2);
}

TEST(Cli, Decomposer) {
  auto p9 = run({"decomposer", "P9", "--sep", "1,2,5,6", "--k", "3", "--exclude", "S10,S10*,E4,E5"});
  EXPECT_EQ(p9.code, 0);
  EXPECT_EQ(last_line(p9.out), "overall: induced");
  std::vector<std::string> e4 = {"decomposer", "E4", "--sep", "1,2,3,4,8,9", "--sep2", "1,2,5,6,7,10",
                                 "--k", "3", "--exclude", "S10,S10*"};
  auto failed = run(e4);
  EXPECT_EQ(failed.code, 1);
  EXPECT_EQ(last_line(failed.out), "overall: failed");
  e4.insert(e4.end(), {"--set-aside", "T12/e,T12\\e"});
  auto aside = run(e4);
  EXPECT_EQ(aside.code, 0);
  EXPECT_EQ(last_line(aside.out), "overall: induced-one-of-two");
  auto bad = run({"decomposer", "P9", "--sep", "1,2", "--k", "3", "--exclude", "S10"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("hypothesis not met"), std::string::npos);
}

TEST(Cli, VerifyPaper) {
  auto text = run({"verify-paper"});
  EXPECT_EQ(text.code, 0);
  EXPECT_EQ(last_line(text.out).substr(0, 5), "pass ");
  EXPECT_EQ(run({"verify-paper", "--strict"}).code, 1);
  EXPECT_EQ(run({"verify-paper", "--claim", "no.such.claim"}).code, 2);
  auto one = run({"verify-paper", "--claim", "claim3.e5-splitter"});
  EXPECT_EQ(one.out, "pass  claim3.e5-splitter\npass 1, fail 0, discrepancy 0\n");
  auto j1 = run({"verify-paper", "--json"});
  auto j2 = run({"--threads", "2", "verify-paper", "--json"});
  EXPECT_EQ(j1.out, j2.out);
  EXPECT_EQ(j1.out.front(), '{');
}
