#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "bmat/report_json.hpp"
#include "bmat/verify.hpp"

using namespace bmat;
using verify::Status;

namespace {

const verify::Report& report() {
  static const verify::Report r = verify::verify_paper();
  return r;
}

Status status_of(const std::string& id) {
  for (const auto& c : report().claims)
    if (c.id == id) return c.status;
  ADD_FAILURE() << "no claim " << id;
  return Status::Fail;
}

}  // namespace

TEST(Verify, NoFailures) {
  EXPECT_EQ(report().summary.fail, 0);
  for (const auto& c : report().claims) EXPECT_NE(c.status, Status::Fail) << c.id << ": " << c.computed;
}

TEST(Verify, SummaryMatchesClaims) {
  std::map<Status, int> n;
  for (const auto& c : report().claims) ++n[c.status];
  EXPECT_EQ(report().summary.pass, n[Status::Pass]);
  EXPECT_EQ(report().summary.fail, n[Status::Fail]);
  EXPECT_EQ(report().summary.discrepancy, n[Status::Discrepancy]);
}

TEST(Verify, IdsUniqueWithLocators) {
  std::set<std::string> ids;
  for (const auto& c : report().claims) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.paper_ref.empty()) << c.id;
    EXPECT_FALSE(c.expected.empty()) << c.id;
  }
}

TEST(Verify, EveryPrintedCellOnce) {
  auto cells = verify::printed_cell_ids();
  EXPECT_FALSE(cells.empty());
  for (const auto& id : cells) {
    auto n = std::count_if(report().claims.begin(), report().claims.end(),
                           [&](const verify::ClaimResult& c) { return c.id == id; });
    EXPECT_EQ(n, 1) << id;
  }
}

TEST(Verify, SpecificClaims) {
  EXPECT_EQ(status_of("claim2.coextension-class-count"), Status::Pass);
  EXPECT_EQ(status_of("claim2.extension-class-count"), Status::Pass);
  EXPECT_EQ(status_of("claim3.e5-splitter"), Status::Pass);
  EXPECT_EQ(status_of("claim4.coupling"), Status::Pass);
  EXPECT_EQ(status_of("claim4.corollary22"), Status::Pass);
  EXPECT_EQ(status_of("table1a.A22.alpha.lambdaA1"), Status::Pass);
  EXPECT_EQ(status_of("t12.splitter"), Status::Pass);
  EXPECT_EQ(status_of("intro.f7star-s8-generators"), Status::Discrepancy);
  EXPECT_EQ(status_of("e4.a1-cocircuit-cover"), Status::Discrepancy);
}

TEST(Verify, KnownDiscrepancies) {
  std::set<std::string> got;
  for (const auto& c : report().claims)
    if (c.status == Status::Discrepancy) got.insert(c.id);
  std::set<std::string> expected = {
      "intro.f7star-s8-generators",
      "claim3.lists-on-displayed-matrix",
      "e4.other-rows-have-s10",
      "e4.a1-cocircuit-cover",
      "claim4.all-good-side1",
      "table2b.A00110-B11100.110100.excluded",
      "table2b.A00110-B11100.110100.verdict",
      "table2b.A00110-B11100.111100.excluded",
      "table2b.A00110-B11100.111100.verdict",
      "table2b.A00110-B11100.001001.excluded",
      "table2b.A00110-B11100.001001.verdict",
      "table2b.A00110-B11100.000101.excluded",
      "table2b.A00110-B11100.000101.verdict",
      "table2b.A10110-B01111.100011.excluded",
      "table2b.A10110-B01111.100011.verdict",
      "table2b.A10110-B01111.110010.excluded",
      "table2b.A10110-B01111.110010.verdict",
      "table2b.A10110-B01111.110011.verdict",
      "table2b.C11000.001100.verdict",
      "table2b.C11000.111000.verdict",
  };
  EXPECT_EQ(got, expected);
}

TEST(Verify, SelectClaim) {
  auto r = report();
  EXPECT_TRUE(verify::select_claim(r, "claim3.e5-splitter"));
  ASSERT_EQ(r.claims.size(), 1u);
  EXPECT_EQ(r.summary.pass, 1);
  EXPECT_EQ(r.summary.fail + r.summary.discrepancy, 0);
  auto s = report();
  EXPECT_FALSE(verify::select_claim(s, "nope"));
  EXPECT_EQ(s.claims.size(), report().claims.size());
}

TEST(Verify, JsonSchemaAndStability) {
  auto text = verify::to_json_string(report());
  EXPECT_EQ(text, verify::to_json_string(verify::verify_paper(verify::Options{2})));
  auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["version"], verify::kVersion);
  ASSERT_TRUE(j["claims"].is_array());
  EXPECT_EQ(j["claims"].size(), report().claims.size());
  for (const auto& c : j["claims"]) {
    for (const char* key : {"id", "status", "expected", "computed", "paper_ref"}) EXPECT_TRUE(c.contains(key)) << key;
    std::string st = c["status"];
    EXPECT_TRUE(st == "pass" || st == "fail" || st == "discrepancy");
  }
  EXPECT_EQ(j["summary"]["pass"], report().summary.pass);
  EXPECT_EQ(j["summary"]["discrepancy"], report().summary.discrepancy);
}
