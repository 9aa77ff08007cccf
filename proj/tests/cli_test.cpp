#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace permpoly::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "permpoly");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, TranspositionOverF3) {
  const Result r = invoke({"transposition", "--ring", "gf:3", "--a", "0", "--b", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("polynomial").at("coeffs"), json({1, 2}));
  EXPECT_EQ(j.at("report").at("is_exact_transposition"), true);
}

TEST(CliTest, TranspositionTableOverF5) {
  const Result r = invoke({"transposition", "--ring", "gf:5", "--a", "1", "--b", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out).at("report").at("table"), json({0, 3, 2, 1, 4}));
}

TEST(CliTest, DomainErrorsExitOne) {
  const Result r = invoke({"transposition", "--ring", "gf:3", "--a", "1", "--b", "1"});
  EXPECT_EQ(r.code, kExitDomainError);
  EXPECT_TRUE(r.out.empty());
  const json e = json::parse(r.err);
  EXPECT_EQ(e.at("error"), "EqualPoints");
  EXPECT_EQ(e.at("schema"), 1);

  EXPECT_EQ(json::parse(invoke({"experiment", "--ring", "zmod:2^2"}).err).at("error"),
            "ResidueFieldTooSmall");
  EXPECT_EQ(json::parse(invoke({"carlitz", "--ring", "gf:5", "--a", "0"}).err).at("error"),
            "ZeroPoint");
  EXPECT_EQ(json::parse(invoke({"lift", "--ring", "zmod:3^2", "--a", "0", "--b", "3"}).err).at("error"),
            "CongruentPoints");
}

TEST(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, kExitUsageError);
  EXPECT_EQ(invoke({"transposition", "--ring", "gf:3"}).code, kExitUsageError);
  EXPECT_EQ(invoke({"transposition", "--ring", "nonsense", "--a", "0", "--b", "1"}).code,
            kExitUsageError);
  EXPECT_EQ(invoke({"verify", "--ring", "gf:5", "--poly", "{", "--a", "0", "--b", "1"}).code,
            kExitUsageError);
}

TEST(CliTest, CriterionAndLift) {
  const json c = json::parse(invoke({"criterion", "--ring", "zmod:3^2", "--poly", R"({"coeffs":[0,0,0,1]})"}).out);
  EXPECT_EQ(c.at("condition1"), true);
  EXPECT_EQ(c.at("condition2"), false);
  EXPECT_EQ(c.at("verdict"), false);
  EXPECT_EQ(c.at("brute_force"), false);

  const json l = json::parse(invoke({"lift", "--ring", "zmod:3^2", "--a", "0", "--b", "1"}).out);
  EXPECT_EQ(l.at("residue_table"), json({1, 0, 2}));
  EXPECT_EQ(l.at("brute_force"), true);
}

TEST(CliTest, GroupOrders) {
  const json p = json::parse(invoke({"group", "--ring", "zmod:2^2"}).out);
  EXPECT_EQ(p.at("order"), 8);
  EXPECT_EQ(p.at("symmetric_order"), 24);
  const json g = json::parse(invoke({"group", "--ring", "gf:3", "--poly", R"({"coeffs":[1,2]})"}).out);
  EXPECT_EQ(g.at("order"), 2);
  EXPECT_EQ(invoke({"group", "--ring", "zmod:5^3"}).code, kExitDomainError);
}

TEST(CliTest, OutputIsDeterministic) {
  const std::vector<std::string> args = {"experiment", "--ring", "zmod:3^2", "--mode", "random",
                                         "--samples", "200", "--seed", "9", "--csv"};
  const Result a = invoke(args), b = invoke(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Result c = invoke({"experiment", "--ring", "zmod:3^2"});
  EXPECT_EQ(c.out, invoke({"experiment", "--ring", "zmod:3^2"}).out);
  EXPECT_EQ(json::parse(c.out).at("index"), 4);
}

TEST(CliTest, FieldTable) {
  const json j = json::parse(invoke({"field-table", "--ring", "gf:2^2"}).out);
  EXPECT_EQ(j.at("elements").size(), 4u);
  EXPECT_EQ(j.at("add").at(1), json({1, 0, 3, 2}));
  EXPECT_EQ(j.at("is_unit"), json({false, true, true, true}));
}

}  // namespace
}  // namespace permpoly::cli
