#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace {
struct Run {
    int rc;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "gch_cli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int rc = gch::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {rc, out.str(), err.str()};
}

nlohmann::json err_json(const Run& r) { return nlohmann::json::parse(r.err); }
} // namespace

TEST(CliEval, QwExample) {
    auto r = cli({"eval", "--kind", "qw", "--alpha0", "0", "--alpha1", "0", "--gamma", "1.5", "--eps", "0.01", "--x", "1"});
    ASSERT_EQ(r.rc, 0) << r.err;
    EXPECT_EQ(r.out, "x,z,value,eps0_part,eps1_part\n1,0.5,0.995,1,-0.5\n");
}

TEST(CliEval, FKindAndJson) {
    auto r = cli({"eval", "--kind", "f", "--alpha0", "0", "--gamma", "1.5", "--x", "0.3", "--format", "json"});
    ASSERT_EQ(r.rc, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["rows"][0]["value"], 1.0);
}

TEST(CliEval, MissingAlpha1) {
    auto r = cli({"eval", "--kind", "qw", "--alpha0", "0", "--gamma", "1.5", "--x", "1"});
    EXPECT_EQ(r.rc, 2);
    EXPECT_EQ(err_json(r)["field"], "alpha1");
}

TEST(CliEval, BadFlag) {
    auto r = cli({"eval", "--kind", "qq", "--x", "1"});
    EXPECT_EQ(r.rc, 2);
    EXPECT_EQ(err_json(r)["schema_version"], 1);
}

TEST(CliSpectrum, Rows) {
    auto r = cli({"spectrum", "--b", "1", "--n-max", "2"});
    ASSERT_EQ(r.rc, 0) << r.err;
    EXPECT_EQ(r.out, "l,order_i,n_values,E_squared,formula_id\n0,0,1,6,level-0\n0,0,2,14,level-0\n");
}

TEST(CliSpectrum, NonPositiveTension) {
    auto r = cli({"spectrum", "--b", "-1"});
    EXPECT_EQ(r.rc, 2);
    EXPECT_EQ(err_json(r)["field"], "b");
}

TEST(CliVerify, RecurrenceSuite) {
    auto r = cli({"verify", "--suite", "recurrence", "--format", "json", "--threads", "2"});
    EXPECT_EQ(r.rc, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["summary"]["failed"], 0);
    EXPECT_GT(j["summary"]["total"].get<int>(), 0);
}

TEST(CliVerify, UnknownSuite) {
    auto r = cli({"verify", "--suite", "nope"});
    EXPECT_EQ(r.rc, 2);
    EXPECT_EQ(err_json(r)["field"], "suite");
}

TEST(CliClassify, Defaults) {
    auto r = cli({"classify"});
    ASSERT_EQ(r.rc, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["case_label"], "III_b");
    EXPECT_EQ(j["polynomial_admissible"], true);
}

TEST(CliClassify, CaseTwoAndComplexExponent) {
    auto r = cli({"classify", "--a1", "0"});
    ASSERT_EQ(r.rc, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["case_label"], "II");
    auto c = cli({"classify", "--a0", "1", "--d1", "1"});
    EXPECT_EQ(c.rc, 2);
    EXPECT_EQ(err_json(c)["field"], "d1");
}
