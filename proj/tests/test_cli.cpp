#include "cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace wrhermite;
using wrhermite::cli::Json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "wrhermite");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        v.push_back(l);
    return v;
}

} // namespace

TEST(Cli, ExpandKostkaHermite)
{
    const auto r = invoke({"expand", "-p", "1,1", "--basis", "hermite", "--method", "kostka"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["schema"], "wrhermite/1");
    EXPECT_EQ(j["coefficients"], Json::array({"1", "2"}));
}

TEST(Cli, ExpandMonomial)
{
    auto r = invoke({"expand", "-p", "2,1", "--basis", "monomial", "--method", "wronskian"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["coefficients"], Json::array({"1", "0"}));
    r = invoke({"expand", "-p", "3", "--basis", "monomial"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["coefficients"], Json::array({"1", "-3"}));
}

TEST(Cli, ExpandMethodsAgree)
{
    for (const char* basis : {"monomial", "hermite"}) {
        const auto w = invoke({"expand", "-p", "4,2,2,1", "--basis", basis, "--method", "wronskian"});
        const auto c = invoke({"expand", "-p", "4,2,2,1", "--basis", basis, "--method", "character"});
        ASSERT_EQ(w.code, 0);
        EXPECT_EQ(Json::parse(w.out)["coefficients"], Json::parse(c.out)["coefficients"]);
    }
    const auto k = invoke({"expand", "-p", "4,2,2,1", "--basis", "hermite", "--method", "kostka"});
    const auto w = invoke({"expand", "-p", "4,2,2,1", "--basis", "hermite"});
    EXPECT_EQ(Json::parse(k.out)["coefficients"], Json::parse(w.out)["coefficients"]);
}

TEST(Cli, ExpandLargeCoefficientsAreStrings)
{
    const auto r = invoke({"expand", "-p", "9,7,5,3,1", "--basis", "hermite", "--method", "kostka"});
    ASSERT_EQ(r.code, 0);
    for (const auto& c : Json::parse(r.out)["coefficients"])
        EXPECT_TRUE(c.is_string());
}

TEST(Cli, ExpandCsv)
{
    const auto r = invoke({"expand", "-p", "1,1", "--basis", "hermite", "--method", "kostka", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "k,power,coefficient\r\n0,2,1\r\n1,0,2\r\n");
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(invoke({"expand", "-p", "1,1", "--basis", "monomial", "--method", "kostka"}).code, 2);
    EXPECT_EQ(invoke({"expand", "-p", "1,x"}).code, 2);
    EXPECT_EQ(invoke({"expand", "-p", "1,2"}).code, 2);
    EXPECT_EQ(invoke({"expand", "-p", ""}).code, 2);
    EXPECT_EQ(invoke({"expand"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--n-max", "0"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--n-max", "3", "--checks", "nope"}).code, 2);
    EXPECT_EQ(invoke({"table", "character", "9"}).code, 2);
    EXPECT_EQ(invoke({"table", "kostka", "9"}).err, "error: table too large\n");
    EXPECT_EQ(invoke({"table", "dimension", "3"}).code, 2);
    EXPECT_EQ(invoke({"bounds", "-p", "2,1", "--q", "1"}).code, 2);
    EXPECT_EQ(invoke({"--format", "xml", "table", "kostka", "3"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, VerifyText)
{
    auto r = invoke({"verify", "--n-max", "8", "--checks", "triple-equality"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "triple-equality: 66 partitions OK\n");
    r = invoke({"verify", "--n-max", "6", "--q", "3", "--checks", "nonneg-bk"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "nonneg-bk: 29 partitions OK\n");
}

TEST(Cli, VerifyAllChecksPass)
{
    const auto r = invoke({"--jobs", "4", "--format", "json", "verify", "--n-max", "6"});
    ASSERT_EQ(r.code, 0) << r.out;
    const Json j = Json::parse(r.out);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["checks"].size(), cli::all_checks().size());
}

TEST(Cli, VerifyIsByteStableAcrossJobs)
{
    for (const char* fmt : {"json", "csv", "text"}) {
        const auto a = invoke({"--format", fmt, "--jobs", "1", "verify", "--n-max", "7", "--q", "3"});
        const auto b = invoke({"--format", fmt, "--jobs", "4", "verify", "--n-max", "7", "--q", "3"});
        EXPECT_EQ(a.code, 0);
        EXPECT_EQ(a.out, b.out) << fmt;
    }
}

TEST(Cli, GlobalFlagsAfterSubcommand)
{
    const auto a = invoke({"--format", "csv", "roots", "-p", "2,1", "--q", "3"});
    const auto b = invoke({"roots", "-p", "2,1", "--q", "3", "--format", "csv"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, BoundsOneOne)
{
    const auto r = invoke({"bounds", "-p", "1,1"});
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["schema"], "wrhermite/1");
    bool seen = false;
    for (const auto& c : j["checks"])
        if (c["bound"] == "real_imag" && c["observed"] == "imaginary") {
            EXPECT_NEAR(c["margin"].get<double>(), 0.0, 1e-12);
            EXPECT_FALSE(c["violated"].get<bool>());
            seen = true;
        }
    EXPECT_TRUE(seen);
    EXPECT_NEAR(j["bounds"]["turan"].get<double>(), 1 + std::sqrt(2.0), 1e-11);
}

TEST(Cli, BoundsFourTwoAllMarginsNonNegative)
{
    const auto r = invoke({"bounds", "-p", "4,2"});
    ASSERT_EQ(r.code, 0);
    for (const auto& c : Json::parse(r.out)["checks"])
        EXPECT_GE(c["margin"].get<double>(), -1e-7) << c.dump();
}

TEST(Cli, BoundsCsvRows)
{
    const auto r = invoke({"bounds", "-p", "2,1", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 6u);
    EXPECT_EQ(ls[0], "bound,observed,value,observed_max,margin,roots_checked,strict,violated\r");
}

TEST(Cli, RootsJson)
{
    const auto r = invoke({"roots", "-p", "2,1", "--q", "3"});
    ASSERT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    ASSERT_EQ(j["roots"].size(), 3u);
    std::vector<std::string> kinds;
    for (const auto& z : j["roots"]) {
        EXPECT_NEAR(z["modulus"].get<double>(), 1.0, 1e-11);
        kinds.push_back(z["kind"]);
    }
    std::sort(kinds.begin(), kinds.end());
    EXPECT_EQ(kinds, (std::vector<std::string>{"real", "star_ray", "star_ray"}));
}

TEST(Cli, RootsCsvHasNoNegativeZero)
{
    const auto r = invoke({"roots", "-p", "1,1,1", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.find("-0,"), std::string::npos);
}

TEST(Cli, Tables)
{
    auto r = invoke({"table", "character", "2"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out)["rows"], Json::parse(R"([["1","1"],["1","-1"]])"));
    r = invoke({"table", "character", "3"});
    EXPECT_EQ(Json::parse(r.out)["rows"][0], Json::parse(R"(["1","1","1"])"));
    r = invoke({"table", "kostka", "5"});
    const Json rows = Json::parse(r.out)["rows"];
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i][i], "1");
        for (std::size_t j = 0; j < i; ++j)
            EXPECT_EQ(rows[i][j], "0");
    }
    r = invoke({"table", "character", "3", "--format", "csv"});
    EXPECT_EQ(r.out, "lambda,\"1,1,1\",\"2,1\",3\r\n3,1,1,1\r\n\"2,1\",2,0,-1\r\n\"1,1,1\",1,-1,1\r\n");
}

TEST(Cli, CsvQuoting)
{
    EXPECT_EQ(cli::csv_field("plain"), "plain");
    EXPECT_EQ(cli::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(cli::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Cli, FloatFormatting)
{
    EXPECT_EQ(cli::fmt12(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(cli::fmt12(-0.0), "0");
    EXPECT_EQ(cli::fmt12(1e-20), "1e-20");
}
