#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "secant/cli.hpp"

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::initializer_list<const char*> args)
{
    std::vector<const char*> argv{"secant3"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = secant::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(CliDegree, PlainText)
{
    const CliRun r = run_cli({"degree", "--d", "8"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "12\n");
}

TEST(CliDegree, EachMethod)
{
    for (const char* m : {"cofactor", "recurrence", "closed-form", "all"}) {
        const CliRun r = run_cli({"degree", "--d", "12", "--method", m});
        EXPECT_EQ(r.code, 0) << m;
        EXPECT_EQ(r.out, "104\n") << m;
    }
}

TEST(CliDegree, Json)
{
    const CliRun r = run_cli({"degree", "--d", "10", "--format", "json"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("{\"d\":10,\"degree\":44,", 0), 0u) << r.out;
    const auto j = nlohmann::ordered_json::parse(r.out);
    EXPECT_EQ(j["degree"], 44);
    EXPECT_EQ(j["method"], "all");
    EXPECT_EQ(j["methods_agree"], true);
    EXPECT_FALSE(j.contains("intermediates"));
}

TEST(CliDegree, JsonRoundTripIsByteIdentical)
{
    for (const auto& args : {std::initializer_list<const char*>{"degree", "--d", "11", "--format", "json", "-v"},
                             std::initializer_list<const char*>{"table", "--d-min", "8", "--d-max", "12", "--format",
                                                                "json"},
                             std::initializer_list<const char*>{"verify", "--d-max", "10", "--format", "json"}}) {
        const CliRun r = run_cli(args);
        ASSERT_EQ(r.code, 0) << r.err;
        const std::string reserialized = nlohmann::ordered_json::parse(r.out).dump() + "\n";
        EXPECT_EQ(reserialized, r.out);
    }
}

TEST(CliDegree, VerboseIntermediates)
{
    const CliRun r = run_cli({"degree", "--d", "8", "--verbose"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("ch(H) = 2 - T\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("ch(G) = 4 - T\n"), std::string::npos);
    EXPECT_NE(r.out.find("c_1 = 4*h + 2*T\n"), std::string::npos);
    EXPECT_NE(r.out.find("c_2 = 10*h^2 + 9*T*h + 2*T^2\n"), std::string::npos);
    EXPECT_NE(r.out.find("D_3 = 4*h^3 + 9*T*h^2 + 6*T^2*h\n"), std::string::npos);
    EXPECT_EQ(r.out.substr(r.out.size() - 3), "12\n");

    const CliRun j = run_cli({"degree", "--d", "8", "--verbose", "--format", "json"});
    const auto parsed = nlohmann::ordered_json::parse(j.out);
    EXPECT_EQ(parsed["intermediates"]["D_3"], "4*h^3 + 9*T*h^2 + 6*T^2*h");
}

TEST(CliDegree, BelowRangeIsUsageError)
{
    const CliRun r = run_cli({"degree", "--d", "7"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("d >= 8"), std::string::npos);
}

TEST(CliDegree, MissingAndMalformedArguments)
{
    EXPECT_EQ(run_cli({"degree"}).code, 1);
    EXPECT_EQ(run_cli({"degree", "--d", "eight"}).code, 1);
    EXPECT_EQ(run_cli({"degree", "--d", "9", "--method", "gauss"}).code, 1);
    EXPECT_EQ(run_cli({"degree", "--d", "9", "--format", "xml"}).code, 1);
    EXPECT_EQ(run_cli({}).code, 1);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliDegree, Csv)
{
    const CliRun r = run_cli({"degree", "--d", "9", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "d,degree,method,degree_berzolari,methods_agree\n9,25,all,25,true\n");
}

TEST(CliTable, Csv)
{
    const CliRun r = run_cli({"table", "--d-min", "8", "--d-max", "10", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "d,degree_porteous,degree_closed_form,degree_berzolari,match\n"
              "8,12,12,12,true\n"
              "9,25,25,25,true\n"
              "10,44,44,44,true\n");
    EXPECT_EQ(r.out.find('.'), std::string::npos);
}

TEST(CliTable, SingleRowAndText)
{
    const CliRun r = run_cli({"table", "--d-min", "8", "--d-max", "8"});
    EXPECT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string header, row, extra;
    std::getline(lines, header);
    std::getline(lines, row);
    EXPECT_FALSE(std::getline(lines, extra));
    EXPECT_NE(row.find("12"), std::string::npos);
    EXPECT_NE(row.find("true"), std::string::npos);
}

TEST(CliTable, RangeErrors)
{
    EXPECT_EQ(run_cli({"table", "--d-min", "10", "--d-max", "9"}).code, 1);
    EXPECT_EQ(run_cli({"table", "--d-min", "6", "--d-max", "9"}).code, 1);
    EXPECT_EQ(run_cli({"table", "--d-min", "8"}).code, 1);
}

TEST(CliVerify, DefaultRunPasses)
{
    const CliRun r = run_cli({"verify"});
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("verify d in [8, 40]: 13/13 checks passed"), std::string::npos) << r.out;
}

TEST(CliVerify, InjectedFaultExitsTwo)
{
    const CliRun r = run_cli({"verify", "--d-max", "10", "--inject-fault"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.out.find("FAIL  determinant: cofactor = recurrence = closed form  [d=8;"), std::string::npos) << r.out;
}

TEST(CliVerify, RangeErrors)
{
    EXPECT_EQ(run_cli({"verify", "--d-min", "7"}).code, 1);
    EXPECT_EQ(run_cli({"verify", "--d-min", "45"}).code, 1);
}

TEST(CliVerify, CsvHasNoFloatingPoint)
{
    const CliRun r = run_cli({"verify", "--d-max", "9", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("check,passed,d,expected,actual\n", 0), 0u);
    EXPECT_EQ(r.out.find('.'), std::string::npos);
}
