#include <sstream>

#include <gtest/gtest.h>

#include "witt_paths_cli.hpp"

namespace
{

using nlohmann::json;

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    int code = wittpaths::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

json call_json(std::vector<std::string> args, int expected_code = 0)
{
    args.insert(args.begin(), {"--json", "--no-timing"});
    Result r = call(std::move(args));
    EXPECT_EQ(r.code, expected_code) << r.out << r.err;
    return json::parse(r.out);
}

void expect_schema(const json &j)
{
    ASSERT_TRUE(j.is_object());
    EXPECT_TRUE(j.at("command").is_string());
    EXPECT_TRUE(j.at("input").is_object());
    EXPECT_TRUE(j.at("results").is_object());
    for (const auto &[k, v] : j.at("results").items()) {
        EXPECT_TRUE(v.is_string()) << k;
    }
    const std::string status = j.at("status");
    EXPECT_TRUE(status == "ok" || status == "fail" || status == "error");
    if (j.contains("mismatch")) {
        EXPECT_TRUE(j.at("mismatch").is_object());
    }
}

TEST(Cli, CountTwoTwo)
{
    json j = call_json({"count", "-m", "2,2"});
    expect_schema(j);
    EXPECT_EQ(j["command"], "count");
    EXPECT_EQ(j["results"]["theta"], "10");
    EXPECT_EQ(j["results"]["theta_plus"], "6");
    EXPECT_EQ(j["results"]["theta_minus"], "4");
    EXPECT_EQ(j["results"]["F"], "12");
    EXPECT_EQ(j["results"]["F_prime"], "48");
    EXPECT_EQ(j["results"]["P"], "-1");
    EXPECT_EQ(j["results"]["M"], "1");
}

TEST(Cli, CountRationalAndSingleEdge)
{
    EXPECT_EQ(call_json({"count", "-m", "3,3"})["results"]["F"], "172/3");
    json one = call_json({"count", "-m", "1"});
    EXPECT_EQ(one["results"]["theta"], "2");
    EXPECT_FALSE(one["results"].contains("F"));
}

TEST(Cli, CountStripsZeros)
{
    json j = call_json({"count", "-m", "2,0,2"});
    EXPECT_EQ(j["input"]["m"], json::array({2, 2}));
    EXPECT_EQ(j["results"]["theta"], "10");
    ASSERT_TRUE(j.contains("notices"));
    EXPECT_FALSE(j["notices"].empty());
}

TEST(Cli, MalformedInputIsUsageError)
{
    EXPECT_EQ(call({"count", "-m", "2,x"}).code, 2);
    EXPECT_EQ(call({"count", "-m", "0,0"}).code, 2);
    EXPECT_EQ(call({"count"}).code, 2);
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({"verify", "sherman", "--edges", "1"}).code, 2);
    EXPECT_EQ(call({"dims", "--kind", "Q", "-k", "2,2"}).code, 2);
}

TEST(Cli, Oracles)
{
    json words = call_json({"oracle", "words", "-m", "2,2"});
    expect_schema(words);
    EXPECT_EQ(words["results"]["total_words"], "48");
    EXPECT_EQ(words["results"]["nonperiodic_classes"], "10");
    EXPECT_EQ(call_json({"oracle", "necklaces", "-m", "2,2"})["results"]["nonperiodic_classes"], "1");
    EXPECT_EQ(call_json({"oracle", "signed-necklaces", "-m", "1,1,1"})["results"]["nonperiodic_classes"], "16");
}

TEST(Cli, OracleListing)
{
    json j = call_json({"oracle", "words", "-m", "1,1", "--list"});
    ASSERT_TRUE(j.contains("listing"));
    EXPECT_EQ(j["listing"].size(), 4u);
}

TEST(Cli, OracleBoundIsUsageError)
{
    json j = call_json({"oracle", "words", "-m", "7,7"}, 2);
    EXPECT_EQ(j["status"], "error");
    EXPECT_EQ(call({"--no-timing", "oracle", "necklaces", "-m", "7,6", "--max-n", "13"}).code, 0);
}

TEST(Cli, Dims)
{
    json j = call_json({"dims", "--kind", "H", "-k", "2,2"});
    expect_schema(j);
    EXPECT_EQ(j["results"]["faa"], "5");
    EXPECT_EQ(j["results"]["series"], "5");
    EXPECT_EQ(j["results"]["agree"], "true");
    EXPECT_EQ(call_json({"dims", "--kind", "F", "-k", "1,1"})["results"]["faa"], "4");
}

TEST(Cli, VerifyPasses)
{
    json j = call_json({"verify", "sherman", "--edges", "2", "--degree", "8"});
    expect_schema(j);
    EXPECT_EQ(j["status"], "ok");
    EXPECT_FALSE(j.contains("mismatch"));
    EXPECT_EQ(call({"verify", "witt-classical", "--edges", "3", "--degree", "6"}).code, 0);
    EXPECT_EQ(call({"verify", "gen-witt", "--kind", "H", "--edges", "2", "--degree", "5"}).code, 0);
    EXPECT_EQ(call({"verify", "plus-minus", "--edges", "2", "--degree", "5"}).code, 0);
}

TEST(Cli, VerifyCorruptedFails)
{
    json j = call_json({"verify", "cancellation", "--edges", "2", "--degree", "8", "--corrupt", "2,2"}, 1);
    expect_schema(j);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["mismatch"]["exponent"], json::array({2, 2}));
    EXPECT_TRUE(j["mismatch"]["lhs"].is_string());
    EXPECT_EQ(call({"verify", "sherman", "--edges", "2", "--degree", "4", "--corrupt", "1,1,1"}).code, 2);
}

TEST(Cli, OutputIsDeterministicWithoutTiming)
{
    const std::vector<std::string> args{"--no-timing", "count", "-m", "2,3,1"};
    Result a = call(args);
    Result b = call(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("elapsed_ms"), std::string::npos);
    EXPECT_NE(call({"count", "-m", "2,2"}).out.find("elapsed_ms"), std::string::npos);
}

TEST(Cli, PlainOutputIsLineOriented)
{
    Result r = call({"--no-timing", "count", "-m", "2,2"});
    EXPECT_NE(r.out.find("theta: 10\n"), std::string::npos);
    EXPECT_NE(r.out.find("status: ok\n"), std::string::npos);
}

TEST(Cli, Help)
{
    Result r = call({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("count"), std::string::npos);
}

} // namespace
