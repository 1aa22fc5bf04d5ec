#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "phlab");
    std::ostringstream out, err;
    const int code = phlab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        unsetenv("PHLAB_TOL");
        unsetenv("PHLAB_SEED");
    }
    void TearDown() override { SetUp(); }
};

std::vector<std::string> split_lines(const std::string& s)
{
    std::vector<std::string> lines;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);)
        if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_F(CliTest, KmuSphericalModel)
{
    const Result r = run({"kmu", "--n", "2", "--k", "-3", "--mu", "2", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["command"], "kmu");
    EXPECT_EQ(j["label"], "T1H^{n+1}");
    EXPECT_EQ(j["invariants"]["spherical"], true);
    EXPECT_NEAR(j["invariants"]["I"].get<double>(), 0.0, 1e-15);
    EXPECT_LE(j["invariants"]["B_norm"].get<double>(), 1e-9);
    ASSERT_TRUE(j["checks"].is_array());
    EXPECT_FALSE(j["checks"].empty());
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c.contains("name"));
        EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
    }
}

TEST_F(CliTest, KmuFlatModel)
{
    const Result r = run({"kmu", "--n", "2", "--k", "0", "--mu", "0", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_NEAR(j["invariants"]["rho"].get<double>(), 16.0, 1e-9);
    EXPECT_NEAR(j["invariants"]["I"].get<double>(), 1.0, 1e-15);
    EXPECT_EQ(j["invariants"]["spherical"], false);
    EXPECT_EQ(j["inputs"]["n"], 2);
}

TEST_F(CliTest, InvalidInputsExitTwo)
{
    EXPECT_EQ(run({"kmu", "--n", "2", "--k", "1", "--mu", "0"}).code, 2);
    EXPECT_EQ(run({"kmu", "--n", "1", "--k", "0", "--mu", "0"}).code, 2);
    EXPECT_EQ(run({"kmu", "--n", "2", "--k", "abc", "--mu", "0"}).code, 2);
    EXPECT_EQ(run({"tsb", "--m", "2", "--K", "0", "--r", "1"}).code, 2);
    EXPECT_EQ(run({"tsb", "--m", "3", "--K", "0", "--r", "-1"}).code, 2);
    EXPECT_EQ(run({"sweep", "--K", "-1", "--r-min", "2", "--r-max", "1"}).code, 2);
    EXPECT_EQ(run({"sweep", "--K", "-1", "--steps", "0"}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"kmu", "--n", "2", "--k", "0", "--mu", "0", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"kmu", "--n", "2", "--k", "0", "--mu", "0", "--tol", "-1"}).code, 2);
}

TEST_F(CliTest, TsbExamples)
{
    Result r = run({"tsb", "--m", "4", "--K", "-1", "--r", "1", "--lambda", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["invariants"]["spherical"], true);
    EXPECT_EQ(j["label"], "T1H^{n+1}");

    r = run({"tsb", "--m", "4", "--K", "1", "--r", "1", "--lambda", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = json::parse(r.out);
    EXPECT_EQ(j["invariants"]["sasakian"], true);
    EXPECT_TRUE(j["invariants"]["I"].is_null());
    EXPECT_EQ(j["label"], "SasakianUndetermined");

    r = run({"tsb", "--m", "4", "--K", "-1", "--r", "2", "--lambda", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = json::parse(r.out);
    EXPECT_NEAR(j["invariants"]["I"].get<double>(), -0.6, 1e-15);
    EXPECT_NEAR(j["invariants"]["rho_pipeline"].get<double>(), j["invariants"]["rho"].get<double>(), 1e-9);
}

TEST_F(CliTest, SweepCsv)
{
    const Result r = run({"sweep", "--K", "-1", "--r-min", "0.5", "--r-max", "2", "--steps", "31"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto lines = split_lines(r.out);
    ASSERT_EQ(lines.size(), 32u);
    EXPECT_EQ(lines[0], "r,lambda_b,k,mu,I,rho,spherical,sasakian");
    int spherical = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::vector<std::string> cells;
        std::istringstream is(lines[i]);
        for (std::string cell; std::getline(is, cell, ',');) cells.push_back(cell);
        ASSERT_EQ(cells.size(), 8u) << lines[i];
        if (cells[6] == "true") {
            ++spherical;
            EXPECT_DOUBLE_EQ(std::stod(cells[0]), 1.0);
        }
    }
    EXPECT_EQ(spherical, 1);
    // round-trip precision: 0.55 needs 17 significant digits
    EXPECT_NE(r.out.find("0.55000000000000004"), std::string::npos);
}

TEST_F(CliTest, SweepSasakianAndFlat)
{
    Result r = run({"sweep", "--K", "1"});
    ASSERT_EQ(r.code, 0);
    int sasakian = 0;
    for (const auto& line : split_lines(r.out))
        if (line.size() > 5 && line.substr(line.size() - 5) == ",true") ++sasakian;
    EXPECT_EQ(sasakian, 1);

    r = run({"sweep", "--K", "0", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["command"], "sweep");
    ASSERT_TRUE(j.contains("invariants"));
    ASSERT_TRUE(j.contains("checks"));
    ASSERT_TRUE(j.contains("label"));
}

TEST_F(CliTest, SpacesListing)
{
    const Result r = run({"spaces", "--n", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    const std::string dump = j.dump();
    EXPECT_NE(dump.find("P^3_1"), std::string::npos);
    EXPECT_NE(dump.find("P^3_2"), std::string::npos);
    EXPECT_EQ(j["command"], "spaces");
}

TEST_F(CliTest, JsonSchemaIsSharedAcrossCommands)
{
    const std::vector<std::vector<std::string>> cmds{
        {"kmu", "--n", "2", "--k", "0", "--mu", "1"},
        {"tsb", "--m", "3", "--K", "0.25", "--r", "1"},
        {"sweep", "--K", "-1", "--steps", "5"},
        {"spaces", "--n", "2"},
    };
    for (auto args : cmds) {
        args.insert(args.end(), {"--format", "json"});
        const Result r = run(args);
        ASSERT_EQ(r.code, 0) << args[0];
        const json j = json::parse(r.out);
        for (const char* key : {"command", "inputs", "invariants", "checks", "label"})
            EXPECT_TRUE(j.contains(key)) << args[0] << " " << key;
        EXPECT_EQ(j["command"], args[0]);
    }
}

TEST_F(CliTest, OutputIsDeterministic)
{
    const std::vector<std::string> args{"tsb", "--m", "5", "--K", "-2", "--r", "0.5", "--lambda", "2", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
    const std::vector<std::string> k{"kmu", "--n", "3", "--k", "0.5", "--mu", "1.3", "--seed", "9"};
    EXPECT_EQ(run(k).out, run(k).out);
}

TEST_F(CliTest, OutFlagWritesFile)
{
    const auto path = std::filesystem::temp_directory_path() / "phlab_cli_out_test.json";
    std::filesystem::remove(path);
    const Result r = run({"kmu", "--n", "2", "--k", "0", "--mu", "0", "--format", "json", "--out", path.string()});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    const json j = json::parse(in);
    EXPECT_EQ(j["command"], "kmu");
    std::filesystem::remove(path);
    EXPECT_EQ(run({"kmu", "--n", "2", "--k", "0", "--mu", "0", "--out", "/nonexistent/dir/x.json"}).code, 2);
}

TEST_F(CliTest, EnvironmentOverrides)
{
    setenv("PHLAB_TOL", "abc", 1);
    EXPECT_EQ(run({"kmu", "--n", "2", "--k", "0", "--mu", "0"}).code, 2);
    // an explicit flag wins over the environment
    EXPECT_EQ(run({"kmu", "--n", "2", "--k", "0", "--mu", "0", "--tol", "1e-9"}).code, 0);
    setenv("PHLAB_TOL", "1e-30", 1);
    const Result tight = run({"kmu", "--n", "3", "--k", "0.5", "--mu", "1.3", "--format", "json"});
    EXPECT_EQ(tight.code, 1);
    unsetenv("PHLAB_TOL");

    setenv("PHLAB_SEED", "-4", 1);
    EXPECT_EQ(run({"spaces"}).code, 2);
    setenv("PHLAB_SEED", "17", 1);
    EXPECT_EQ(run({"spaces"}).code, 0);
}

TEST_F(CliTest, VerifyPassesAndReportsChecks)
{
    const Result r = run({"verify", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["label"], "pass");
    EXPECT_GE(j["invariants"]["total_checks"].get<int>(), 40);
    EXPECT_EQ(j["invariants"]["criteria"].size(), 9u);
}

TEST_F(CliTest, VerifyAtMachineFloorFails)
{
    const Result r = run({"verify", "--tol", "1e-15"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}
