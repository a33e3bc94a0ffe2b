#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qbw/cli.hpp"

using namespace qbw;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "qbw");
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
    fs::path p = fs::temp_directory_path() / ("qbw_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    return p;
}

std::size_t count_files(const fs::path& root) {
    std::size_t n = 0;
    if (!fs::exists(root)) return 0;
    for (const auto& e : fs::recursive_directory_iterator(root)) n += e.is_regular_file();
    return n;
}

}  // namespace

TEST(Cli, Irrep) {
    auto a = run({"irrep", "--algebra", "A1", "--weight", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_NE(a.out.find("dim 4"), std::string::npos);
    auto b = run({"irrep", "--algebra", "A2", "--weight", "1,1", "--format", "json"});
    ASSERT_EQ(b.code, 0) << b.err;
    auto j = nlohmann::json::parse(b.out);
    EXPECT_EQ(j["schema"], "qbw-report/1");
    EXPECT_EQ(j["dim"], 8);
    EXPECT_EQ(j["bar_invariant"], true);
    EXPECT_EQ(j["relations"]["pass"], true);
    auto c = run({"irrep", "--algebra", "A2", "--weight", "1,0", "--format", "csv"});
    EXPECT_EQ(c.out, "index,weight\n1,\"(1,0)\"\n2,\"(-1,1)\"\n3,\"(0,-1)\"\n");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({"irrep", "--algebra", "A1", "--weight", "-1"}).code, 2);
    EXPECT_EQ(run({"irrep", "--algebra", "G2", "--weight", "1"}).code, 2);
    EXPECT_EQ(run({"irrep", "--algebra", "A2", "--weight", "1"}).code, 2);
    EXPECT_EQ(run({"irrep"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"verify", "--check", "nonsense"}).code, 2);
    EXPECT_EQ(run({"borel-weil", "--algebra", "A2", "--theta", "3", "--mu", "0,0"}).code, 2);
    EXPECT_EQ(run({"borel-weil", "--algebra", "A2", "--theta", "1", "--mu", "-1,0"}).code, 2);
    EXPECT_EQ(run({"irrep", "--weight", "1", "--v0", "1"}).code, 2);
    EXPECT_EQ(run({"irrep", "--weight", "1", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BorelWeil) {
    auto a = run({"borel-weil", "--algebra", "A1", "--theta", "", "--mu", "-2"});
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_NE(a.out.find("isomorphic to W(2), dim 3"), std::string::npos) << a.out;
    auto z = run({"borel-weil", "--algebra", "A1", "--theta", "", "--mu", "2"});
    EXPECT_EQ(z.code, 0);
    EXPECT_NE(z.out.find("zero, dim 0"), std::string::npos);
    auto inc = run({"borel-weil", "--algebra", "A1", "--mu", "-2", "--trunc", "1"});
    EXPECT_EQ(inc.code, 3);
    auto b = run({"borel-weil", "--algebra", "A2", "--theta", "1", "--mu", "1,-2", "--format", "json"});
    ASSERT_EQ(b.code, 0) << b.err;
    auto j = nlohmann::json::parse(b.out);
    EXPECT_EQ(j["report"]["data"]["dim"], 8);
    EXPECT_EQ(j["config"]["theta"], nlohmann::json::array({1}));
}

TEST(Cli, Haar) {
    auto a = run({"haar", "--pair", "t(1)[1,1]", "star t(1)[1,1]", "--algebra", "A1", "--v0", "2", "--format", "json"});
    ASSERT_EQ(a.code, 0) << a.err;
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["value_at_v0"], "16/17");
    EXPECT_EQ(run({"haar", "--pair", "t(0)[1,1]"}).out, "integral: 1*v^0\n");
    EXPECT_EQ(run({"haar", "--pair", "t(1)[3,1]"}).code, 2);
    EXPECT_EQ(run({"haar", "--pair", "u(1)[1,1]"}).code, 2);
}

TEST(Cli, SectionsAndFrobenius) {
    auto s = run({"sections", "--algebra", "A2", "--theta", "1", "--v", "trivial", "--trunc", "2", "--format", "csv"});
    ASSERT_EQ(s.code, 0) << s.err;
    EXPECT_NE(s.out.find("\"(0,0)\",1,1,1\n"), std::string::npos) << s.out;
    EXPECT_NE(s.out.find("\"(1,1)\",8,8,0\n"), std::string::npos) << s.out;
    auto f = run({"frobenius", "--algebra", "A1", "--weight", "2", "--mu", "-2", "--format", "json"});
    ASSERT_EQ(f.code, 0) << f.err;
    EXPECT_EQ(nlohmann::json::parse(f.out)["report"]["data"]["dim_module_hom"], 1);
    EXPECT_EQ(run({"frobenius", "--algebra", "A1", "--weight", "2", "--mu", "0", "--trunc", "1"}).code, 3);
}

TEST(Cli, VerifyIsDeterministic) {
    std::vector<std::string> args{"verify", "--check", "relations,dimensions,schur,determinism", "--algebra", "A1",
                                  "--max-weight", "2", "--format", "json"};
    auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["status"], "pass");
    ASSERT_EQ(j["suites"].size(), 4u);
    EXPECT_EQ(j["suites"][3]["subject"], "determinism");
    EXPECT_FALSE(j["suites"][2]["data"]["table"].empty());
    auto csv = run({"verify", "--check", "relations", "--algebra", "A1", "--max-weight", "1", "--format", "csv"});
    EXPECT_EQ(csv.out, "suite,check,pass\nrelations,A1 (0),pass\nrelations,A1 (1),pass\n");
}

TEST(Cli, CacheColdWarmAndIntegrity) {
    const fs::path dir = scratch("cache");
    std::vector<std::string> args{"verify", "--check", "hopf,positivity", "--algebra", "A1", "--max-weight", "2",
                                  "--format", "json", "--cache-dir", dir.string()};
    auto cold = run(args);
    ASSERT_EQ(cold.code, 0) << cold.err;
    const std::size_t files = count_files(dir);
    EXPECT_GT(files, 0u);
    auto warm = run(args);
    EXPECT_EQ(warm.code, 0);
    EXPECT_EQ(cold.out, warm.out);
    EXPECT_EQ(count_files(dir), files);
    auto plain = run({"verify", "--check", "hopf,positivity", "--algebra", "A1", "--max-weight", "2", "--format", "json"});
    EXPECT_EQ(plain.out, cold.out);
    // damage one payload
    fs::path victim;
    for (const auto& e : fs::recursive_directory_iterator(dir / "irrep"))
        if (e.is_regular_file()) victim = e.path();
    ASSERT_FALSE(victim.empty());
    {
        std::ofstream f(victim, std::ios::app);
        f << " ";
    }
    EXPECT_EQ(run(args).code, 0);  // trailing whitespace keeps the JSON and digest intact
    {
        std::ofstream f(victim, std::ios::trunc);
        f << "{\"schema\": \"qbw-cache/1\", \"key\": 1, \"payload\": 2, \"payload_sha256\": \"00\"}";
    }
    auto bad = run(args);
    EXPECT_EQ(bad.code, 4);
    EXPECT_NE(bad.err.find("cache integrity"), std::string::npos);
    fs::remove_all(dir);
}

TEST(Cli, EnvironmentCacheDir) {
    const fs::path dir = scratch("env");
    ::setenv("QBW_CACHE_DIR", dir.string().c_str(), 1);
    auto a = run({"irrep", "--algebra", "B2", "--weight", "0,1"});
    ::unsetenv("QBW_CACHE_DIR");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(count_files(dir), 1u);
    fs::remove_all(dir);
}

TEST(Cli, ConfigFile) {
    const fs::path dir = scratch("config");
    fs::create_directories(dir);
    const fs::path cfg = dir / "job.toml";
    {
        std::ofstream f(cfg);
        f << "algebra = \"A2\"\nweight = \"1,0\"\nformat = \"json\"\n";
    }
    auto a = run({"irrep", "--config", cfg.string()});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(nlohmann::json::parse(a.out)["dim"], 3);
    auto b = run({"irrep", "--config", cfg.string(), "--weight", "1,1"});
    EXPECT_EQ(nlohmann::json::parse(b.out)["dim"], 8);
    EXPECT_EQ(run({"irrep", "--config", (dir / "missing.toml").string()}).code, 2);
    fs::remove_all(dir);
}
