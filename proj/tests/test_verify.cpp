#include <gtest/gtest.h>

#include "qbw/verify.hpp"

using namespace qbw;

TEST(Verify, Grids) {
    EXPECT_EQ(irrep_grid(CartanData::get("A1"), std::nullopt).size(), 9u);
    EXPECT_EQ(irrep_grid(CartanData::get("A2"), std::nullopt).size(), 15u);
    EXPECT_EQ(irrep_grid(CartanData::get("A3"), std::nullopt).size(), 4u);
    auto b2 = irrep_grid(CartanData::get("B2"), std::nullopt);
    EXPECT_EQ(b2.size(), 9u);
    EXPECT_EQ(b2.back(), (Weight{2, 2}));
    EXPECT_EQ(irrep_grid(CartanData::get("A2"), 1).size(), 3u);
    EXPECT_EQ(irrep_grid(CartanData::get("A1"), 0), std::vector<Weight>{{0}});
}

TEST(Verify, SuiteNames) {
    const auto& names = suite_names();
    ASSERT_EQ(names.size(), 11u);
    EXPECT_EQ(names.front(), "relations");
    EXPECT_EQ(names.back(), "determinism");
    EXPECT_TRUE(is_suite("borel_weil"));
    EXPECT_FALSE(is_suite("borel-weil"));
}

TEST(Verify, SmallRun) {
    VerifyOptions opt;
    opt.algebras = {"A1"};
    opt.max_weight = 1;
    opt.suites = {"relations", "schur", "positivity", "hom"};
    auto res = run_verify(opt);
    EXPECT_EQ(res.status, Status::pass) << res.report.dump();
    EXPECT_EQ(res.report["suites"].size(), 4u);
    EXPECT_EQ(res.report["options"]["algebras"], nlohmann::json::array({"A1"}));
    // positivity: the zero element plus one line of 50 samples
    EXPECT_EQ(res.report["suites"][2]["checks"].size(), 2u);
    EXPECT_EQ(res.report["suites"][2]["checks"][1]["witness"]["positive"], 50);
    // suites come out in canonical order whatever the request order
    opt.suites = {"hom", "relations"};
    auto r2 = run_verify(opt);
    EXPECT_EQ(r2.report["suites"][0]["subject"], "relations");
}

TEST(Verify, DeterminismAlone) {
    VerifyOptions opt;
    opt.algebras = {"A2"};
    opt.max_weight = 1;
    opt.suites = {"determinism"};
    auto res = run_verify(opt);
    EXPECT_EQ(res.status, Status::pass);
    EXPECT_EQ(res.report["suites"][0]["data"]["suites"], nlohmann::json::array({"relations"}));
}

TEST(Verify, Errors) {
    Workspace ws;
    VerifyOptions opt;
    EXPECT_THROW(run_suite("nonsense", ws, opt), std::invalid_argument);
    opt.algebras = {"C3"};
    EXPECT_THROW(run_suite("relations", ws, opt), std::invalid_argument);
}
