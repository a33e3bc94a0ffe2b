#include <gtest/gtest.h>

#include "qbw/classical.hpp"
#include "qbw/tensor.hpp"

using namespace qbw;
using RF = RationalFunction;

TEST(Tensor, UnitObject) {
    const auto& cd = CartanData::get("A2");
    auto a = build_irrep(cd, {1, 1});
    auto t = tensor_module(a, build_irrep(cd, {0, 0}));
    for (int i = 0; i < 2; ++i) {
        EXPECT_EQ(t.E[i], a->E[i]);
        EXPECT_EQ(t.F[i], a->F[i]);
        EXPECT_EQ(t.K[i], a->K[i]);
    }
    auto cg = decompose(t);
    ASSERT_EQ(cg->components.size(), 1u);
    EXPECT_TRUE(cg->P.is_identity());
}

TEST(Tensor, A1FundamentalSquared) {
    const auto& cd = CartanData::get("A1");
    auto w = build_irrep(cd, {1});
    auto t = tensor_module(w, w);
    EXPECT_TRUE(check_relations(cd, full_subset(cd), t.E, t.F, t.K, t.Kinv).all_pass());
    // basis w+w+, w+w-, w-w+, w-w-
    EXPECT_EQ(t.K[0], Matrix::diagonal({RF::v(2), RF(1), RF(1), RF::v(-2)}));
    Matrix top = highest_weight_vectors(t, {2});
    ASSERT_EQ(top.cols(), 1u);
    EXPECT_FALSE(top(0, 0).is_zero());
    Matrix zero = highest_weight_vectors(t, {0});
    ASSERT_EQ(zero.cols(), 1u);
    // kernel of e (x) k + k^-1 (x) e on the zero weight space
    EXPECT_EQ(zero(2, 0) / zero(1, 0), -RF::q(-1));
    EXPECT_EQ(highest_weight_vectors(t, {4}).cols(), 0u);
    auto cg = decompose(t);
    EXPECT_EQ(cg->multiplicities(), (std::map<Weight, long>{{{2}, 1}, {{0}, 1}}));
    EXPECT_TRUE(check_block_diagonal(t, *cg));
}

TEST(Tensor, AgreesWithCharacterOracle) {
    struct Case {
        std::string name;
        Weight a, b;
    };
    std::vector<Case> cases{{"A1", {2}, {3}},         {"A2", {1, 0}, {0, 1}}, {"A2", {1, 0}, {1, 0}},
                            {"A2", {1, 1}, {1, 0}},   {"A2", {1, 1}, {1, 1}}, {"A3", {1, 0, 0}, {0, 0, 1}},
                            {"A3", {0, 1, 0}, {1, 0, 0}}, {"B2", {1, 0}, {0, 1}}, {"B2", {0, 1}, {0, 1}},
                            {"B2", {1, 0}, {1, 0}}};
    for (const auto& c : cases) {
        SCOPED_TRACE(c.name + weight_to_string(c.a) + weight_to_string(c.b));
        const auto& cd = CartanData::get(c.name);
        auto t = tensor_module(build_irrep(cd, c.a), build_irrep(cd, c.b));
        auto oracle = char_decompose_oracle(cd, c.a, c.b);
        for (const auto& [nu, m] : oracle) EXPECT_EQ(static_cast<long>(highest_weight_vectors(t, nu).cols()), m);
        auto cg = decompose(t);
        EXPECT_EQ(cg->multiplicities(), oracle);
        std::size_t total = 0;
        for (const auto& comp : cg->components) total += comp.irrep->dim();
        EXPECT_EQ(total, t.dim());
        EXPECT_TRUE(check_block_diagonal(t, *cg));
    }
}

TEST(Tensor, A2DualPair) {
    const auto& cd = CartanData::get("A2");
    auto t = tensor_module(build_irrep(cd, {1, 0}), build_irrep(cd, {0, 1}));
    auto cg = decompose(t);
    EXPECT_EQ(cg->multiplicities(), (std::map<Weight, long>{{{1, 1}, 1}, {{0, 0}, 1}}));
    EXPECT_EQ(cg->components.front().nu, (Weight{1, 1}));
}

TEST(Tensor, RejectsMixedAlgebras) {
    EXPECT_THROW(tensor_module(build_irrep(CartanData::get("A1"), {1}), build_irrep(CartanData::get("A2"), {1, 0})),
                 std::invalid_argument);
}

TEST(Tensor, JsonRoundTrip) {
    const auto& cd = CartanData::get("A2");
    auto t = tensor_module(build_irrep(cd, {1, 1}), build_irrep(cd, {1, 0}));
    auto cg = decompose(t);
    auto src = [&](const Weight& w) { return build_irrep(cd, w); };
    auto back = cg_from_json(nlohmann::json::parse(cg_to_json(*cg).dump()), src);
    EXPECT_EQ(back->P, cg->P);
    EXPECT_EQ(back->Pinv, cg->Pinv);
    EXPECT_TRUE(check_block_diagonal(t, *back));
}
