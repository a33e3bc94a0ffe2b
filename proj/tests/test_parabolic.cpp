#include <gtest/gtest.h>

#include "qbw/parabolic.hpp"

using namespace qbw;

namespace {

const Algebra& alg(const std::string& name) {
    static std::map<std::string, std::unique_ptr<Algebra>> cache;
    auto& p = cache[name];
    if (!p) p = std::make_unique<Algebra>(CartanData::get(name));
    return *p;
}

std::vector<Weight> dominant_upto(const CartanData& cd, int h) {
    std::vector<Weight> out;
    Weight w(cd.rank(), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == cd.rank()) {
            out.push_back(w);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            w[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, h);
    return out;
}

}  // namespace

TEST(Parabolic, Generators) {
    ParabolicData p(CartanData::get("A2"), {0});
    EXPECT_EQ(p.levi_generators.size(), 6u);
    EXPECT_EQ(p.parabolic_generators.size(), 7u);
    EXPECT_EQ(p.parabolic_generators.back(), (Letter{Gen::E, 1}));
    EXPECT_THROW(ParabolicData(CartanData::get("A1"), {1}), std::invalid_argument);
}

TEST(Parabolic, RestrictLevi) {
    const auto& A = alg("A2");
    auto m = A.irrep({1, 1});
    ParabolicData full(A.cd(), {0, 1});
    auto b = restrict_levi(A, *m, full);
    ASSERT_EQ(b.summands.size(), 1u);
    EXPECT_TRUE(b.P.is_identity());

    const auto& A1 = alg("A1");
    ParabolicData torus(A1.cd(), {});
    EXPECT_EQ(restrict_levi(A1, *A1.irrep({4}), torus).summands.size(), 5u);

    ParabolicData p(A.cd(), {0});
    auto br = restrict_levi(A, *m, p);
    EXPECT_EQ(br.multiplicities(), branching_oracle(A.cd(), {1, 1}, {0}));
    std::size_t total = 0;
    for (const auto& s : br.summands) {
        total += s.irrep->dim();
        EXPECT_TRUE(is_intertwiner(*s.irrep, *m, s.embedding, p, HomFlavor::levi));
    }
    EXPECT_EQ(total, 8u);
    EXPECT_TRUE((br.Pinv * br.P).is_identity());
    // classical oracle across a grid
    for (const auto& name : {"A2", "A3", "B2"}) {
        const auto& B = alg(name);
        const auto& cd = B.cd();
        for (const auto& l : dominant_upto(cd, name == std::string("A2") ? 3 : 1))
            for (int j = 0; j < cd.rank(); ++j)
                EXPECT_EQ(restrict_levi(B, *B.irrep(l), ParabolicData(cd, {j})).multiplicities(),
                          branching_oracle(cd, l, {j}))
                    << name << weight_to_string(l) << j;
    }
}

TEST(Parabolic, HomCriterion) {
    // A1 torus, all one-dimensional targets
    const auto& A1 = alg("A1");
    ParabolicData t1(A1.cd(), {});
    for (int l = 0; l <= 5; ++l)
        for (int m = -6; m <= 6; ++m) {
            auto h = hom_space(*A1.irrep({l}), A1.levi({m}, {}), t1, HomFlavor::parabolic);
            EXPECT_EQ(static_cast<long>(h.dim()), predicted_parabolic_dim(A1.cd(), {l}, {m}, {}));
            EXPECT_EQ(h.dim(), m == -l ? 1u : 0u);
            for (const auto& phi : h.maps) EXPECT_TRUE(is_intertwiner(*A1.irrep({l}), *h.target, phi, t1, HomFlavor::parabolic));
        }
    const auto& A = alg("A2");
    for (const Subset& th : {Subset{}, Subset{0}, Subset{1}}) {
        ParabolicData p(A.cd(), th);
        auto grid = dominant_upto(A.cd(), 2);
        std::set<Weight> targets;
        for (const auto& l : grid)
            for (const auto& [mu, k] : branching_oracle(A.cd(), l, th)) targets.insert(mu);
        for (const auto& l : grid)
            for (const auto& mu : targets) {
                auto m = A.irrep(l);
                auto h = hom_space(*m, A.levi(mu, th), p, HomFlavor::parabolic);
                EXPECT_EQ(static_cast<long>(h.dim()), predicted_parabolic_dim(A.cd(), l, mu, th))
                    << weight_to_string(l) << weight_to_string(mu);
                auto lv = hom_space(*m, A.levi(mu, th), p, HomFlavor::levi);
                EXPECT_EQ(static_cast<long>(lv.dim()), branching_oracle(A.cd(), l, th)[mu]);
            }
    }
}

TEST(Parabolic, TensorHom) {
    const auto& A = alg("A2");
    ParabolicData p(A.cd(), {0});
    auto triv = A.levi({0, 0}, {0});
    auto h = hom_space(*A.irrep({1, 1}), triv, p, HomFlavor::levi);
    ASSERT_EQ(h.dim(), 1u);
    HomElement phi{{1, 1}, triv, h.maps[0]};
    auto prod = tensor_hom(A, p, phi, phi);
    EXPECT_EQ(prod.lambda, (Weight{2, 2}));
    EXPECT_FALSE(prod.phi.is_zero());
    EXPECT_TRUE(is_intertwiner(*A.irrep({2, 2}), *prod.target, prod.phi, p, HomFlavor::levi));
    EXPECT_GE(hom_space(*A.irrep({2, 2}), triv, p, HomFlavor::levi).dim(), 1u);
    HomElement zero{{1, 1}, triv, Matrix(1, 8)};
    EXPECT_THROW(tensor_hom(A, p, phi, zero), std::invalid_argument);

    const auto& A1 = alg("A1");
    ParabolicData t(A1.cd(), {});
    auto hm = hom_space(*A1.irrep({1}), A1.levi({-1}, {}), t, HomFlavor::levi);
    HomElement low{{1}, A1.levi({-1}, {}), hm.maps.at(0)};
    auto sq = tensor_hom(A1, t, low, low);
    EXPECT_EQ(sq.target->lambda, (Weight{-2}));
    EXPECT_TRUE(is_intertwiner(*A1.irrep({2}), *sq.target, sq.phi, t, HomFlavor::levi));
}

TEST(Parabolic, CentralHomCount) {
    for (const auto& name : CartanData::supported_names()) {
        const auto& A = alg(name);
        const int r = A.cd().rank();
        for (int mask = 0; mask < (1 << r); ++mask) {
            Subset th;
            for (int j = 0; j < r; ++j)
                if (mask >> j & 1) th.push_back(j);
            EXPECT_EQ(central_hom_count(A, ParabolicData(A.cd(), th)), r - static_cast<long>(th.size()))
                << name << " mask " << mask;
        }
    }
}
