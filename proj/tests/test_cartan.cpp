#include <gtest/gtest.h>

#include <set>

#include "qbw/cartan.hpp"
#include "qbw/classical.hpp"

using namespace qbw;

namespace {

std::set<Weight> orbit(const CartanData& cd, const Weight& mu) {
    std::set<Weight> seen{mu};
    std::vector<Weight> todo{mu};
    while (!todo.empty()) {
        Weight w = todo.back();
        todo.pop_back();
        for (int i = 0; i < cd.rank(); ++i) {
            Weight r = cd.reflect(w, i);
            if (seen.insert(r).second) todo.push_back(r);
        }
    }
    return seen;
}

std::vector<Weight> dominant_grid(const CartanData& cd, int max_sum) {
    std::vector<Weight> out;
    std::vector<Weight> cur{Weight{}};
    for (int i = 0; i < cd.rank(); ++i) {
        std::vector<Weight> next;
        for (auto& w : cur)
            for (int k = 0; k <= max_sum; ++k) {
                Weight x = w;
                x.push_back(k);
                next.push_back(x);
            }
        cur = next;
    }
    for (auto& w : cur) {
        int s = 0;
        for (int x : w) s += x;
        if (s <= max_sum) out.push_back(w);
    }
    return out;
}

}  // namespace

TEST(Cartan, InnerProducts) {
    const auto& a1 = CartanData::get("A1");
    EXPECT_EQ(a1.inner({1}, {1}), Rational(1, 2));
    EXPECT_EQ(a1.inner({0}, {5}), 0);
    const auto& a2 = CartanData::get("A2");
    EXPECT_EQ(a2.inner(a2.simple_root(0), a2.simple_root(1)), -1);
    const auto& b2 = CartanData::get("B2");
    EXPECT_EQ(b2.inner(b2.simple_root(0), b2.simple_root(0)), 4);
    EXPECT_EQ(b2.inner(b2.simple_root(1), b2.simple_root(1)), 2);
    for (const auto& name : CartanData::supported_names()) {
        const auto& cd = CartanData::get(name);
        for (int i = 0; i < cd.rank(); ++i)
            for (int j = 0; j < cd.rank(); ++j) {
                Rational aij = 2 * cd.inner(cd.simple_root(i), cd.simple_root(j)) /
                               cd.inner(cd.simple_root(i), cd.simple_root(i));
                EXPECT_EQ(aij, cd.a(i, j));
                EXPECT_EQ(cd.d(i) * cd.a(i, j), cd.d(j) * cd.a(j, i));
            }
        // rho has fundamental coordinates (1,...,1)
        EXPECT_EQ(cd.root_to_weight(cd.two_rho()), cd.rho() + cd.rho());
        for (auto& l : dominant_grid(cd, 3))
            for (auto& m : dominant_grid(cd, 2)) EXPECT_EQ(cd.inner(l, m), cd.inner(m, l));
    }
}

TEST(Cartan, LowestWeightAndDagger) {
    const auto& a1 = CartanData::get("A1");
    EXPECT_EQ(lowest_weight(a1, {4}), Weight{-4});
    EXPECT_EQ(dagger(a1, {4}), Weight{4});
    const auto& a2 = CartanData::get("A2");
    EXPECT_EQ(lowest_weight(a2, {1, 0}), (Weight{0, -1}));
    EXPECT_EQ(dagger(a2, {1, 0}), (Weight{0, 1}));
    EXPECT_EQ(lowest_weight(a2, {0, 0}), (Weight{0, 0}));
    EXPECT_THROW(lowest_weight(a2, {-1, 0}), std::invalid_argument);
    for (const auto& name : CartanData::supported_names()) {
        const auto& cd = CartanData::get(name);
        for (auto& l : dominant_grid(cd, 3)) {
            // brute force: the unique anti-dominant element of the orbit
            Weight anti;
            int count = 0;
            for (auto& w : orbit(cd, l))
                if (std::all_of(w.begin(), w.end(), [](int x) { return x <= 0; })) {
                    anti = w;
                    ++count;
                }
            EXPECT_EQ(count, 1);
            EXPECT_EQ(lowest_weight(cd, l), anti);
            EXPECT_EQ(lowest_weight(cd, dagger(cd, l)), -l);
            EXPECT_EQ(weyl_dim(cd, l), weyl_dim(cd, dagger(cd, l)));
        }
    }
}

TEST(Cartan, DominantOrbitRep) {
    const auto& a1 = CartanData::get("A1");
    auto [w1, s1] = dominant_orbit_rep(a1, {-3});
    EXPECT_EQ(w1, Weight{3});
    EXPECT_EQ(s1, WeylWord{0});
    const auto& a2 = CartanData::get("A2");
    auto [w2, s2] = dominant_orbit_rep(a2, {-1, 2});
    auto orb = orbit(a2, {-1, 2});
    EXPECT_TRUE(orb.count(w2));
    EXPECT_TRUE(a2.is_dominant(w2));
    EXPECT_EQ(a2.apply({-1, 2}, s2), w2);
    auto [w3, s3] = dominant_orbit_rep(a2, {2, 1});
    EXPECT_EQ(w3, (Weight{2, 1}));
    EXPECT_TRUE(s3.empty());
    for (const auto& name : CartanData::supported_names()) {
        const auto& cd = CartanData::get(name);
        for (auto& l : dominant_grid(cd, 2))
            for (auto& w : orbit(cd, l)) {
                auto [d, word] = dominant_orbit_rep(cd, w);
                EXPECT_EQ(d, l);
                EXPECT_EQ(cd.apply(w, word), l);
            }
    }
}

TEST(Cartan, WeylDimension) {
    const auto& a1 = CartanData::get("A1");
    for (int n = 0; n < 9; ++n) EXPECT_EQ(weyl_dim(a1, {n}), n + 1);
    EXPECT_EQ(weyl_dim(CartanData::get("A2"), {1, 1}), 8);
    EXPECT_EQ(weyl_dim(CartanData::get("B2"), {0, 2}), 10);
    EXPECT_EQ(weyl_dim(CartanData::get("B2"), {2, 2}), 81);
    EXPECT_EQ(weyl_dim(CartanData::get("A3"), {0, 1, 0}), 6);
    for (const auto& name : CartanData::supported_names()) {
        const auto& cd = CartanData::get(name);
        EXPECT_EQ(weyl_dim(cd, cd.zero()), 1);
        for (auto& l : dominant_grid(cd, 3)) {
            long total = 0;
            for (auto& [w, m] : freudenthal_character(cd, l)) total += m;
            EXPECT_EQ(total, weyl_dim(cd, l)) << name << weight_to_string(l);
        }
    }
}

TEST(Classical, TensorAndBranching) {
    const auto& a1 = CartanData::get("A1");
    EXPECT_EQ(char_decompose_oracle(a1, {1}, {1}), (std::map<Weight, long>{{{0}, 1}, {{2}, 1}}));
    EXPECT_EQ(char_decompose_oracle(a1, {3}, {0}), (std::map<Weight, long>{{{3}, 1}}));
    const auto& a2 = CartanData::get("A2");
    EXPECT_EQ(char_decompose_oracle(a2, {1, 0}, {0, 1}), (std::map<Weight, long>{{{0, 0}, 1}, {{1, 1}, 1}}));
    EXPECT_EQ(char_decompose_oracle(a2, {1, 0}, {1, 0}), (std::map<Weight, long>{{{0, 1}, 1}, {{2, 0}, 1}}));
    // adjoint of sl3 under gl2: 2 + 2 + 1 + 1 + 1 + 1 ... total 8
    auto br = branching_oracle(a2, {1, 1}, {0});
    long dim = 0;
    for (auto& [w, m] : br) dim += m * (w[0] + 1);
    EXPECT_EQ(dim, 8);
    // weight (0,0) appears with multiplicity 2 in the sl3 adjoint
    auto ch = freudenthal_character(a2, {1, 1});
    EXPECT_EQ(ch.at({0, 0}), 2);
    auto b = branching_oracle(a1, {3}, {});
    EXPECT_EQ(b.size(), 4u);
}
