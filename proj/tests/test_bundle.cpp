#include <gtest/gtest.h>

#include "qbw/bundle.hpp"

using namespace qbw;

namespace {

const Algebra& alg(const std::string& name) {
    static std::map<std::string, std::unique_ptr<Algebra>> cache;
    auto& p = cache[name];
    if (!p) p = std::make_unique<Algebra>(CartanData::get(name));
    return *p;
}

}  // namespace

TEST(Bundle, Truncation) {
    const auto& cd = CartanData::get("A2");
    EXPECT_EQ(TruncationPolicy::up_to(2).weights(cd).size(), 6u);
    EXPECT_TRUE(TruncationPolicy::up_to(2).contains(cd, {1, 1}));
    EXPECT_FALSE(TruncationPolicy::up_to(1).contains(cd, {1, 1}));
    EXPECT_EQ(TruncationPolicy::only({{1, 1}, {0, 0}, {1, 1}}).weights(cd).size(), 2u);
    EXPECT_THROW(TruncationPolicy::only({{-1, 1}}).weights(cd), std::invalid_argument);
    EXPECT_THROW(TruncationPolicy::up_to(-1).weights(cd), std::invalid_argument);
}

TEST(Bundle, InvariantFunctions) {
    const auto& A = alg("A2");
    ParabolicData p(A.cd(), {0});
    auto inv = invariant_functions(A, p, TruncationPolicy::only({{0, 0}, {1, 0}, {1, 1}}));
    EXPECT_EQ(inv.at({0, 0}).size(), 1u);
    EXPECT_EQ(inv.at({1, 0}).size(), 0u);
    ASSERT_EQ(inv.at({1, 1}).size(), 8u);
    EXPECT_EQ(family_rank(inv.at({1, 1})), 8u);
    for (const auto& z : inv.at({1, 1})) EXPECT_TRUE(is_invariant(A, z.coordinate(0), p.levi_generators));

    // closure, with the CG support of W(1,1) (x) W(1,1) as the only allowed weights
    const auto& g = inv.at({1, 1});
    std::set<Weight> allowed;
    for (const auto& [nu, k] : char_decompose_oracle(A.cd(), {1, 1}, {1, 1})) allowed.insert(nu);
    for (std::size_t a = 0; a < 3; ++a) {
        Section ab = product_closure_check(A, p, g[a], g[a + 2]);
        EXPECT_FALSE(ab.is_zero());
        for (const auto& w : ab.support()) EXPECT_TRUE(allowed.count(w));
    }
    Section one = inv.at({0, 0})[0];
    EXPECT_EQ(product_closure_check(A, p, one, g[0]), g[0] * one.coordinate(0).terms().begin()->second);

    // negative control on A1: t12 times an invariant leaves E_q
    const auto& A1 = alg("A1");
    ParabolicData t(A1.cd(), {});
    auto inv1 = invariant_functions(A1, t, TruncationPolicy::only({{2}}));
    ASSERT_EQ(inv1.at({2}).size(), 3u);
    CoeffElement prod = product(A1, CoeffElement::t({1}, 0, 1), inv1.at({2})[0].coordinate(0));
    EXPECT_FALSE(is_invariant(A1, prod, t.levi_generators));
}

TEST(Bundle, SectionsFromHomA1) {
    const auto& A = alg("A1");
    ParabolicData p(A.cd(), {});
    auto V = A.levi({-1}, {});
    auto h = hom_space(*A.irrep({1}), V, p, HomFlavor::levi);
    ASSERT_EQ(h.dim(), 1u);
    auto zs = sections_from_hom(A, V, {1}, h.maps[0]);
    ASSERT_EQ(zs.size(), 2u);
    EXPECT_EQ(family_rank(zs), 2u);
    for (const auto& z : zs) EXPECT_TRUE(satisfies_defining_property(A, z, p.levi_generators));
    EXPECT_TRUE(same_span(zs, sections_direct(A, V, p, {1}, HomFlavor::levi)));
    // trivial V, lambda = 0: the constant
    auto triv = A.levi({0}, {});
    auto c = sections_from_hom(A, triv, {0}, Matrix::identity(1));
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].coordinate(0), CoeffElement::unit(A.cd()));
}

TEST(Bundle, DirectAgreesWithHoms) {
    struct Case {
        std::string alg;
        Subset theta;
        int h;
    };
    for (const auto& c : {Case{"A1", {}, 3}, Case{"A2", {0}, 2}, Case{"A2", {}, 1}, Case{"B2", {1}, 1}}) {
        const auto& A = alg(c.alg);
        ParabolicData p(A.cd(), c.theta);
        for (const auto& lambda : dominant_weights_upto(A.cd(), c.h)) {
            auto br = restrict_levi(A, *A.irrep(lambda), p);
            std::set<Weight> mus;
            for (const auto& s : br.summands) mus.insert(s.mu);
            mus.insert(A.cd().zero());
            for (const auto& mu : mus) {
                auto V = A.levi(mu, c.theta);
                auto h = hom_space(*A.irrep(lambda), V, p, HomFlavor::levi);
                std::vector<Section> from;
                for (const auto& phi : h.maps) {
                    auto z = sections_from_hom(A, V, lambda, phi);
                    from.insert(from.end(), z.begin(), z.end());
                }
                auto direct = sections_direct(A, V, p, lambda, HomFlavor::levi);
                EXPECT_EQ(direct.size(), h.dim() * A.irrep(lambda)->dim());
                EXPECT_TRUE(same_span(from, direct)) << c.alg << weight_to_string(lambda) << weight_to_string(mu);
                for (const auto& z : direct) EXPECT_TRUE(satisfies_defining_property(A, z, p.levi_generators));
                auto par = sections_direct(A, V, p, lambda, HomFlavor::parabolic);
                EXPECT_EQ(static_cast<long>(par.size()),
                          static_cast<long>(A.irrep(lambda)->dim()) *
                              predicted_parabolic_dim(A.cd(), lambda, mu, c.theta));
            }
        }
    }
}

TEST(Bundle, DotAction) {
    const auto& A = alg("A1");
    ParabolicData p(A.cd(), {});
    auto V = A.levi({-1}, {});
    auto h = hom_space(*A.irrep({1}), V, p, HomFlavor::parabolic);
    ASSERT_EQ(h.dim(), 1u);
    auto zs = sections_from_hom(A, V, {1}, h.maps[0]);
    auto D = dot_matrix(A, AlgebraWord::f(0), zs);
    ASSERT_TRUE(D.has_value());
    EXPECT_EQ(*D, A.irrep({1})->F[0]);
    EXPECT_EQ(dot_on_section(A, AlgebraWord::one(), zs[0]), zs[0]);
    // module law and preservation of the defining property
    const auto& B = alg("A2");
    ParabolicData q(B.cd(), {0});
    auto W = B.levi({1, 0}, {0});
    auto s = sections_direct(B, W, q, {1, 0}, HomFlavor::levi);
    ASSERT_FALSE(s.empty());
    std::vector<AlgebraWord> gens{AlgebraWord::e(0), AlgebraWord::f(1), AlgebraWord::k(1), AlgebraWord::e(1)};
    for (const auto& x : gens)
        for (const auto& y : gens) {
            Section lhs = dot_on_section(B, x * y, s[1]);
            EXPECT_EQ(lhs, dot_on_section(B, x, dot_on_section(B, y, s[1])));
            EXPECT_TRUE(satisfies_defining_property(B, lhs, q.levi_generators));
        }
}

TEST(Bundle, TwoSidedModule) {
    const auto& A = alg("A2");
    ParabolicData p(A.cd(), {0});
    auto inv = invariant_functions(A, p, TruncationPolicy::only({{1, 1}}));
    auto V = A.levi({1, 0}, {0});
    auto s = sections_direct(A, V, p, {1, 0}, HomFlavor::levi);
    ASSERT_FALSE(s.empty());
    const CoeffElement a = inv.at({1, 1})[3].coordinate(0);
    Section l = left_multiply(A, a, s[0]), r = right_multiply(A, s[0], a);
    EXPECT_FALSE(l.is_zero());
    EXPECT_TRUE(satisfies_defining_property(A, l, p.levi_generators));
    EXPECT_TRUE(satisfies_defining_property(A, r, p.levi_generators));
}

TEST(Bundle, Coaction) {
    const auto& A = alg("A1");
    ParabolicData p(A.cd(), {});
    auto triv = A.levi({0}, {});
    auto c = sections_direct(A, triv, p, {0}, HomFlavor::levi);
    ASSERT_EQ(c.size(), 1u);
    auto w = omega_coaction(A, c[0]);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w.begin()->first.first.lambda, A.cd().zero());
    for (int m = -3; m <= 3; ++m)
        for (int l = 0; l <= 3; ++l)
            for (const auto& z : sections_direct(A, A.levi({m}, {}), p, {l}, HomFlavor::levi))
                EXPECT_TRUE(check_coaction(A, z, p.levi_generators).all_pass());
}

TEST(Bundle, EtaKappa) {
    const auto& A = alg("A1");
    ParabolicData p(A.cd(), {});
    auto triv = A.irrep({0});
    std::mt19937_64 rng(7);
    Section x = random_section(A, triv, rng, {{0}, {1}}, 3);
    EXPECT_EQ(eta_map(A, x, Direction::forward), x);

    auto W = A.irrep({1});
    for (int l = 0; l <= 2; ++l)
        for (const auto& z : sections_direct(A, W, p, {l}, HomFlavor::levi)) {
            Section e = eta_map(A, z, Direction::forward), k = kappa_map(A, z, Direction::forward);
            EXPECT_TRUE(in_invariants_tensor(A, e, p.levi_generators));
            EXPECT_TRUE(in_invariants_tensor(A, k, p.levi_generators));
            EXPECT_EQ(eta_map(A, e, Direction::inverse), z);
            EXPECT_EQ(kappa_map(A, k, Direction::inverse), z);
        }
    auto inv = invariant_functions(A, p, TruncationPolicy::up_to(2));
    for (const auto& [l, fs] : inv)
        for (const auto& f : fs) {
            Section fw = Section::from_coordinates(W, {f.coordinate(0), CoeffElement()});
            EXPECT_TRUE(satisfies_defining_property(A, eta_map(A, fw, Direction::inverse), p.levi_generators));
            EXPECT_TRUE(satisfies_defining_property(A, kappa_map(A, fw, Direction::inverse), p.levi_generators));
        }
    for (int n = 0; n < 20; ++n) {
        Section r = random_section(A, W, rng, {{0}, {1}, {2}}, 3);
        EXPECT_EQ(eta_map(A, eta_map(A, r, Direction::inverse), Direction::forward), r);
        EXPECT_EQ(eta_map(A, eta_map(A, r, Direction::forward), Direction::inverse), r);
        EXPECT_EQ(kappa_map(A, kappa_map(A, r, Direction::inverse), Direction::forward), r);
    }
    EXPECT_THROW(eta_map(A, Section(A.levi({1}, {})), Direction::forward), std::invalid_argument);
}

TEST(Bundle, LeviComplement) {
    const auto& A = alg("A2");
    ParabolicData p(A.cd(), {0});
    auto lc = levi_complement(A, A.levi({1, 0}, {0}), p);
    EXPECT_TRUE(lc.certified);
    EXPECT_EQ(lc.W->lambda, (Weight{1, 0}));
    ASSERT_EQ(lc.complement.size(), 1u);
    EXPECT_EQ(lc.branching.summands[lc.complement[0]].irrep->dim(), 1u);

    const auto& A1 = alg("A1");
    ParabolicData t(A1.cd(), {});
    auto lc1 = levi_complement(A1, A1.levi({-1}, {}), t);
    EXPECT_TRUE(lc1.certified);
    EXPECT_EQ(lc1.W->lambda, (Weight{1}));
    ASSERT_EQ(lc1.complement.size(), 1u);
    EXPECT_EQ(lc1.branching.summands[lc1.complement[0]].mu, (Weight{1}));

    ParabolicData full(A.cd(), {0, 1});
    auto lc2 = levi_complement(A, A.irrep({1, 1}), full);
    EXPECT_TRUE(lc2.certified);
    EXPECT_TRUE(lc2.complement.empty());
    EXPECT_THROW(levi_complement(A, A.levi({-1, 0}, {1}), p), std::invalid_argument);
}

TEST(Bundle, Frobenius) {
    const auto& A = alg("A1");
    ParabolicData p(A.cd(), {});
    for (int m : {-2, 0, 2}) {
        auto rep = frobenius_maps(A, *A.irrep({2}), A.levi({m}, {}), p, TruncationPolicy::up_to(3));
        EXPECT_EQ(rep.status, Status::pass) << rep.to_json().dump();
        EXPECT_EQ(rep.data["dim_module_hom"], 1);
    }
    auto odd = frobenius_maps(A, *A.irrep({2}), A.levi({1}, {}), p, TruncationPolicy::up_to(3));
    EXPECT_EQ(odd.status, Status::pass);
    EXPECT_EQ(odd.data["dim_module_hom"], 0);
    auto small = frobenius_maps(A, *A.irrep({2}), A.levi({0}, {}), p, TruncationPolicy::up_to(1));
    EXPECT_EQ(small.status, Status::inconclusive);
    auto triv = frobenius_maps(A, *A.irrep({0}), A.levi({0}, {}), p, TruncationPolicy::up_to(0));
    EXPECT_EQ(triv.status, Status::pass);
    EXPECT_EQ(triv.data["dim_module_hom"], 1);

    const auto& B = alg("A2");
    ParabolicData q(B.cd(), {0});
    auto rep = frobenius_maps(B, *B.irrep({1, 1}), B.levi({0, 0}, {0}), q, TruncationPolicy::up_to(2));
    EXPECT_EQ(rep.status, Status::pass) << rep.to_json().dump();
    EXPECT_EQ(rep.data["dim_module_hom"], 1);
}

TEST(Bundle, BorelWeilA1) {
    const auto& A = alg("A1");
    ParabolicData p(A.cd(), {});
    for (int n = 0; n <= 3; ++n) {
        auto rep = borel_weil_check(A, A.levi({-n}, {}), p, TruncationPolicy::up_to(4));
        EXPECT_EQ(rep.status, Status::pass) << rep.to_json().dump();
        EXPECT_EQ(rep.data["dim"], n + 1);
    }
    for (int n = 1; n <= 3; ++n) {
        auto rep = borel_weil_check(A, A.levi({n}, {}), p, TruncationPolicy::up_to(4));
        EXPECT_EQ(rep.status, Status::pass);
        EXPECT_EQ(rep.data["dim"], 0);
    }
    auto rep = borel_weil_check(A, A.levi({-3}, {}), p, TruncationPolicy::up_to(2));
    EXPECT_EQ(rep.status, Status::inconclusive);
}

TEST(Bundle, BorelWeilA2) {
    const auto& A = alg("A2");
    ParabolicData borel(A.cd(), {});
    auto rep = borel_weil_check(A, A.levi({-1, 0}, {}), borel, TruncationPolicy::up_to(1));
    EXPECT_EQ(rep.status, Status::pass) << rep.to_json().dump();
    EXPECT_EQ(rep.data["dim"], 3);
    ParabolicData p(A.cd(), {0});
    // 2-dim Levi module with -mu~ not dominant
    auto V = A.levi({1, 0}, {0});
    ASSERT_EQ(V->dim(), 2u);
    auto zero = borel_weil_check(A, V, p, TruncationPolicy::up_to(2));
    EXPECT_EQ(zero.status, Status::pass) << zero.to_json().dump();
    EXPECT_EQ(zero.data["dim"], 0);
    auto triv = borel_weil_check(A, A.levi({0, 0}, {0}), p, TruncationPolicy::up_to(2));
    EXPECT_EQ(triv.status, Status::pass);
    EXPECT_EQ(triv.data["dim"], 1);
}

TEST(Bundle, FullModules) {
    const auto& A1 = alg("A1");
    auto r1 = full_module_check(A1, A1.irrep({1}), ParabolicData(A1.cd(), {}), TruncationPolicy::up_to(3));
    EXPECT_EQ(r1.status, Status::pass) << r1.to_json().dump();
    const auto& A = alg("A2");
    for (const Subset& th : {Subset{}, Subset{0}}) {
        auto r = full_module_check(A, A.irrep({1, 0}), ParabolicData(A.cd(), th), TruncationPolicy::up_to(2));
        EXPECT_EQ(r.status, Status::pass) << r.to_json().dump();
    }
}

TEST(Bundle, Json) {
    const auto& A = alg("A1");
    ParabolicData p(A.cd(), {});
    auto zs = sections_direct(A, A.levi({-1}, {}), p, {1}, HomFlavor::levi);
    auto j = zs[0].to_json();
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j[0]["i"], 1);
}
