#include <gtest/gtest.h>

#include "qbw/uqrep.hpp"

using namespace qbw;
using RF = RationalFunction;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<RF>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (auto& r : rows) {
        std::size_t j = 0;
        for (auto& x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

RF q(int e) {
    return RF::q(e);
}

// q-Weyl dimension formula, written without module data
RF q_weyl(const CartanData& cd, const Weight& l) {
    RF p(1);
    Weight lr = l + cd.rho();
    for (const auto& a : cd.positive_roots())
        p *= RF(q_integer(cd.inner_root(lr, a), 1)) / RF(q_integer(cd.inner_root(cd.rho(), a), 1));
    return p;
}

}  // namespace

TEST(Uqrep, A1Fundamental) {
    const auto& cd = CartanData::get("A1");
    auto m = build_irrep(cd, {1});
    EXPECT_EQ(m->dim(), 2u);
    EXPECT_EQ(m->E[0], mat({{0, 1}, {0, 0}}));
    EXPECT_EQ(m->F[0], mat({{0, 0}, {1, 0}}));
    EXPECT_EQ(m->K[0], mat({{RF::v(1), 0}, {0, RF::v(-1)}}));
    // [e,f] = (k^2 - k^-2)/(q - q^-1)
    EXPECT_EQ(m->act(AlgebraWord::e(0) * AlgebraWord::f(0) - AlgebraWord::f(0) * AlgebraWord::e(0)), mat({{1, 0}, {0, -1}}));
    EXPECT_TRUE(m->act(AlgebraWord::k(0) * AlgebraWord::kinv(0)).is_identity());
    AlgebraWord X = AlgebraWord::e(0) - AlgebraWord::f(0) * q(1);
    EXPECT_EQ(act_word(*m, X), mat({{0, 1}, {-q(1), 0}}));
}

TEST(Uqrep, TrivialModule) {
    for (const auto& name : CartanData::supported_names()) {
        const auto& cd = CartanData::get(name);
        auto m = build_irrep(cd, cd.zero());
        ASSERT_EQ(m->dim(), 1u);
        for (int i = 0; i < cd.rank(); ++i) {
            EXPECT_TRUE(m->E[i].is_zero());
            EXPECT_TRUE(m->F[i].is_zero());
            EXPECT_TRUE(m->K[i].is_identity());
        }
    }
}

TEST(Uqrep, RejectsNonDominant) {
    EXPECT_THROW(build_irrep(CartanData::get("A1"), {-1}), std::invalid_argument);
    EXPECT_THROW(build_irrep(CartanData::get("A2"), {1}), std::invalid_argument);
}

TEST(Uqrep, RelationsDimensionsAndForms) {
    struct Case {
        std::string name;
        Weight l;
    };
    std::vector<Case> cases{{"A1", {0}}, {"A1", {3}}, {"A2", {1, 0}}, {"A2", {1, 1}}, {"A2", {2, 1}},
                            {"A3", {0, 1, 0}}, {"A3", {1, 0, 1}}, {"B2", {1, 0}}, {"B2", {0, 1}}, {"B2", {1, 1}}};
    for (const auto& c : cases) {
        const auto& cd = CartanData::get(c.name);
        auto m = build_irrep(cd, c.l);
        SCOPED_TRACE(c.name + weight_to_string(c.l));
        EXPECT_EQ(static_cast<long>(m->dim()), weyl_dim(cd, c.l));
        auto rep = check_serre(*m);
        EXPECT_TRUE(rep.all_pass()) << rep.failures().size();
        EXPECT_TRUE(check_contravariance(*m));
        // weight multiplicities against Freudenthal
        Character ch;
        for (const auto& w : m->weights) ch[w] += 1;
        EXPECT_EQ(ch, freudenthal_character(cd, c.l));
        // highest weight vector
        for (int i = 0; i < cd.rank(); ++i) {
            EXPECT_TRUE(m->E[i].column(0) == Vec(m->dim()));
            EXPECT_EQ(m->K[i](0, 0), RF::v(cd.inner_simple(c.l, i)));
        }
        // gram nondegenerate blockwise
        for (const auto& b : m->blocks) EXPECT_NO_THROW(inverse(m->gram.block(b.start, b.start, b.size, b.size)));
        // quantum dimension
        RF qd = quantum_dimension(*m);
        EXPECT_EQ(qd, q_weyl(cd, c.l));
        EXPECT_EQ(qd, qd.bar());
        EXPECT_EQ(qd, quantum_dimension(*build_irrep(cd, dagger(cd, c.l))));
        // S^2 = conjugation by K_2rho
        auto k = k2rho(cd);
        Matrix K = cartan_monomial_matrix(*m, k), Ki = inverse(K);
        for (int i = 0; i < cd.rank(); ++i)
            for (auto x : {AlgebraWord::e(i), AlgebraWord::f(i), AlgebraWord::k(i)})
                EXPECT_EQ(m->act(antipode(cd, antipode(cd, x))), K * m->act(x) * Ki);
        EXPECT_EQ(K, m->act(k.as_word()));
    }
}

TEST(Uqrep, CorruptedModuleFails) {
    const auto& cd = CartanData::get("A2");
    IrrepModule m = *build_irrep(cd, {1, 0});
    m.E[0] = Matrix(m.dim(), m.dim());
    auto rep = check_serre(m);
    EXPECT_FALSE(rep.all_pass());
    bool ef_failed = false;
    for (const auto& f : rep.failures()) ef_failed |= f == "[e1, f1]";
    EXPECT_TRUE(ef_failed);
}

TEST(Uqrep, K2rho) {
    const auto& a1 = CartanData::get("A1");
    EXPECT_EQ(k2rho(a1).c, std::vector<int>{2});
    auto m = build_irrep(a1, {1});
    EXPECT_EQ(cartan_monomial_matrix(*m, k2rho(a1)), mat({{q(1), 0}, {0, q(-1)}}));
    EXPECT_EQ(quantum_dimension(*m), q(1) + q(-1));
    const auto& a2 = CartanData::get("A2");
    auto f = build_irrep(a2, {1, 0});
    EXPECT_EQ(quantum_dimension(*f), q(2) + RF(1) + q(-2));
    auto adj = build_irrep(a2, {1, 1});
    EXPECT_EQ(specialize(quantum_dimension(*adj), 2).exact, specialize(q_weyl(a2, {1, 1}), 2).exact);
    // value 8 at v = 1: evaluate the Laurent polynomial directly
    EXPECT_EQ(quantum_dimension(*adj).num().eval(1), 8);
    // trivial module and zero-weight vectors
    for (std::size_t b = 0; b < adj->dim(); ++b)
        if (adj->weights[b] == Weight{0, 0}) EXPECT_TRUE(cartan_monomial_matrix(*adj, k2rho(a2))(b, b).is_one());
}

TEST(Uqrep, LeviModules) {
    const auto& a2 = CartanData::get("A2");
    auto v = build_levi_irrep(a2, {2, -3}, {0});
    EXPECT_EQ(v->dim(), 3u);
    EXPECT_TRUE(check_serre(*v).all_pass());
    EXPECT_TRUE(check_contravariance(*v));
    EXPECT_TRUE(v->E[1].is_zero());
    EXPECT_EQ(v->weights.back(), (Weight{-2, -1}));
    auto t = build_levi_irrep(a2, {-1, 4}, {});
    EXPECT_EQ(t->dim(), 1u);
    EXPECT_THROW(build_levi_irrep(a2, {-1, 0}, {0}), std::invalid_argument);
}

TEST(Uqrep, JsonRoundTrip) {
    const auto& cd = CartanData::get("B2");
    auto m = build_irrep(cd, {1, 1});
    auto j = irrep_to_json(*m);
    auto back = irrep_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back->weights, m->weights);
    for (int i = 0; i < cd.rank(); ++i) {
        EXPECT_EQ(back->E[i], m->E[i]);
        EXPECT_EQ(back->F[i], m->F[i]);
        EXPECT_EQ(back->K[i], m->K[i]);
    }
    EXPECT_EQ(back->gram, m->gram);
    EXPECT_EQ(irrep_to_json(*back).dump(), j.dump());
}

TEST(Uqrep, HopfStructureOnGenerators) {
    // antipode axiom m(S (x) id) Delta = eps, evaluated on a module
    for (const auto& name : CartanData::supported_names()) {
        const auto& cd = CartanData::get(name);
        Weight l = cd.zero();
        l[0] = 1;
        auto m = build_irrep(cd, l);
        for (int i = 0; i < cd.rank(); ++i)
            for (auto x : {AlgebraWord::e(i), AlgebraWord::f(i), AlgebraWord::k(i), AlgebraWord::e(i) * AlgebraWord::f(i)}) {
                Matrix lhs(m->dim(), m->dim()), rhs(m->dim(), m->dim());
                for (const auto& [p, c] : coproduct(x)) {
                    lhs += m->act(antipode(cd, AlgebraWord::word(p.first))) * m->act(p.second) * c;
                    rhs += m->act(p.first) * m->act(antipode(cd, AlgebraWord::word(p.second))) * c;
                }
                Matrix eps = Matrix::identity(m->dim()) * counit(x);
                EXPECT_EQ(lhs, eps);
                EXPECT_EQ(rhs, eps);
                EXPECT_EQ(antipode(cd, antipode_inverse(cd, x)), x);
                EXPECT_EQ(star(star(x)), x);
            }
    }
}

TEST(Uqrep, CoidealProperty) {
    for (const auto& name : CartanData::supported_names()) {
        const auto& cd = CartanData::get(name);
        std::vector<Subset> thetas{full_subset(cd), Subset{}, Subset{0}};
        for (const auto& th : thetas) {
            auto gens = coideal_spanning_set(cd, th);
            std::vector<AlgebraWord> span;
            for (auto& [n, z] : gens) span.push_back(z);
            for (auto& [n, z] : gens) EXPECT_TRUE(coproduct_in_coideal(span, z)) << name << " " << n;
            for (auto& [n, z] : gens) EXPECT_TRUE(counit(z).is_zero()) << n;
        }
        // negative controls: k_1 for C_q, e_1 for the torus-only C_q(k)
        auto gens = coideal_spanning_set(cd, full_subset(cd));
        std::vector<AlgebraWord> span;
        for (auto& [n, z] : gens) span.push_back(z);
        EXPECT_FALSE(coproduct_in_coideal(span, AlgebraWord::k(0)));
        std::vector<AlgebraWord> torus;
        for (auto& [n, z] : coideal_spanning_set(cd, {})) torus.push_back(z);
        EXPECT_FALSE(coproduct_in_coideal(torus, AlgebraWord::e(0)));
    }
}
