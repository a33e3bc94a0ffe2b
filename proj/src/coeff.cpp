#include "qbw/coeff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qbw {

using RF = RationalFunction;

std::string coeff_key_to_string(const CoeffKey& k) {
    std::string w = weight_to_string(k.lambda);
    std::ostringstream os;
    os << "t" << w << "[" << k.i + 1 << "," << k.j + 1 << "]";
    return os.str();
}

CoeffElement CoeffElement::t(const Weight& lambda, std::size_t i, std::size_t j, const RF& c) {
    CoeffElement a;
    a.add({lambda, i, j}, c);
    return a;
}

CoeffElement CoeffElement::unit(const CartanData& cd) {
    return t(cd.zero(), 0, 0);
}

void CoeffElement::add(const CoeffKey& k, const RF& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

std::set<Weight> CoeffElement::support() const {
    std::set<Weight> s;
    for (const auto& [k, c] : terms_) s.insert(k.lambda);
    return s;
}

CoeffElement CoeffElement::component(const Weight& lambda) const {
    CoeffElement out;
    for (const auto& [k, c] : terms_)
        if (k.lambda == lambda) out.terms_.emplace(k, c);
    return out;
}

CoeffElement& CoeffElement::operator+=(const CoeffElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

CoeffElement& CoeffElement::operator-=(const CoeffElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

CoeffElement& CoeffElement::operator*=(const RF& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, x] : terms_) x *= c;
    return *this;
}

std::string CoeffElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ") * " + coeff_key_to_string(k);
    }
    return out;
}

nlohmann::json CoeffElement::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, c] : terms_)
        out.push_back({{"lambda", k.lambda}, {"i", k.i + 1}, {"j", k.j + 1}, {"c", c.to_string()}});
    return out;
}

CoeffElement CoeffElement::from_json(const nlohmann::json& j) {
    CoeffElement a;
    for (const auto& r : j) {
        auto i = r.at("i").get<std::size_t>(), jj = r.at("j").get<std::size_t>();
        if (i == 0 || jj == 0) throw std::invalid_argument("coefficient indices are 1-based");
        a.add({r.at("lambda").get<Weight>(), i - 1, jj - 1}, RF::parse(r.at("c").get<std::string>()));
    }
    return a;
}

void add_to(CoeffTensor& t, const CoeffPair& k, const RF& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t.try_emplace(k, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

namespace {

void check_index(const IrrepModule& m, const CoeffKey& k) {
    if (k.i >= m.dim() || k.j >= m.dim())
        throw std::out_of_range("coefficient index out of range: " + coeff_key_to_string(k));
}

std::string wkey(const Weight& w) {
    return weight_to_string(w);
}

std::shared_ptr<const Matrix> gram_inverse(const Algebra& alg, const Weight& lambda) {
    return alg.memo<Matrix>("gram-inverse" + wkey(lambda), [&] {
        auto m = alg.irrep(lambda);
        return std::make_shared<const Matrix>(graded_inverse(m->gram, m->weights, m->weights));
    });
}

std::shared_ptr<const Matrix> k2rho_matrix(const Algebra& alg, const Weight& lambda) {
    return alg.memo<Matrix>("k2rho" + wkey(lambda), [&] {
        return std::make_shared<const Matrix>(cartan_monomial_matrix(*alg.irrep(lambda), k2rho(alg.cd())));
    });
}

}  // namespace

RF coeff_eval(const Algebra& alg, const CoeffElement& a, const AlgebraWord& x) {
    RF out;
    for (const auto& lambda : a.support()) {
        auto m = alg.irrep(lambda);
        Matrix X = m->act(x);
        for (const auto& [k, c] : a.terms())
            if (k.lambda == lambda) {
                check_index(*m, k);
                out += c * X(k.i, k.j);
            }
    }
    return out;
}

RF counit(const CoeffElement& a) {
    RF out;
    for (const auto& [k, c] : a.terms())
        if (k.i == k.j) out += c;
    return out;
}

CoeffTensor coproduct(const Algebra& alg, const CoeffElement& a) {
    CoeffTensor out;
    for (const auto& [k, c] : a.terms()) {
        auto m = alg.irrep(k.lambda);
        check_index(*m, k);
        for (std::size_t l = 0; l < m->dim(); ++l) add_to(out, {{k.lambda, k.i, l}, {k.lambda, l, k.j}}, c);
    }
    return out;
}

CoeffElement product(const Algebra& alg, const CoeffElement& a, const CoeffElement& b) {
    CoeffElement out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            auto cg = alg.cg(ka.lambda, kb.lambda);
            auto ma = alg.irrep(ka.lambda), mb = alg.irrep(kb.lambda);
            check_index(*ma, ka);
            check_index(*mb, kb);
            const std::size_t row = ka.i * mb->dim() + kb.i, col = ka.j * mb->dim() + kb.j;
            RF c = ca * cb;
            for (const auto& comp : cg->components) {
                const std::size_t d = comp.irrep->dim();
                for (std::size_t p = 0; p < d; ++p) {
                    const RF& x = cg->P(row, comp.offset + p);
                    if (x.is_zero()) continue;
                    for (std::size_t q = 0; q < d; ++q) {
                        const RF& y = cg->Pinv(comp.offset + q, col);
                        if (y.is_zero()) continue;
                        out.add({comp.nu, p, q}, c * x * y);
                    }
                }
            }
        }
    return out;
}

std::shared_ptr<const DualIntertwiner> dual_intertwiner(const Algebra& alg, const Weight& lambda) {
    return alg.memo<DualIntertwiner>("dual" + wkey(lambda), [&] {
        const CartanData& cd = alg.cd();
        auto m = alg.irrep(lambda);
        const std::size_t n = m->dim();
        auto dual = std::make_shared<DualIntertwiner>();
        dual->lambda = lambda;
        dual->dual = dagger(cd, lambda);
        auto target = alg.irrep(dual->dual);
        // dual representation x -> t(S x)^T; basis vector b has weight -wt(b)
        std::vector<Matrix> DF;
        for (int i = 0; i < cd.rank(); ++i) DF.push_back(m->act(antipode(cd, AlgebraWord::f(i))).transpose());
        std::vector<Weight> dual_weights;
        for (const auto& w : m->weights) dual_weights.push_back(-w);
        std::size_t low = n;
        for (std::size_t b = 0; b < n; ++b)
            if (dual_weights[b] == dual->dual) low = b;
        if (low == n) throw std::logic_error("dual module has no vector of the dual highest weight");
        Vec hw(n);
        hw[low] = RF(1);
        dual->J = Matrix::from_columns(canonical_images(*target, DF, hw), n);
        dual->Jinv = graded_inverse(dual->J, dual_weights, target->weights);
        return std::shared_ptr<const DualIntertwiner>(dual);
    });
}

CoeffElement antipode(const Algebra& alg, const CoeffElement& a) {
    CoeffElement out;
    for (const auto& [k, c] : a.terms()) {
        auto m = alg.irrep(k.lambda);
        check_index(*m, k);
        auto d = dual_intertwiner(alg, k.lambda);
        const std::size_t n = m->dim();
        // S(t_ij) = sum_pq J_jp Jinv_qi t'_pq
        for (std::size_t p = 0; p < n; ++p) {
            const RF& x = d->J(k.j, p);
            if (x.is_zero()) continue;
            for (std::size_t q = 0; q < n; ++q) {
                const RF& y = d->Jinv(q, k.i);
                if (y.is_zero()) continue;
                out.add({d->dual, p, q}, c * x * y);
            }
        }
    }
    return out;
}

CoeffElement star(const Algebra& alg, const CoeffElement& a) {
    // t(x*) = G^-1 t(x)^T G, hence *(t_ij) = sum_kl (G^-1)_ik G_lj S(t_lk)
    CoeffElement pre;
    for (const auto& [k, c] : a.terms()) {
        auto m = alg.irrep(k.lambda);
        check_index(*m, k);
        auto ginv = gram_inverse(alg, k.lambda);
        const std::size_t n = m->dim();
        for (std::size_t kk = 0; kk < n; ++kk) {
            const RF& x = (*ginv)(k.i, kk);
            if (x.is_zero()) continue;
            for (std::size_t l = 0; l < n; ++l) {
                const RF& y = m->gram(l, k.j);
                if (y.is_zero()) continue;
                pre.add({k.lambda, l, kk}, c * x * y);
            }
        }
    }
    return antipode(alg, pre);
}

RF haar(const CoeffElement& a) {
    for (const auto& [k, c] : a.terms())
        if (std::all_of(k.lambda.begin(), k.lambda.end(), [](int x) { return x == 0; })) return c;
    return RF();
}

CoeffElement ttilde(const Algebra& alg, const Weight& lambda, std::size_t i, std::size_t j) {
    return antipode(alg, CoeffElement::t(lambda, j, i));
}

RF schur_pair(const Algebra& alg, SchurVariant v, const Weight& lambda, std::size_t i, std::size_t j, std::size_t r,
              std::size_t s, const Weight& mu) {
    if (lambda != mu) return RF();
    auto m = alg.irrep(lambda);
    RF D = quantum_dimension(*m);
    if (v == SchurVariant::t_ttilde) {
        if (i != r) return RF();
        return (*k2rho_matrix(alg, lambda))(s, j) / D;
    }
    if (j != s) return RF();
    return coeff_eval(alg, ttilde(alg, lambda, i, r), k2rho(alg.cd()).as_word()) / D;
}

RF schur_by_cg(const Algebra& alg, SchurVariant v, const Weight& lambda, std::size_t i, std::size_t j, std::size_t r,
               std::size_t s, const Weight& mu) {
    if (v == SchurVariant::t_ttilde)
        return haar(product(alg, CoeffElement::t(lambda, i, j), ttilde(alg, mu, r, s)));
    return haar(product(alg, ttilde(alg, lambda, i, j), CoeffElement::t(mu, r, s)));
}

CoeffElement circ_action(const Algebra& alg, const AlgebraWord& x, const CoeffElement& a) {
    CoeffElement out;
    for (const auto& lambda : a.support()) {
        auto m = alg.irrep(lambda);
        Matrix X = m->act(x);
        for (const auto& [k, c] : a.terms()) {
            if (k.lambda != lambda) continue;
            check_index(*m, k);
            for (std::size_t l = 0; l < m->dim(); ++l)
                if (!X(l, k.j).is_zero()) out.add({lambda, k.i, l}, c * X(l, k.j));
        }
    }
    return out;
}

CoeffElement dot_action(const Algebra& alg, const AlgebraWord& x, const CoeffElement& a) {
    CoeffElement out;
    AlgebraWord sx = antipode_inverse(alg.cd(), x);
    for (const auto& lambda : a.support()) {
        auto m = alg.irrep(lambda);
        Matrix X = m->act(sx);
        for (const auto& [k, c] : a.terms()) {
            if (k.lambda != lambda) continue;
            check_index(*m, k);
            for (std::size_t l = 0; l < m->dim(); ++l)
                if (!X(k.i, l).is_zero()) out.add({lambda, l, k.j}, c * X(k.i, l));
        }
    }
    return out;
}

NumericValue haar_positivity(const Algebra& alg, const CoeffElement& a, const Rational& v0) {
    return specialize(haar(product(alg, star(alg, a), a)), v0);
}

CoeffElement random_coeff(const Algebra& alg, std::mt19937_64& rng, const std::vector<Weight>& support,
                          std::size_t terms) {
    CoeffElement a;
    if (support.empty()) return a;
    std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), ex(-2, 2);
    for (std::size_t t = 0; t < terms; ++t) {
        const Weight& l = support[pick(rng)];
        const std::size_t d = alg.irrep(l)->dim();
        std::uniform_int_distribution<std::size_t> idx(0, d - 1);
        std::size_t i = idx(rng), j = idx(rng);
        int n = num(rng);
        if (n == 0) n = 1;
        int dd = den(rng), e = ex(rng);
        a.add({l, i, j}, RF(make_rational(n, dd)) * RF::v(e));
    }
    return a;
}

}  // namespace qbw
