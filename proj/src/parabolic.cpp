#include "qbw/parabolic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qbw {

const char* flavor_name(HomFlavor f) {
    return f == HomFlavor::levi ? "levi" : "parabolic";
}

ParabolicData::ParabolicData(const CartanData& c, Subset th) : cd(&c), theta(std::move(th)) {
    std::sort(theta.begin(), theta.end());
    theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
    for (int j : theta)
        if (j < 0 || j >= c.rank()) throw std::invalid_argument("theta index out of range");
    for (int i = 0; i < c.rank(); ++i) {
        levi_generators.push_back({Gen::K, i});
        levi_generators.push_back({Gen::Kinv, i});
    }
    for (int j : theta) {
        levi_generators.push_back({Gen::E, j});
        levi_generators.push_back({Gen::F, j});
    }
    parabolic_generators = levi_generators;
    for (int j = 0; j < c.rank(); ++j)
        if (!in_theta(j)) parabolic_generators.push_back({Gen::E, j});
}

bool ParabolicData::in_theta(int j) const {
    return std::binary_search(theta.begin(), theta.end(), j);
}

ModuleView view(const IrrepModule& m) {
    return {m.weights, &m.E, &m.F};
}

ModuleView view(const TensorModule& t) {
    return {t.weights, &t.E, &t.F};
}

std::vector<Matrix> solve_intertwiners(const ModuleView& src, const ModuleView& tgt, const std::vector<Letter>& gens) {
    const std::size_t ds = src.weights.size(), dt = tgt.weights.size();
    // unknowns phi(a, b) with equal weights
    std::vector<std::vector<long>> unk(dt, std::vector<long>(ds, -1));
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t a = 0; a < dt; ++a)
        for (std::size_t b = 0; b < ds; ++b)
            if (tgt.weights[a] == src.weights[b]) {
                unk[a][b] = static_cast<long>(pos.size());
                pos.emplace_back(a, b);
            }
    const std::size_t n = pos.size();
    std::vector<Vec> rows;
    for (const auto& g : gens) {
        if (g.g != Gen::E && g.g != Gen::F) continue;
        const Matrix& Xs = (g.g == Gen::E ? *src.E : *src.F)[g.i];
        const Matrix& Xt = (g.g == Gen::E ? *tgt.E : *tgt.F)[g.i];
        std::vector<std::vector<std::pair<std::size_t, RationalFunction>>> scol(ds), trow(dt);
        for (std::size_t b = 0; b < ds; ++b)
            for (std::size_t c = 0; c < ds; ++c)
                if (!Xs(b, c).is_zero()) scol[c].emplace_back(b, Xs(b, c));
        for (std::size_t r = 0; r < dt; ++r)
            for (std::size_t a = 0; a < dt; ++a)
                if (!Xt(r, a).is_zero()) trow[r].emplace_back(a, Xt(r, a));
        // (phi Xs - Xt phi)(r, c) = 0
        for (std::size_t r = 0; r < dt; ++r)
            for (std::size_t c = 0; c < ds; ++c) {
                Vec row(n);
                bool any = false;
                for (const auto& [b, x] : scol[c])
                    if (unk[r][b] >= 0) {
                        row[unk[r][b]] += x;
                        any = true;
                    }
                for (const auto& [a, x] : trow[r])
                    if (unk[a][c] >= 0) {
                        row[unk[a][c]] -= x;
                        any = true;
                    }
                if (any) rows.push_back(std::move(row));
            }
    }
    std::vector<Matrix> out;
    if (n == 0) return out;
    Matrix kernel;
    if (rows.empty()) {
        kernel = Matrix::identity(n);
    } else {
        Matrix eq(rows.size(), n);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < n; ++c) eq(r, c) = rows[r][c];
        kernel = nullspace(eq);
    }
    for (std::size_t k = 0; k < kernel.cols(); ++k) {
        Matrix phi(dt, ds);
        for (std::size_t u = 0; u < n; ++u) phi(pos[u].first, pos[u].second) = kernel(u, k);
        out.push_back(std::move(phi));
    }
    return out;
}

std::map<Weight, long> LeviBranching::multiplicities() const {
    std::map<Weight, long> m;
    for (const auto& s : summands) m[s.mu] += 1;
    return m;
}

Matrix LeviBranching::projection(std::size_t summand) const {
    const auto& s = summands.at(summand);
    return Pinv.block(s.offset, 0, s.irrep->dim(), Pinv.cols());
}

namespace {

Rational weight_height(const CartanData& cd, const Weight& w) {
    Rational h = 0;
    for (const auto& x : cd.weight_to_root(w)) h += x;
    return h;
}

}  // namespace

LeviBranching restrict_levi(const Algebra& alg, const IrrepModule& m, const ParabolicData& p) {
    const CartanData& cd = *m.cd;
    LeviBranching out;
    out.lambda = m.lambda;
    out.theta = p.theta;
    std::set<Weight> tops;
    for (const auto& w : m.weights)
        if (is_theta_dominant(w, p.theta)) tops.insert(w);
    std::vector<Weight> order(tops.begin(), tops.end());
    std::sort(order.begin(), order.end(), [&](const Weight& a, const Weight& b) {
        Rational ha = weight_height(cd, a), hb = weight_height(cd, b);
        if (ha != hb) return ha > hb;
        return a > b;
    });
    const std::size_t n = m.dim();
    std::vector<Vec> columns;
    std::vector<Weight> col_weights;
    for (const auto& mu : order) {
        const WeightBlock* blk = m.block_of(mu);
        Matrix kernel;
        if (p.theta.empty()) {
            kernel = Matrix::identity(blk->size);
        } else {
            Matrix stacked(n * p.theta.size(), blk->size);
            for (std::size_t t = 0; t < p.theta.size(); ++t)
                for (std::size_t c = 0; c < blk->size; ++c)
                    for (std::size_t r = 0; r < n; ++r) stacked(t * n + r, c) = m.E[p.theta[t]](r, blk->start + c);
            kernel = nullspace(stacked);
        }
        if (kernel.cols() == 0) continue;
        IrrepPtr V = alg.levi(mu, p.theta);
        for (std::size_t k = 0; k < kernel.cols(); ++k) {
            Vec hw(n);
            for (std::size_t c = 0; c < blk->size; ++c) hw[blk->start + c] = kernel(c, k);
            auto imgs = canonical_images(*V, m.F, hw);
            LeviSummand s{mu, k, columns.size(), V, Matrix::from_columns(imgs, n)};
            columns.insert(columns.end(), imgs.begin(), imgs.end());
            col_weights.insert(col_weights.end(), V->weights.begin(), V->weights.end());
            out.summands.push_back(std::move(s));
        }
    }
    if (columns.size() != n) throw std::logic_error("Levi branching does not exhaust the module");
    out.P = Matrix::from_columns(columns, n);
    out.Pinv = graded_inverse(out.P, m.weights, col_weights);
    return out;
}

HomBasis hom_space(const IrrepModule& m, const IrrepPtr& target, const ParabolicData& p,
                   HomFlavor flavor) {
    if (target->theta != p.theta && static_cast<int>(target->theta.size()) != m.cd->rank())
        throw std::invalid_argument("target is not a module of the given Levi subalgebra");
    HomBasis h;
    h.flavor = flavor;
    h.lambda = m.lambda;
    h.target = target;
    h.maps = solve_intertwiners(view(m), view(*target), p.generators(flavor));
    return h;
}

bool is_intertwiner(const IrrepModule& src, const IrrepModule& tgt, const Matrix& phi, const ParabolicData& p,
                    HomFlavor flavor) {
    for (const auto& g : p.generators(flavor))
        if (phi * src.letter_matrix(g) != tgt.letter_matrix(g) * phi) return false;
    return true;
}

HomElement tensor_hom(const Algebra& alg, const ParabolicData& p, const HomElement& a, const HomElement& b) {
    if (a.phi.is_zero() || b.phi.is_zero()) throw std::invalid_argument("tensor_hom needs nonzero homomorphisms");
    auto cg = alg.cg(a.lambda, b.lambda);
    const Weight top = a.lambda + b.lambda;
    const CGComponent* comp = nullptr;
    for (const auto& c : cg->components)
        if (c.nu == top) comp = &c;
    if (!comp) throw std::logic_error("top component missing from the CG decomposition");
    Matrix incl = cg->P.block(0, comp->offset, cg->P.rows(), comp->irrep->dim());
    auto target = alg.levi(a.target->lambda + b.target->lambda, p.theta);
    auto prod = tensor_module(a.target, b.target);
    auto proj = solve_intertwiners(view(prod), view(*target), p.levi_generators);
    if (proj.size() != 1) throw std::logic_error("top Levi component of the tensor product is not simple");
    HomElement out{top, target, proj[0] * Matrix::kron(a.phi, b.phi) * incl};
    if (out.phi.is_zero()) throw std::logic_error("induced homomorphism vanishes");
    return out;
}

long central_hom_count(const Algebra& alg, const ParabolicData& p) {
    const CartanData& cd = alg.cd();
    auto w = alg.irrep(cd.root_to_weight(cd.highest_root()));
    return static_cast<long>(hom_space(*w, alg.levi(cd.zero(), p.theta), p, HomFlavor::levi).dim());
}

long predicted_parabolic_dim(const CartanData& cd, const Weight& lambda, const Weight& mu, const Subset& theta) {
    return lowest_weight(cd, lambda) == levi_lowest_weight(cd, mu, theta) ? 1 : 0;
}

nlohmann::json hom_to_json(const HomBasis& h) {
    nlohmann::json j{{"flavor", flavor_name(h.flavor)},
                     {"lambda", h.lambda},
                     {"mu", h.target->lambda},
                     {"theta", h.target->theta},
                     {"dim", h.dim()}};
    j["maps"] = nlohmann::json::array();
    for (const auto& m : h.maps) j["maps"].push_back(sparse_json(m));
    return j;
}

}  // namespace qbw
