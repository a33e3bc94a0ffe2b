#include "qbw/tensor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qbw {

std::vector<std::size_t> TensorModule::indices_of(const Weight& mu) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < weights.size(); ++k)
        if (weights[k] == mu) out.push_back(k);
    return out;
}

TensorModule tensor_module(const IrrepPtr& a, const IrrepPtr& b) {
    if (a->cd != b->cd) throw std::invalid_argument("tensor product of modules over different algebras");
    if (a->theta != b->theta) throw std::invalid_argument("tensor product of modules over different Levi subalgebras");
    TensorModule t;
    t.cd = a->cd;
    t.theta = a->theta;
    t.a = a;
    t.b = b;
    for (const auto& wa : a->weights)
        for (const auto& wb : b->weights) t.weights.push_back(wa + wb);
    for (int i = 0; i < t.cd->rank(); ++i) {
        t.E.push_back(Matrix::kron(a->E[i], b->K[i]) + Matrix::kron(a->Kinv[i], b->E[i]));
        t.F.push_back(Matrix::kron(a->F[i], b->K[i]) + Matrix::kron(a->Kinv[i], b->F[i]));
        t.K.push_back(Matrix::kron(a->K[i], b->K[i]));
        t.Kinv.push_back(Matrix::kron(a->Kinv[i], b->Kinv[i]));
    }
    return t;
}

namespace {

using SparseCols = std::vector<std::vector<std::pair<std::size_t, RationalFunction>>>;

SparseCols sparse_cols(const Matrix& m) {
    SparseCols out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) out[j].emplace_back(i, m(i, j));
    return out;
}

// Generator actions on the product without forming Kronecker products.
struct ProductAction {
    std::size_t da = 0, db = 0;
    std::vector<SparseCols> Ea, Fa, Ka, Kinva, Eb, Fb, Kb;
    SparseCols Ga, Gb;  // transposed Gram matrices

    ProductAction(const IrrepModule& a, const IrrepModule& b) : da(a.dim()), db(b.dim()) {
        for (int i = 0; i < a.cd->rank(); ++i) {
            Ea.push_back(sparse_cols(a.E[i]));
            Fa.push_back(sparse_cols(a.F[i]));
            Ka.push_back(sparse_cols(a.K[i]));
            Kinva.push_back(sparse_cols(a.Kinv[i]));
            Eb.push_back(sparse_cols(b.E[i]));
            Fb.push_back(sparse_cols(b.F[i]));
            Kb.push_back(sparse_cols(b.K[i]));
        }
        Ga = sparse_cols(a.gram.transpose());
        Gb = sparse_cols(b.gram.transpose());
    }

    // (X (x) Y) v accumulated into out
    void kron_apply(const SparseCols& X, const SparseCols& Y, const Vec& v, Vec& out) const {
        for (std::size_t idx = 0; idx < v.size(); ++idx) {
            if (v[idx].is_zero()) continue;
            const std::size_t i = idx / db, k = idx % db;
            for (const auto& [r1, x] : X[i]) {
                RationalFunction xv = x * v[idx];
                for (const auto& [r2, y] : Y[k]) out[r1 * db + r2] += xv * y;
            }
        }
    }
    // Delta(e) = e (x) k + k^-1 (x) e, the same for f
    Vec e(int j, const Vec& v) const {
        Vec out(v.size());
        kron_apply(Ea[j], Kb[j], v, out);
        kron_apply(Kinva[j], Eb[j], v, out);
        return out;
    }
    Vec f(int j, const Vec& v) const {
        Vec out(v.size());
        kron_apply(Fa[j], Kb[j], v, out);
        kron_apply(Kinva[j], Fb[j], v, out);
        return out;
    }
    // G^T v for the product form G = G_a (x) G_b
    Vec gram_t(const Vec& v) const {
        Vec out(v.size());
        kron_apply(Ga, Gb, v, out);
        return out;
    }
};

std::vector<Weight> product_weights(const IrrepModule& a, const IrrepModule& b) {
    std::vector<Weight> w;
    for (const auto& wa : a.weights)
        for (const auto& wb : b.weights) w.push_back(wa + wb);
    return w;
}

Matrix hw_vectors(const ProductAction& act, const std::vector<Weight>& weights, int rank, const Weight& nu) {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < weights.size(); ++k)
        if (weights[k] == nu) idx.push_back(k);
    const std::size_t n = weights.size();
    if (idx.empty()) return Matrix(n, 0);
    // rows: (j, product index) coefficients of E_j applied to the weight basis
    std::map<std::pair<int, std::size_t>, Vec> rows;
    for (std::size_t c = 0; c < idx.size(); ++c) {
        Vec unit(n);
        unit[idx[c]] = RationalFunction(1);
        for (int j = 0; j < rank; ++j) {
            Vec img = act.e(j, unit);
            for (std::size_t r = 0; r < n; ++r) {
                if (img[r].is_zero()) continue;
                auto [it, ins] = rows.try_emplace({j, r}, Vec(idx.size()));
                it->second[c] = img[r];
            }
        }
    }
    EchelonSystem sys(idx.size());
    for (auto& [key, row] : rows) sys.add(std::move(row));
    Matrix ker = sys.kernel();
    Matrix out(n, ker.cols());
    for (std::size_t c = 0; c < ker.cols(); ++c)
        for (std::size_t k = 0; k < idx.size(); ++k) out(idx[k], c) = ker(k, c);
    return out;
}

LaurentPoly lcm(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    return LaurentPoly::exact_div(a * b, LaurentPoly::gcd(a, b));
}

// rescale so that all entries are Laurent polynomials
void clear_denominators(Vec& v) {
    LaurentPoly l(1);
    for (const auto& x : v)
        if (!x.is_zero() && !x.is_laurent()) l = lcm(l, x.den());
    if (l.is_one()) return;
    const RationalFunction c(l);
    for (auto& x : v)
        if (!x.is_zero()) x *= c;
}

RationalFunction dot(const Vec& a, const Vec& b) {
    RationalFunction s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

}  // namespace

Matrix highest_weight_vectors(const TensorModule& t, const Weight& nu) {
    return hw_vectors(ProductAction(*t.a, *t.b), t.weights, t.cd->rank(), nu);
}

std::map<Weight, long> CGDecomposition::multiplicities() const {
    std::map<Weight, long> m;
    for (const auto& c : components) m[c.nu] += 1;
    return m;
}

Matrix graded_inverse(const Matrix& P, const std::vector<Weight>& row_weights, const std::vector<Weight>& col_weights) {
    const std::size_t n = P.rows();
    Matrix inv(n, n);
    std::set<Weight> ws(row_weights.begin(), row_weights.end());
    for (const auto& w : ws) {
        std::vector<std::size_t> rows, cols;
        for (std::size_t k = 0; k < n; ++k) {
            if (row_weights[k] == w) rows.push_back(k);
            if (col_weights[k] == w) cols.push_back(k);
        }
        if (rows.size() != cols.size()) throw std::logic_error("CG change of basis is not weight preserving");
        Matrix sub(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = P(rows[i], cols[j]);
        Matrix si = inverse(sub);
        for (std::size_t i = 0; i < cols.size(); ++i)
            for (std::size_t j = 0; j < rows.size(); ++j) inv(cols[i], rows[j]) = si(i, j);
    }
    return inv;
}

namespace {

Rational weight_height(const CartanData& cd, const Weight& w) {
    Rational h = 0;
    for (const auto& x : cd.weight_to_root(w)) h += x;
    return h;
}

}  // namespace

CGPtr decompose(const IrrepPtr& a, const IrrepPtr& b, const IrrepSource& source) {
    const CartanData& cd = *a->cd;
    if (a->cd != b->cd) throw std::invalid_argument("tensor product of modules over different algebras");
    if (a->is_levi() || b->is_levi()) throw std::invalid_argument("decompose expects U_q(g)-modules");
    const ProductAction act(*a, *b);
    const std::vector<Weight> weights = product_weights(*a, *b);
    std::set<Weight> dominant;
    for (const auto& w : weights)
        if (cd.is_dominant(w)) dominant.insert(w);
    std::vector<Weight> order(dominant.begin(), dominant.end());
    std::sort(order.begin(), order.end(), [&](const Weight& x, const Weight& y) {
        Rational hx = weight_height(cd, x), hy = weight_height(cd, y);
        if (hx != hy) return hx > hy;
        return x > y;
    });

    auto cg = std::make_shared<CGDecomposition>();
    cg->lambda = a->lambda;
    cg->mu = b->lambda;
    const std::size_t n = weights.size();
    std::vector<Vec> columns;
    // per isotypic component: first component index and highest weight vectors
    std::vector<std::pair<std::size_t, std::vector<Vec>>> isotypic;
    for (const auto& nu : order) {
        Matrix hw = hw_vectors(act, weights, cd.rank(), nu);
        if (hw.cols() == 0) continue;
        IrrepPtr irr = source(nu);
        isotypic.emplace_back(cg->components.size(), std::vector<Vec>{});
        for (std::size_t c = 0; c < hw.cols(); ++c) {
            Vec u = hw.column(c);
            clear_denominators(u);
            cg->components.push_back({nu, c, columns.size(), irr});
            for (auto& v : canonical_images(*irr, [&](int j, const Vec& x) { return act.f(j, x); }, u))
                columns.push_back(std::move(v));
            isotypic.back().second.push_back(std::move(u));
        }
    }
    if (columns.size() != n) throw std::logic_error("CG decomposition does not exhaust the tensor product");
    cg->P = Matrix::from_columns(columns, n);

    // The product of the contravariant forms is contravariant, so the blocks are
    // orthogonal across isotypic components and P^T G P = g (x) G_nu on each.
    cg->Pinv = Matrix(n, n);
    for (const auto& [first, hws] : isotypic) {
        const std::size_t mult = hws.size();
        const IrrepModule& irr = *cg->components[first].irrep;
        const std::size_t d = irr.dim();
        Matrix g(mult, mult);
        for (std::size_t c = 0; c < mult; ++c) {
            Vec Gu = act.gram_t(hws[c]);
            for (std::size_t c2 = 0; c2 < mult; ++c2) g(c, c2) = dot(Gu, hws[c2]);
        }
        const Matrix ginv = inverse(g);
        const Matrix Gnu_inv = graded_inverse(irr.gram, irr.weights, irr.weights);
        std::vector<std::vector<Vec>> y(mult);  // rows of P^T G
        for (std::size_t c = 0; c < mult; ++c)
            for (std::size_t p = 0; p < d; ++p) y[c].push_back(act.gram_t(columns[cg->components[first + c].offset + p]));
        for (std::size_t c = 0; c < mult; ++c)
            for (std::size_t p = 0; p < d; ++p) {
                // row = sum s * y, over a common denominator when y is Laurent
                std::vector<std::pair<RationalFunction, const Vec*>> terms;
                LaurentPoly den(1);
                for (std::size_t c2 = 0; c2 < mult; ++c2) {
                    if (ginv(c, c2).is_zero()) continue;
                    for (std::size_t p2 = 0; p2 < d; ++p2) {
                        if (Gnu_inv(p, p2).is_zero()) continue;
                        RationalFunction s = ginv(c, c2) * Gnu_inv(p, p2);
                        if (!s.is_laurent()) den = lcm(den, s.den());
                        terms.emplace_back(std::move(s), &y[c2][p2]);
                    }
                }
                const std::size_t r = cg->components[first + c].offset + p;
                bool laurent = true;
                for (const auto& t : terms)
                    for (const auto& x : *t.second)
                        if (!x.is_laurent()) laurent = false;
                if (!laurent) {
                    Vec row(n);
                    for (const auto& [s, yv] : terms)
                        for (std::size_t k = 0; k < n; ++k)
                            if (!(*yv)[k].is_zero()) row[k] += s * (*yv)[k];
                    for (std::size_t k = 0; k < n; ++k) cg->Pinv(r, k) = std::move(row[k]);
                    continue;
                }
                std::vector<LaurentPoly> acc(n);
                for (const auto& [s, yv] : terms) {
                    const LaurentPoly a = s.is_laurent() ? s.num() * den : s.num() * LaurentPoly::exact_div(den, s.den());
                    for (std::size_t k = 0; k < n; ++k)
                        if (!(*yv)[k].is_zero()) acc[k] += a * (*yv)[k].num();
                }
                for (std::size_t k = 0; k < n; ++k)
                    if (!acc[k].is_zero()) cg->Pinv(r, k) = RationalFunction(std::move(acc[k]), den);
            }
    }
    return cg;
}

CGPtr decompose(const TensorModule& t, const IrrepSource& source) {
    if (static_cast<int>(t.theta.size()) != t.cd->rank()) throw std::invalid_argument("decompose expects U_q(g)-modules");
    return decompose(t.a, t.b, source);
}

bool check_block_diagonal(const TensorModule& t, const CGDecomposition& cg) {
    std::vector<std::vector<const Matrix*>> blocks(4);
    for (int i = 0; i < t.cd->rank(); ++i) {
        std::vector<const Matrix*> e, f, k;
        for (const auto& c : cg.components) {
            e.push_back(&c.irrep->E[i]);
            f.push_back(&c.irrep->F[i]);
            k.push_back(&c.irrep->K[i]);
        }
        if (cg.Pinv * t.E[i] * cg.P != Matrix::direct_sum(e)) return false;
        if (cg.Pinv * t.F[i] * cg.P != Matrix::direct_sum(f)) return false;
        if (cg.Pinv * t.K[i] * cg.P != Matrix::direct_sum(k)) return false;
    }
    return (cg.P * cg.Pinv).is_identity();
}

nlohmann::json cg_to_json(const CGDecomposition& cg) {
    nlohmann::json j;
    j["lambda"] = cg.lambda;
    j["mu"] = cg.mu;
    j["dim"] = cg.P.rows();
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : cg.components) comps.push_back({{"nu", c.nu}, {"copy", c.copy}, {"offset", c.offset}});
    j["components"] = comps;
    j["P"] = sparse_json(cg.P);
    j["Pinv"] = sparse_json(cg.Pinv);
    return j;
}

CGPtr cg_from_json(const nlohmann::json& j, const IrrepSource& source) {
    auto cg = std::make_shared<CGDecomposition>();
    cg->lambda = j.at("lambda").get<Weight>();
    cg->mu = j.at("mu").get<Weight>();
    auto n = j.at("dim").get<std::size_t>();
    std::size_t total = 0;
    for (const auto& c : j.at("components")) {
        Weight nu = c.at("nu").get<Weight>();
        auto irr = source(nu);
        cg->components.push_back({nu, c.at("copy").get<std::size_t>(), c.at("offset").get<std::size_t>(), irr});
        if (cg->components.back().offset != total) throw std::invalid_argument("inconsistent CG record");
        total += irr->dim();
    }
    if (total != n) throw std::invalid_argument("inconsistent CG record");
    cg->P = sparse_from_json(j.at("P"), n, n);
    cg->Pinv = sparse_from_json(j.at("Pinv"), n, n);
    return cg;
}

}  // namespace qbw
