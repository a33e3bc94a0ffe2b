#include "qbw/uqrep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qbw {

namespace {

using SparseCol = std::vector<std::pair<std::size_t, RationalFunction>>;

struct Candidate {
    std::size_t parent;
    int i;
};

class Builder {
public:
    Builder(const CartanData& cd, Weight lambda, Subset theta)
        : cd_(cd), lambda_(std::move(lambda)), theta_(std::move(theta)) {}

    IrrepPtr run() {
        const int r = cd_.rank();
        Ecol_.assign(static_cast<std::size_t>(r), {});
        Fcol_.assign(static_cast<std::size_t>(r), {});
        add_vector(lambda_, -1, -1);
        blocks_.push_back({lambda_, 0, 1});
        block_id_[lambda_] = 0;
        Matrix g0(1, 1);
        g0(0, 0) = 1;
        gram_.push_back(g0);

        std::vector<std::size_t> level{0};
        while (!level.empty()) level = next_level(level);
        return assemble();
    }

private:
    const CartanData& cd_;
    Weight lambda_;
    Subset theta_;
    std::vector<Weight> weights_;
    std::vector<long> parent_;
    std::vector<int> letter_;
    std::vector<WeightBlock> blocks_;
    std::map<Weight, std::size_t> block_id_;
    std::vector<Matrix> gram_;
    std::vector<std::vector<SparseCol>> Ecol_, Fcol_;  // [generator][basis index]

    void add_vector(const Weight& w, long parent, int letter) {
        weights_.push_back(w);
        parent_.push_back(parent);
        letter_.push_back(letter);
        for (auto& c : Ecol_) c.emplace_back();
        for (auto& c : Fcol_) c.emplace_back();
    }

    RootVec depth_coords(const Weight& mu) const {
        RootVec c;
        cd_.in_root_lattice(lambda_ - mu, &c);
        return c;
    }

    std::vector<std::size_t> next_level(const std::vector<std::size_t>& prev) {
        std::map<Weight, std::vector<Candidate>> cands;
        for (std::size_t bid : prev) {
            const auto& blk = blocks_[bid];
            for (std::size_t b = blk.start; b < blk.start + blk.size; ++b)
                for (int i : theta_) cands[weights_[b] - cd_.simple_root(i)].push_back({b, i});
        }
        std::vector<Weight> order;
        for (const auto& [mu, c] : cands) order.push_back(mu);
        std::sort(order.begin(), order.end(),
                  [&](const Weight& a, const Weight& b) { return depth_coords(a) > depth_coords(b); });
        std::vector<std::size_t> level;
        for (const auto& mu : order)
            if (build_weight(mu, cands[mu])) level.push_back(blocks_.size() - 1);
        return level;
    }

    bool build_weight(const Weight& mu, const std::vector<Candidate>& cands) {
        // stacked E_j images, one row group per j in theta
        std::vector<std::pair<int, const WeightBlock*>> groups;
        std::vector<std::size_t> offset;
        std::size_t rows = 0;
        for (int j : theta_) {
            auto it = block_id_.find(mu + cd_.simple_root(j));
            if (it == block_id_.end()) continue;
            groups.emplace_back(j, &blocks_[it->second]);
            offset.push_back(rows);
            rows += blocks_[it->second].size;
        }
        if (rows == 0) return false;
        Matrix img(rows, cands.size());
        for (std::size_t c = 0; c < cands.size(); ++c) {
            const auto [b, i] = cands[c];
            for (std::size_t g = 0; g < groups.size(); ++g) {
                const auto [j, blk] = groups[g];
                for (const auto& [k, x] : Ecol_[j][b])
                    for (const auto& [t, y] : Fcol_[i][k]) img(offset[g] + (t - blk->start), c) += x * y;
                if (j == i) {
                    int n = weights_[b][i];
                    img(offset[g] + (b - blk->start), c) += RationalFunction(q_integer(n, cd_.d(i)));
                }
            }
        }
        Rref red = rref(img);
        if (red.pivots.empty()) return false;

        WeightBlock blk{mu, weights_.size(), red.pivots.size()};
        for (std::size_t p : red.pivots) {
            std::size_t idx = weights_.size();
            add_vector(mu, static_cast<long>(cands[p].parent), cands[p].i);
            for (std::size_t g = 0; g < groups.size(); ++g) {
                const auto [j, gb] = groups[g];
                for (std::size_t t = 0; t < gb->size; ++t) {
                    const auto& x = img(offset[g] + t, p);
                    if (!x.is_zero()) Ecol_[j][idx].emplace_back(gb->start + t, x);
                }
            }
        }
        std::vector<long> pivot_slot(cands.size(), -1);
        for (std::size_t r = 0; r < red.pivots.size(); ++r) pivot_slot[red.pivots[r]] = static_cast<long>(r);
        for (std::size_t c = 0; c < cands.size(); ++c) {
            SparseCol col;
            if (pivot_slot[c] >= 0) {
                col.emplace_back(blk.start + static_cast<std::size_t>(pivot_slot[c]), RationalFunction(1));
            } else {
                for (std::size_t r = 0; r < red.pivots.size(); ++r)
                    if (!red.reduced(r, c).is_zero()) col.emplace_back(blk.start + r, red.reduced(r, c));
            }
            Fcol_[cands[c].i][cands[c].parent] = std::move(col);
        }

        // (f_i p, y) = (p, e_i y)
        Matrix g(blk.size, blk.size);
        for (std::size_t x = 0; x < blk.size; ++x) {
            std::size_t bx = blk.start + x;
            auto p = static_cast<std::size_t>(parent_[bx]);
            int i = letter_[bx];
            const auto& pb = blocks_[block_id_.at(weights_[p])];
            const auto& pg = gram_[block_id_.at(weights_[p])];
            for (std::size_t y = 0; y < blk.size; ++y) {
                RationalFunction s;
                for (const auto& [k, e] : Ecol_[i][blk.start + y])
                    if (!pg(p - pb.start, k - pb.start).is_zero()) s += pg(p - pb.start, k - pb.start) * e;
                g(x, y) = s;
            }
        }
        block_id_[mu] = blocks_.size();
        blocks_.push_back(blk);
        gram_.push_back(std::move(g));
        return true;
    }

    IrrepPtr assemble() {
        auto m = std::make_shared<IrrepModule>();
        const std::size_t n = weights_.size();
        const int r = cd_.rank();
        m->cd = &cd_;
        m->lambda = lambda_;
        m->theta = theta_;
        m->weights = weights_;
        m->blocks = blocks_;
        m->parent = parent_;
        m->letter = letter_;
        for (int i = 0; i < r; ++i) {
            Matrix E(n, n), F(n, n), K(n, n), Ki(n, n);
            for (std::size_t b = 0; b < n; ++b) {
                for (const auto& [t, x] : Ecol_[i][b]) E(t, b) = x;
                for (const auto& [t, x] : Fcol_[i][b]) F(t, b) = x;
                int e = cd_.inner_simple(weights_[b], i);
                K(b, b) = RationalFunction::v(e);
                Ki(b, b) = RationalFunction::v(-e);
            }
            m->E.push_back(std::move(E));
            m->F.push_back(std::move(F));
            m->K.push_back(std::move(K));
            m->Kinv.push_back(std::move(Ki));
        }
        std::vector<const Matrix*> gb;
        for (const auto& g : gram_) gb.push_back(&g);
        m->gram = Matrix::direct_sum(gb);
        return m;
    }
};

void check_weight(const CartanData& cd, const Weight& w) {
    if (static_cast<int>(w.size()) != cd.rank())
        throw std::invalid_argument("weight " + weight_to_string(w) + " has wrong rank for " + cd.name());
}

}  // namespace

const WeightBlock* IrrepModule::block_of(const Weight& mu) const {
    for (const auto& b : blocks)
        if (b.weight == mu) return &b;
    return nullptr;
}

std::size_t IrrepModule::block_index(std::size_t basis_index) const {
    for (std::size_t k = 0; k < blocks.size(); ++k)
        if (basis_index < blocks[k].start + blocks[k].size) return k;
    throw std::out_of_range("basis index out of range");
}

bool IrrepModule::in_theta(int j) const {
    return std::find(theta.begin(), theta.end(), j) != theta.end();
}

const Matrix& IrrepModule::letter_matrix(const Letter& l) const {
    switch (l.g) {
        case Gen::E: return E.at(l.i);
        case Gen::F: return F.at(l.i);
        case Gen::K: return K.at(l.i);
        case Gen::Kinv: return Kinv.at(l.i);
    }
    throw std::logic_error("bad letter");
}

Matrix IrrepModule::act(const Word& w) const {
    if (w.empty()) return Matrix::identity(dim());
    Matrix m = letter_matrix(w[0]);
    for (std::size_t k = 1; k < w.size(); ++k) m = m * letter_matrix(w[k]);
    return m;
}

Matrix IrrepModule::act(const AlgebraWord& x) const {
    Matrix m(dim(), dim());
    for (const auto& [w, c] : x.terms()) m += act(w) * c;
    return m;
}

IrrepPtr build_irrep(const CartanData& cd, const Weight& lambda) {
    check_weight(cd, lambda);
    if (!cd.is_dominant(lambda)) throw std::invalid_argument("weight " + weight_to_string(lambda) + " is not dominant");
    return Builder(cd, lambda, full_subset(cd)).run();
}

IrrepPtr build_levi_irrep(const CartanData& cd, const Weight& mu, const Subset& theta) {
    check_weight(cd, mu);
    for (int j : theta)
        if (j < 0 || j >= cd.rank()) throw std::invalid_argument("subset index out of range");
    if (!is_theta_dominant(mu, theta))
        throw std::invalid_argument("weight " + weight_to_string(mu) + " is not dominant for the Levi subalgebra");
    return Builder(cd, mu, theta).run();
}

std::vector<Vec> canonical_images(const IrrepModule& m, const std::vector<Matrix>& F_other, const Vec& hw) {
    return canonical_images(m, [&](int i, const Vec& x) { return F_other.at(static_cast<std::size_t>(i)) * x; }, hw);
}

std::vector<Vec> canonical_images(const IrrepModule& m, const std::function<Vec(int, const Vec&)>& apply_f,
                                  const Vec& hw) {
    std::vector<Vec> out;
    out.reserve(m.dim());
    out.push_back(hw);
    for (std::size_t b = 1; b < m.dim(); ++b) out.push_back(apply_f(m.letter[b], out[static_cast<std::size_t>(m.parent[b])]));
    return out;
}

bool RelationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

std::vector<std::string> RelationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.pass) out.push_back(c.name);
    return out;
}

RelationReport check_relations(const CartanData& cd, const Subset& theta, const std::vector<Matrix>& E,
                               const std::vector<Matrix>& F, const std::vector<Matrix>& K,
                               const std::vector<Matrix>& Kinv) {
    RelationReport rep;
    const int r = cd.rank();
    const std::size_t n = K.at(0).rows();
    const Matrix I = Matrix::identity(n);
    auto idx = [](int i) { return std::to_string(i + 1); };
    for (int i = 0; i < r; ++i) {
        rep.checks.push_back({"k" + idx(i) + " k" + idx(i) + "^-1 = 1", K[i] * Kinv[i] == I && Kinv[i] * K[i] == I});
        for (int j = i + 1; j < r; ++j)
            rep.checks.push_back({"k" + idx(i) + " k" + idx(j) + " = k" + idx(j) + " k" + idx(i), K[i] * K[j] == K[j] * K[i]});
    }
    for (int i = 0; i < r; ++i)
        for (int j : theta) {
            int a = cd.root_inner(i, j);
            rep.checks.push_back({"k" + idx(i) + " e" + idx(j) + " k" + idx(i) + "^-1 = v^" + std::to_string(a) + " e" + idx(j),
                                  K[i] * E[j] * Kinv[i] == E[j] * RationalFunction::v(a)});
            rep.checks.push_back({"k" + idx(i) + " f" + idx(j) + " k" + idx(i) + "^-1 = v^" + std::to_string(-a) + " f" + idx(j),
                                  K[i] * F[j] * Kinv[i] == F[j] * RationalFunction::v(-a)});
        }
    for (int i : theta)
        for (int j : theta) {
            Matrix lhs = E[i] * F[j] - F[j] * E[i];
            Matrix rhs(n, n);
            if (i == j) {
                int d = cd.d(i);
                RationalFunction denom = RationalFunction::v(2 * d) - RationalFunction::v(-2 * d);
                rhs = (K[i] * K[i] - Kinv[i] * Kinv[i]) * denom.inverse();
            }
            rep.checks.push_back({"[e" + idx(i) + ", f" + idx(j) + "]", lhs == rhs});
        }
    for (int i : theta)
        for (int j : theta) {
            if (i == j) continue;
            int nn = 1 - cd.a(i, j);
            for (int which = 0; which < 2; ++which) {
                const auto& X = which == 0 ? E : F;
                std::vector<Matrix> pw{I};
                for (int t = 1; t <= nn; ++t) pw.push_back(pw.back() * X[i]);
                Matrix s(n, n);
                for (int t = 0; t <= nn; ++t) {
                    RationalFunction c(gauss_binomial(nn, t, cd.d(i)));
                    if (t % 2) c = -c;
                    s += pw[nn - t] * X[j] * pw[t] * c;
                }
                std::string g = which == 0 ? "e" : "f";
                rep.checks.push_back({"serre " + g + idx(i) + "," + g + idx(j), s.is_zero()});
            }
        }
    return rep;
}

RelationReport check_serre(const IrrepModule& m) {
    return check_relations(*m.cd, m.theta, m.E, m.F, m.K, m.Kinv);
}

bool check_contravariance(const IrrepModule& m) {
    const Matrix& G = m.gram;
    for (int j = 0; j < m.cd->rank(); ++j) {
        if (!(m.K[j].transpose() * G == G * m.K[j])) return false;
        if (!m.in_theta(j)) continue;
        if (!(m.E[j].transpose() * G == G * m.F[j])) return false;
        if (!(m.F[j].transpose() * G == G * m.E[j])) return false;
    }
    return G == G.transpose();
}

Matrix act_word(const IrrepModule& m, const AlgebraWord& x) {
    return m.act(x);
}

Matrix cartan_monomial_matrix(const IrrepModule& m, const CartanMonomial& c) {
    Vec d(m.dim());
    for (std::size_t b = 0; b < m.dim(); ++b) d[b] = RationalFunction::v(c.v_exponent(*m.cd, m.weights[b]));
    return Matrix::diagonal(d);
}

RationalFunction quantum_dimension(const IrrepModule& m) {
    CartanMonomial c = k2rho(*m.cd);
    std::vector<LaurentPoly::Term> terms;
    for (const auto& w : m.weights) terms.push_back({c.v_exponent(*m.cd, w), Rational(1)});
    return RationalFunction(LaurentPoly::from_terms(std::move(terms)));
}

nlohmann::json sparse_json(const Matrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out.push_back({i, j, m(i, j).to_string()});
    return out;
}

Matrix sparse_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (const auto& e : j) {
        auto r = e.at(0).get<std::size_t>(), c = e.at(1).get<std::size_t>();
        if (r >= rows || c >= cols) throw std::invalid_argument("matrix entry out of range");
        m(r, c) = RationalFunction::parse(e.at(2).get<std::string>());
    }
    return m;
}

nlohmann::json irrep_to_json(const IrrepModule& m) {
    nlohmann::json j;
    j["algebra"] = m.cd->name();
    j["lambda"] = m.lambda;
    j["theta"] = m.theta;
    j["weights"] = m.weights;
    j["parent"] = m.parent;
    j["letter"] = m.letter;
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : m.blocks) blocks.push_back({{"weight", b.weight}, {"start", b.start}, {"size", b.size}});
    j["blocks"] = blocks;
    j["E"] = nlohmann::json::array();
    j["F"] = nlohmann::json::array();
    for (int i = 0; i < m.cd->rank(); ++i) {
        j["E"].push_back(sparse_json(m.E[i]));
        j["F"].push_back(sparse_json(m.F[i]));
    }
    j["gram"] = sparse_json(m.gram);
    return j;
}

IrrepPtr irrep_from_json(const nlohmann::json& j) {
    auto m = std::make_shared<IrrepModule>();
    m->cd = &CartanData::get(j.at("algebra").get<std::string>());
    m->lambda = j.at("lambda").get<Weight>();
    m->theta = j.at("theta").get<Subset>();
    m->weights = j.at("weights").get<std::vector<Weight>>();
    m->parent = j.at("parent").get<std::vector<long>>();
    m->letter = j.at("letter").get<std::vector<int>>();
    for (const auto& b : j.at("blocks"))
        m->blocks.push_back({b.at("weight").get<Weight>(), b.at("start").get<std::size_t>(), b.at("size").get<std::size_t>()});
    const std::size_t n = m->weights.size();
    if (m->parent.size() != n || m->letter.size() != n) throw std::invalid_argument("inconsistent irrep record");
    const int r = m->cd->rank();
    if (static_cast<int>(j.at("E").size()) != r || static_cast<int>(j.at("F").size()) != r)
        throw std::invalid_argument("inconsistent irrep record");
    for (int i = 0; i < r; ++i) {
        m->E.push_back(sparse_from_json(j.at("E")[i], n, n));
        m->F.push_back(sparse_from_json(j.at("F")[i], n, n));
        Vec k(n), ki(n);
        for (std::size_t b = 0; b < n; ++b) {
            int e = m->cd->inner_simple(m->weights.at(b), i);
            k[b] = RationalFunction::v(e);
            ki[b] = RationalFunction::v(-e);
        }
        m->K.push_back(Matrix::diagonal(k));
        m->Kinv.push_back(Matrix::diagonal(ki));
    }
    m->gram = sparse_from_json(j.at("gram"), n, n);
    return m;
}

}  // namespace qbw
