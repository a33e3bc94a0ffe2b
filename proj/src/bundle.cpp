#include "qbw/bundle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace qbw {

using RF = RationalFunction;

namespace {

AlgebraWord letter_word(const Letter& g) {
    return AlgebraWord::word({g});
}

std::vector<Letter> all_generators(const CartanData& cd) {
    std::vector<Letter> out;
    for (int i = 0; i < cd.rank(); ++i)
        for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kinv}) out.push_back({g, i});
    return out;
}

// caches rho_lambda(x) for one x across the keys of a section
class ActionCache {
public:
    ActionCache(const Algebra& alg, AlgebraWord x) : alg_(alg), x_(std::move(x)) {}
    const Matrix& operator()(const Weight& lambda) {
        auto it = m_.find(lambda);
        if (it == m_.end()) it = m_.emplace(lambda, alg_.irrep(lambda)->act(x_)).first;
        return it->second;
    }

private:
    const Algebra& alg_;
    AlgebraWord x_;
    std::map<Weight, Matrix> m_;
};

}  // namespace

// ------------------------------------------------------------------ Section

void Section::add(const CoeffKey& k, const Vec& v, const RF& c) {
    if (qbw::is_zero(v) || c.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(k, Vec(v.size()));
    for (std::size_t r = 0; r < v.size(); ++r) it->second[r] += v[r] * c;
    if (qbw::is_zero(it->second)) terms.erase(it);
}

std::set<Weight> Section::support() const {
    std::set<Weight> s;
    for (const auto& [k, v] : terms) s.insert(k.lambda);
    return s;
}

CoeffElement Section::coordinate(std::size_t r) const {
    CoeffElement out;
    for (const auto& [k, v] : terms) out.add(k, v.at(r));
    return out;
}

Section Section::from_coordinates(IrrepPtr V, const std::vector<CoeffElement>& comps) {
    const std::size_t n = V->dim();
    if (comps.size() != n) throw std::invalid_argument("one coefficient element per basis vector of V expected");
    Section s(std::move(V));
    for (std::size_t r = 0; r < n; ++r) {
        Vec e(n);
        e[r] = RF(1);
        for (const auto& [k, c] : comps[r].terms()) s.add(k, e, c);
    }
    return s;
}

Section& Section::operator+=(const Section& o) {
    if (!V) V = o.V;
    for (const auto& [k, v] : o.terms) add(k, v);
    return *this;
}

Section& Section::operator*=(const RF& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [k, v] : terms)
        for (auto& x : v) x *= c;
    return *this;
}

nlohmann::json Section::to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, v] : terms) {
        nlohmann::json vals = nlohmann::json::array();
        for (const auto& x : v) vals.push_back(x.to_string());
        out.push_back({{"lambda", k.lambda}, {"i", k.i + 1}, {"j", k.j + 1}, {"v", vals}});
    }
    return out;
}

// --------------------------------------------------------------- truncation

std::vector<Weight> dominant_weights_upto(const CartanData& cd, int h) {
    std::vector<Weight> out;
    Weight w = cd.zero();
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
    if (h >= 0) rec(0, h);
    return out;
}

std::vector<Weight> TruncationPolicy::weights(const CartanData& cd) const {
    if (!explicit_weights) {
        if (height < 0) throw std::invalid_argument("truncation height must be >= 0");
        return dominant_weights_upto(cd, height);
    }
    std::vector<Weight> ws = *explicit_weights;
    for (const auto& w : ws)
        if (static_cast<int>(w.size()) != cd.rank() || !cd.is_dominant(w))
            throw std::invalid_argument("truncation weight " + weight_to_string(w) + " is not dominant");
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    return ws;
}

bool TruncationPolicy::contains(const CartanData& cd, const Weight& lambda) const {
    auto ws = weights(cd);
    return std::binary_search(ws.begin(), ws.end(), lambda);
}

nlohmann::json TruncationPolicy::to_json() const {
    if (explicit_weights) return {{"weights", *explicit_weights}};
    return {{"height", height}};
}

// ------------------------------------------------------------------ actions

Section circ_on_section(const Algebra& alg, const AlgebraWord& x, const Section& z) {
    Section out(z.V);
    ActionCache rho(alg, x);
    for (const auto& [k, v] : z.terms) {
        const Matrix& X = rho(k.lambda);
        for (std::size_t l = 0; l < X.rows(); ++l)
            if (!X(l, k.j).is_zero()) out.add({k.lambda, k.i, l}, v, X(l, k.j));
    }
    return out;
}

Section act_on_values(const AlgebraWord& y, const Section& z) {
    Section out(z.V);
    Matrix Y = z.V->act(y);
    for (const auto& [k, v] : z.terms) out.add(k, Y * v);
    return out;
}

bool satisfies_defining_property(const Algebra& alg, const Section& z, const std::vector<Letter>& gens) {
    for (const auto& g : gens) {
        AlgebraWord x = letter_word(g);
        if (circ_on_section(alg, x, z) != act_on_values(antipode(alg.cd(), x), z)) return false;
    }
    return true;
}

Section dot_on_section(const Algebra& alg, const AlgebraWord& x, const Section& z) {
    Section out(z.V);
    ActionCache rho(alg, antipode_inverse(alg.cd(), x));
    for (const auto& [k, v] : z.terms) {
        const Matrix& X = rho(k.lambda);
        for (std::size_t l = 0; l < X.cols(); ++l)
            if (!X(k.i, l).is_zero()) out.add({k.lambda, l, k.j}, v, X(k.i, l));
    }
    return out;
}

// --------------------------------------------------------------- coordinates

namespace {

Matrix flatten_all(const std::vector<const Section*>& family) {
    std::map<CoeffKey, std::size_t> index;
    std::size_t dimV = 0;
    for (const auto* s : family) {
        for (const auto& [k, v] : s->terms) {
            index.try_emplace(k, 0);
            dimV = v.size();
        }
    }
    std::size_t n = 0;
    for (auto& [k, pos] : index) pos = n++;
    Matrix m(n * dimV, family.size());
    for (std::size_t c = 0; c < family.size(); ++c)
        for (const auto& [k, v] : family[c]->terms)
            for (std::size_t r = 0; r < dimV; ++r) m(index[k] * dimV + r, c) = v[r];
    return m;
}

std::vector<const Section*> pointers(const std::vector<Section>& a) {
    std::vector<const Section*> out;
    for (const auto& s : a) out.push_back(&s);
    return out;
}

}  // namespace

Matrix flatten(const std::vector<Section>& family) {
    return flatten_all(pointers(family));
}

std::size_t family_rank(const std::vector<Section>& family) {
    if (family.empty()) return 0;
    return rank(flatten(family));
}

bool same_span(const std::vector<Section>& a, const std::vector<Section>& b) {
    const std::size_t ra = family_rank(a), rb = family_rank(b);
    if (ra != rb) return false;
    auto all = pointers(a);
    for (const auto& s : b) all.push_back(&s);
    if (all.empty()) return true;
    return rank(flatten_all(all)) == ra;
}

std::optional<Matrix> express_in(const std::vector<Section>& basis, const std::vector<Section>& targets) {
    auto all = pointers(basis);
    for (const auto& s : targets) all.push_back(&s);
    Matrix m = flatten_all(all);
    if (basis.empty()) {
        for (const auto& s : targets)
            if (!s.is_zero()) return std::nullopt;
        return Matrix(0, targets.size());
    }
    Matrix a = m.block(0, 0, m.rows(), basis.size());
    Matrix b = m.block(0, basis.size(), m.rows(), targets.size());
    try {
        return solve(a, b);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
}

// ----------------------------------------------------------------- sections

std::vector<Section> sections_from_hom(const Algebra& alg, const IrrepPtr& V, const Weight& lambda, const Matrix& phi) {
    auto m = alg.irrep(lambda);
    const std::size_t d = m->dim();
    if (phi.rows() != V->dim() || phi.cols() != d) throw std::invalid_argument("hom has the wrong shape");
    std::vector<Section> out;
    for (std::size_t i = 0; i < d; ++i) {
        Section z(V);
        for (std::size_t j = 0; j < d; ++j) {
            Vec img = phi.column(j);
            if (is_zero(img)) continue;
            const CoeffElement s = antipode(alg, CoeffElement::t(lambda, j, i));
            for (const auto& [k, c] : s.terms()) z.add(k, img, c);
        }
        out.push_back(std::move(z));
    }
    return out;
}

std::vector<Section> sections_direct(const Algebra& alg, const IrrepPtr& V, const ParabolicData& p,
                                     const Weight& lambda, HomFlavor flavor) {
    const CartanData& cd = alg.cd();
    const Weight dual = dagger(cd, lambda);
    auto m = alg.irrep(dual);
    const std::size_t d = m->dim(), dV = V->dim(), n = d * dV;
    // each row t_a. of T^(dual) decouples: sum_b rho(x)_lb n_b = rho_V(S x) n_l
    EchelonSystem sys(n);
    const Matrix Id = Matrix::identity(d), IdV = Matrix::identity(dV);
    for (const auto& g : p.generators(flavor)) {
        Matrix A = Matrix::kron(m->letter_matrix(g), IdV) - Matrix::kron(Id, V->act(antipode(cd, letter_word(g))));
        for (std::size_t r = 0; r < n; ++r) {
            Vec row = A.row(r);
            if (!is_zero(row)) sys.add(std::move(row));
        }
        if (sys.full()) break;
    }
    Matrix N = sys.kernel();
    std::vector<Section> out;
    for (std::size_t c = 0; c < N.cols(); ++c)
        for (std::size_t a = 0; a < d; ++a) {
            Section z(V);
            for (std::size_t b = 0; b < d; ++b) {
                Vec nb(dV);
                for (std::size_t v = 0; v < dV; ++v) nb[v] = N(b * dV + v, c);
                z.add({dual, a, b}, nb);
            }
            out.push_back(std::move(z));
        }
    return out;
}

// ---------------------------------------------------------------- invariants

std::map<Weight, std::vector<Section>> invariant_functions(const Algebra& alg, const ParabolicData& p,
                                                           const TruncationPolicy& trunc) {
    auto triv = alg.levi(alg.cd().zero(), p.theta);
    std::map<Weight, std::vector<Section>> out;
    for (const auto& lambda : trunc.weights(alg.cd()))
        out[lambda] = sections_direct(alg, triv, p, lambda, HomFlavor::levi);
    return out;
}

bool is_invariant(const Algebra& alg, const CoeffElement& f, const std::vector<Letter>& gens) {
    for (const auto& g : gens) {
        AlgebraWord x = letter_word(g);
        if (circ_action(alg, x, f) != f * counit(x)) return false;
    }
    return true;
}

Section product_closure_check(const Algebra& alg, const ParabolicData& p, const Section& a, const Section& b) {
    if (a.V->dim() != 1 || b.V->dim() != 1) throw std::invalid_argument("invariants have one-dimensional values");
    CoeffElement ab = product(alg, a.coordinate(0), b.coordinate(0));
    if (!is_invariant(alg, ab, p.levi_generators)) throw std::logic_error("product of invariants is not invariant");
    return Section::from_coordinates(a.V, {ab});
}

Section left_multiply(const Algebra& alg, const CoeffElement& a, const Section& z) {
    std::vector<CoeffElement> comps;
    for (std::size_t r = 0; r < z.V->dim(); ++r) comps.push_back(product(alg, a, z.coordinate(r)));
    return Section::from_coordinates(z.V, comps);
}

Section right_multiply(const Algebra& alg, const Section& z, const CoeffElement& a) {
    std::vector<CoeffElement> comps;
    for (std::size_t r = 0; r < z.V->dim(); ++r) comps.push_back(product(alg, z.coordinate(r), a));
    return Section::from_coordinates(z.V, comps);
}

// ------------------------------------------------------------------ coaction

namespace {

void add_vec(std::map<std::pair<CoeffKey, CoeffKey>, Vec>& m, const std::pair<CoeffKey, CoeffKey>& k, const Vec& v,
             const RF& c = RF(1)) {
    auto [it, inserted] = m.try_emplace(k, Vec(v.size()));
    for (std::size_t r = 0; r < v.size(); ++r) it->second[r] += v[r] * c;
    if (is_zero(it->second)) m.erase(it);
}

using Triple = std::map<std::tuple<CoeffKey, CoeffKey, CoeffKey>, Vec>;

void add_vec(Triple& m, const std::tuple<CoeffKey, CoeffKey, CoeffKey>& k, const Vec& v) {
    auto [it, inserted] = m.try_emplace(k, Vec(v.size()));
    for (std::size_t r = 0; r < v.size(); ++r) it->second[r] += v[r];
    if (is_zero(it->second)) m.erase(it);
}

}  // namespace

CoactionImage omega_coaction(const Algebra& alg, const Section& z) {
    CoactionImage out;
    for (const auto& [k, v] : z.terms) {
        const std::size_t d = alg.irrep(k.lambda)->dim();
        for (std::size_t l = 0; l < d; ++l) add_vec(out, {{k.lambda, k.i, l}, {k.lambda, l, k.j}}, v);
    }
    return out;
}

CoactionReport check_coaction(const Algebra& alg, const Section& z, const std::vector<Letter>& gens) {
    CoactionReport rep;
    CoactionImage w = omega_coaction(alg, z);
    // (Delta x id x id) omega against (id x Delta x id) omega
    Triple left, right;
    for (const auto& [kk, v] : w) {
        const auto& [a, b] = kk;
        const std::size_t da = alg.irrep(a.lambda)->dim(), db = alg.irrep(b.lambda)->dim();
        for (std::size_t l = 0; l < da; ++l) add_vec(left, {{a.lambda, a.i, l}, {a.lambda, l, a.j}, b}, v);
        for (std::size_t l = 0; l < db; ++l) add_vec(right, {a, {b.lambda, b.i, l}, {b.lambda, l, b.j}}, v);
    }
    rep.coassociative = left == right;
    Section back(z.V);
    for (const auto& [kk, v] : w)
        if (kk.first.i == kk.first.j) back.add(kk.second, v);
    rep.counit = back == z;
    rep.compatible = true;
    for (const auto& g : gens) {
        AlgebraWord x = letter_word(g);
        ActionCache rho(alg, x);
        Matrix Y = z.V->act(antipode(alg.cd(), x));
        CoactionImage lhs, rhs;
        for (const auto& [kk, v] : w) {
            const auto& [a, b] = kk;
            const Matrix& X = rho(b.lambda);
            for (std::size_t l = 0; l < X.rows(); ++l)
                if (!X(l, b.j).is_zero()) add_vec(lhs, {a, {b.lambda, b.i, l}}, v, X(l, b.j));
            add_vec(rhs, kk, Y * v);
        }
        if (lhs != rhs) rep.compatible = false;
    }
    return rep;
}

// --------------------------------------------------------------- eta, kappa

namespace {

const IrrepModule& full_module(const Section& z) {
    if (!z.V || z.V->is_levi()) throw std::invalid_argument("eta and kappa need a U_q-module W");
    return *z.V;
}

// c[i][j] for the coefficients of W used by eta and kappa
std::vector<std::vector<CoeffElement>> coefficient_table(const Algebra& alg, const Weight& lambda, std::size_t d,
                                                         int antipode_power) {
    std::vector<std::vector<CoeffElement>> c(d, std::vector<CoeffElement>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            CoeffElement t = CoeffElement::t(lambda, i, j);
            for (int s = 0; s < antipode_power; ++s) t = antipode(alg, t);
            c[i][j] = t;
        }
    return c;
}

Section apply_table(const Algebra& alg, const Section& z, const std::vector<std::vector<CoeffElement>>& c,
                    bool table_on_left) {
    const std::size_t d = z.V->dim();
    std::vector<CoeffElement> f(d), out(d);
    for (std::size_t j = 0; j < d; ++j) f[j] = z.coordinate(j);
    for (std::size_t j = 0; j < d; ++j) {
        if (f[j].is_zero()) continue;
        for (std::size_t i = 0; i < d; ++i)
            out[i] += table_on_left ? product(alg, c[i][j], f[j]) : product(alg, f[j], c[i][j]);
    }
    return Section::from_coordinates(z.V, out);
}

}  // namespace

Section eta_map(const Algebra& alg, const Section& z, Direction d) {
    const IrrepModule& W = full_module(z);
    auto c = coefficient_table(alg, W.lambda, W.dim(), d == Direction::forward ? 0 : 1);
    return apply_table(alg, z, c, true);
}

Section kappa_map(const Algebra& alg, const Section& z, Direction d) {
    const IrrepModule& W = full_module(z);
    auto c = coefficient_table(alg, W.lambda, W.dim(), d == Direction::forward ? 2 : 1);
    return apply_table(alg, z, c, false);
}

bool in_invariants_tensor(const Algebra& alg, const Section& z, const std::vector<Letter>& gens) {
    for (std::size_t r = 0; r < z.V->dim(); ++r)
        if (!is_invariant(alg, z.coordinate(r), gens)) return false;
    return true;
}

Section random_section(const Algebra& alg, const IrrepPtr& W, std::mt19937_64& rng, const std::vector<Weight>& support,
                       std::size_t terms) {
    std::vector<CoeffElement> comps;
    for (std::size_t r = 0; r < W->dim(); ++r) comps.push_back(random_coeff(alg, rng, support, terms));
    return Section::from_coordinates(W, comps);
}

// --------------------------------------------------------- Levi complement

LeviComplement levi_complement(const Algebra& alg, const IrrepPtr& V, const ParabolicData& p) {
    const CartanData& cd = alg.cd();
    if (static_cast<int>(V->lambda.size()) != cd.rank()) throw std::invalid_argument("weight of the wrong rank");
    if (!is_theta_dominant(V->lambda, p.theta)) throw std::invalid_argument("not a Levi highest weight");
    LeviComplement out;
    out.W = alg.irrep(dominant_orbit_rep(cd, V->lambda).first);
    out.branching = restrict_levi(alg, *out.W, p);
    bool found = false;
    std::size_t total = 0;
    for (std::size_t s = 0; s < out.branching.summands.size(); ++s) {
        total += out.branching.summands[s].irrep->dim();
        if (!found && out.branching.summands[s].mu == V->lambda) {
            out.summand = s;
            found = true;
        } else {
            out.complement.push_back(s);
        }
    }
    out.certified = found && total == out.W->dim() && (out.branching.Pinv * out.branching.P).is_identity();
    return out;
}

// ------------------------------------------------------------------ reports

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

void Report::add(std::string name, bool pass, nlohmann::json witness) {
    checks.push_back({std::move(name), pass, std::move(witness)});
}

void Report::finish() {
    if (status == Status::inconclusive) return;
    status = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }) ? Status::pass
                                                                                              : Status::fail;
}

nlohmann::json Report::to_json() const {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
        if (!c.witness.is_null()) j["witness"] = c.witness;
        cs.push_back(std::move(j));
    }
    return {{"subject", subject}, {"status", status_name(status)}, {"checks", cs}, {"data", data}};
}

// ---------------------------------------------------------------- Frobenius

SectionMap frobenius_bar(const Algebra& alg, const IrrepModule& W, const IrrepPtr& V, const Matrix& phi) {
    return sections_from_hom(alg, V, W.lambda, phi);
}

Matrix frobenius_f(const SectionMap& psi, std::size_t dimV) {
    Matrix out(dimV, psi.size());
    for (std::size_t j = 0; j < psi.size(); ++j)
        for (const auto& [k, v] : psi[j].terms)
            if (k.i == k.j)
                for (std::size_t r = 0; r < dimV; ++r) out(r, j) += v[r];
    return out;
}

std::optional<Matrix> dot_matrix(const Algebra& alg, const AlgebraWord& x, const std::vector<Section>& family) {
    std::vector<Section> imgs;
    for (const auto& z : family) imgs.push_back(dot_on_section(alg, x, z));
    return express_in(family, imgs);
}

std::vector<SectionMap> module_homs_into_sections(const Algebra& alg, const IrrepModule& W, const IrrepPtr& V,
                                                  const ParabolicData& p, const TruncationPolicy& trunc) {
    const CartanData& cd = alg.cd();
    const std::size_t dW = W.dim();
    std::vector<SectionMap> out;
    for (const auto& lambda : trunc.weights(cd)) {
        auto B = sections_direct(alg, V, p, lambda, HomFlavor::levi);
        if (B.empty()) continue;
        const std::size_t nB = B.size();
        // D(x) C = C rho_W(x) with vec(C) stacked by columns
        EchelonSystem sys(nB * dW);
        for (const auto& g : all_generators(cd)) {
            AlgebraWord x = letter_word(g);
            auto D = dot_matrix(alg, x, B);
            if (!D) throw std::logic_error("graded piece of sections is not a submodule");
            Matrix A = Matrix::kron(Matrix::identity(dW), *D) -
                       Matrix::kron(W.letter_matrix(g).transpose(), Matrix::identity(nB));
            for (std::size_t r = 0; r < A.rows(); ++r) {
                Vec row = A.row(r);
                if (!is_zero(row)) sys.add(std::move(row));
            }
            if (sys.full()) break;
        }
        Matrix K = sys.kernel();
        for (std::size_t c = 0; c < K.cols(); ++c) {
            SectionMap psi;
            for (std::size_t j = 0; j < dW; ++j) {
                Section z(V);
                for (std::size_t i = 0; i < nB; ++i)
                    if (!K(j * nB + i, c).is_zero()) z += B[i] * K(j * nB + i, c);
                psi.push_back(std::move(z));
            }
            out.push_back(std::move(psi));
        }
    }
    return out;
}

namespace {

bool intertwines_dot(const Algebra& alg, const IrrepModule& W, const SectionMap& psi) {
    for (const auto& g : all_generators(alg.cd())) {
        AlgebraWord x = letter_word(g);
        const Matrix& X = W.letter_matrix(g);
        for (std::size_t j = 0; j < psi.size(); ++j) {
            Section expect(psi[j].V);
            for (std::size_t k = 0; k < psi.size(); ++k)
                if (!X(k, j).is_zero()) expect += psi[k] * X(k, j);
            if (dot_on_section(alg, x, psi[j]) != expect) return false;
        }
    }
    return true;
}

}  // namespace

Report frobenius_maps(const Algebra& alg, const IrrepModule& W, const IrrepPtr& V, const ParabolicData& p,
                      const TruncationPolicy& trunc) {
    Report rep;
    rep.subject = "frobenius W" + weight_to_string(W.lambda) + " V" + weight_to_string(V->lambda);
    auto levi_homs = hom_space(W, V, p, HomFlavor::levi);
    bool fbar_ok = true, ffbar_ok = true;
    for (const auto& phi : levi_homs.maps) {
        SectionMap psi = frobenius_bar(alg, W, V, phi);
        for (const auto& z : psi)
            if (!satisfies_defining_property(alg, z, p.levi_generators)) fbar_ok = false;
        if (!intertwines_dot(alg, W, psi)) fbar_ok = false;
        if (frobenius_f(psi, V->dim()) != phi) ffbar_ok = false;
    }
    rep.add("fbar_is_intertwiner_into_sections", fbar_ok);
    rep.add("f_after_fbar_is_identity", ffbar_ok);
    rep.data = {{"W", W.lambda}, {"V", V->lambda}, {"theta", p.theta}, {"trunc", trunc.to_json()},
                {"dim_levi_hom", levi_homs.dim()}};
    if (!trunc.contains(alg.cd(), W.lambda)) {
        rep.status = Status::inconclusive;
        rep.data["reason"] = "truncation does not contain the highest weight of W";
        return rep;
    }
    auto homs = module_homs_into_sections(alg, W, V, p, trunc);
    rep.data["dim_module_hom"] = homs.size();
    rep.add("dimensions_agree", homs.size() == levi_homs.dim(),
            {{"levi", levi_homs.dim()}, {"module", homs.size()}});
    bool back_ok = true;
    for (const auto& psi : homs) {
        Matrix phi = frobenius_f(psi, V->dim());
        if (!is_intertwiner(W, *V, phi, p, HomFlavor::levi) || frobenius_bar(alg, W, V, phi) != psi) back_ok = false;
    }
    rep.add("fbar_after_f_is_identity", back_ok);
    rep.finish();
    return rep;
}

// --------------------------------------------------------------- Borel-Weil

std::map<Weight, std::vector<Section>> holomorphic_sections(const Algebra& alg, const IrrepPtr& V,
                                                            const ParabolicData& p, const TruncationPolicy& trunc) {
    std::map<Weight, std::vector<Section>> out;
    for (const auto& lambda : trunc.weights(alg.cd()))
        out[lambda] = sections_direct(alg, V, p, lambda, HomFlavor::parabolic);
    return out;
}

namespace {

nlohmann::json dimension_table(const std::map<Weight, std::vector<Section>>& pieces) {
    nlohmann::json t = nlohmann::json::array();
    for (const auto& [l, b] : pieces) t.push_back({{"lambda", l}, {"dim", b.size()}});
    return t;
}

// (S (x) id) P delta followed by id (x) phi, step by step
std::vector<Section> composite_family(const Algebra& alg, const IrrepPtr& V, const Weight& nu, const Matrix& phi) {
    const std::size_t d = alg.irrep(nu)->dim();
    std::vector<Section> out;
    for (std::size_t i = 0; i < d; ++i) {
        // delta(w_i) = sum_j w_j (x) t_ji, flipped
        std::vector<std::pair<CoeffElement, std::size_t>> flipped;
        for (std::size_t j = 0; j < d; ++j) flipped.emplace_back(CoeffElement::t(nu, j, i), j);
        Section z(V);
        for (auto& [f, j] : flipped) {
            CoeffElement sf = antipode(alg, f);
            for (const auto& [k, c] : sf.terms()) z.add(k, phi.column(j), c);
        }
        out.push_back(std::move(z));
    }
    return out;
}

}  // namespace

Report borel_weil_check(const Algebra& alg, const IrrepPtr& V, const ParabolicData& p, const TruncationPolicy& trunc) {
    const CartanData& cd = alg.cd();
    Report rep;
    rep.subject = "borel-weil mu" + weight_to_string(V->lambda);
    const Weight mu_tilde = levi_lowest_weight(cd, V->lambda, p.theta);
    const Weight neg = -mu_tilde;
    const bool dominant = cd.is_dominant(neg);
    rep.data = {{"mu", V->lambda}, {"theta", p.theta}, {"mu_tilde", mu_tilde}, {"trunc", trunc.to_json()}};
    Weight nu;
    if (dominant) {
        nu = dagger(cd, neg);
        rep.data["nu"] = nu;
        rep.data["support_bound"] = "only lambda with lowest weight equal to mu_tilde contribute; that is lambda = nu";
        if (!trunc.contains(cd, nu)) {
            rep.status = Status::inconclusive;
            rep.data["reason"] = "truncation does not contain nu";
            return rep;
        }
    } else {
        rep.data["nu"] = nullptr;
        rep.data["support_bound"] = "-mu_tilde is not dominant, so no lambda contributes";
    }
    auto pieces = holomorphic_sections(alg, V, p, trunc);
    rep.data["pieces"] = dimension_table(pieces);
    std::size_t total = 0;
    std::set<Weight> support;
    bool per_piece = true;
    for (const auto& [l, b] : pieces) {
        total += b.size();
        if (!b.empty()) support.insert(l);
        const long d = alg.irrep(l)->dim();
        if (static_cast<long>(b.size()) != d * predicted_parabolic_dim(cd, l, V->lambda, p.theta)) per_piece = false;
    }
    const long expected = dominant ? weyl_dim(cd, nu) : 0;
    rep.data["dim"] = total;
    rep.add("dimension", static_cast<long>(total) == expected, {{"found", total}, {"expected", expected}});
    rep.add("support", dominant ? support == std::set<Weight>{nu} : support.empty());
    rep.add("pieces_match_hom_criterion", per_piece);
    bool defining = true;
    for (const auto& [l, b] : pieces)
        for (const auto& z : b)
            if (!satisfies_defining_property(alg, z, p.parabolic_generators)) defining = false;
    rep.add("defining_property", defining);
    if (dominant && total > 0) {
        auto h = hom_space(*alg.irrep(nu), V, p, HomFlavor::parabolic);
        rep.add("hom_dimension_one", h.dim() == 1, {{"dim", h.dim()}});
        if (h.dim() == 1) {
            auto family = sections_from_hom(alg, V, nu, h.maps[0]);
            const auto& basis = pieces.at(nu);
            rep.add("irrep_family_spans", same_span(family, basis) && family_rank(family) == family.size());
            bool action = true;
            auto W = alg.irrep(nu);
            for (const auto& g : all_generators(cd)) {
                auto D = dot_matrix(alg, letter_word(g), family);
                if (!D || *D != W->letter_matrix(g)) action = false;
            }
            rep.add("dot_action_is_t_nu", action);
            auto comp = composite_family(alg, V, nu, h.maps[0]);
            rep.add("composite_map_reproduces_family", comp == family && same_span(comp, basis));
        }
    }
    if (V->dim() == 1 && V->lambda == cd.zero()) {
        bool constant = total == 1 && pieces.count(cd.zero()) && pieces.at(cd.zero()).size() == 1;
        if (constant) {
            const auto& z = pieces.at(cd.zero())[0];
            constant = z.terms.size() == 1 && z.terms.begin()->first.lambda == cd.zero();
        }
        rep.add("trivial_bundle_is_constants", constant);
    }
    rep.finish();
    return rep;
}

Report full_module_check(const Algebra& alg, const IrrepPtr& W, const ParabolicData& p, const TruncationPolicy& trunc) {
    const CartanData& cd = alg.cd();
    if (W->is_levi()) throw std::invalid_argument("full module expected");
    Report rep;
    rep.subject = "full module W" + weight_to_string(W->lambda);
    rep.data = {{"W", W->lambda}, {"theta", p.theta}, {"trunc", trunc.to_json()}};
    if (!trunc.contains(cd, W->lambda)) {
        rep.status = Status::inconclusive;
        rep.data["reason"] = "truncation does not contain the highest weight of W";
        return rep;
    }
    auto pieces = holomorphic_sections(alg, W, p, trunc);
    rep.data["pieces"] = dimension_table(pieces);
    std::vector<Section> all;
    for (const auto& [l, b] : pieces) all.insert(all.end(), b.begin(), b.end());
    rep.add("dimension", all.size() == W->dim(), {{"found", all.size()}, {"expected", W->dim()}});
    std::vector<Section> images;
    bool constant = true;
    for (const auto& z : all) {
        Section e = eta_map(alg, z, Direction::forward);
        for (const auto& [k, v] : e.terms)
            if (k.lambda != cd.zero()) constant = false;
        images.push_back(std::move(e));
    }
    rep.add("eta_image_is_constants_tensor_W", constant && family_rank(images) == W->dim());
    rep.finish();
    return rep;
}

}  // namespace qbw
