#include "qbw/verify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>

namespace qbw {

namespace {

using json = nlohmann::json;
using AW = AlgebraWord;

const std::vector<std::string> kSuites{"relations",    "dimensions", "hopf",     "schur",       "positivity",
                                       "hom",          "invariants", "projectivity", "frobenius", "borel_weil",
                                       "determinism"};
const std::vector<std::string> kAlgebras{"A1", "A2", "A3", "B2"};

// element-level coassociativity is quartic in the dimension
constexpr std::size_t kCoassocDim = 40;
// antipode laws through the product need CG of W(lambda-dagger) (x) W(lambda)
constexpr std::size_t kProductAntipodeDim = 8;

std::string label(const CartanData& cd, const Weight& w) {
    return cd.name() + " " + weight_to_string(w);
}

std::string theta_label(const Subset& th) {
    std::string s = "{";
    for (std::size_t k = 0; k < th.size(); ++k) s += (k ? "," : "") + std::to_string(th[k] + 1);
    return s + "}";
}

Report named(std::string subject) {
    Report r;
    r.subject = std::move(subject);
    return r;
}

int coord_sum(const Weight& w) {
    int s = 0;
    for (int x : w) s += x;
    return s;
}

std::vector<Subset> all_thetas(const CartanData& cd) {
    std::vector<Subset> out;
    for (int mask = 0; mask < (1 << cd.rank()); ++mask) {
        Subset th;
        for (int i = 0; i < cd.rank(); ++i)
            if (mask & (1 << i)) th.push_back(i);
        out.push_back(std::move(th));
    }
    return out;
}

std::vector<Letter> letters(const CartanData& cd) {
    std::vector<Letter> out;
    for (int i = 0; i < cd.rank(); ++i)
        for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::Kinv}) out.push_back({g, i});
    return out;
}

std::vector<Weight> fundamentals(const CartanData& cd) {
    std::vector<Weight> out;
    for (int i = 0; i < cd.rank(); ++i) {
        Weight w = cd.zero();
        w[i] = 1;
        out.push_back(w);
    }
    return out;
}

// integral weights with every coordinate in [lo, hi], lexicographic
std::vector<Weight> box(const CartanData& cd, int lo, int hi) {
    std::vector<Weight> out;
    Weight w(cd.rank(), lo);
    while (true) {
        out.push_back(w);
        int k = cd.rank() - 1;
        while (k >= 0 && w[k] == hi) w[k--] = lo;
        if (k < 0) break;
        ++w[k];
    }
    return out;
}

std::vector<int> all_indices(const CartanData& cd) {
    std::vector<int> out;
    for (int i = 0; i < cd.rank(); ++i) out.push_back(i);
    return out;
}

int cap(int h, const VerifyOptions& opt) {
    return opt.max_weight ? std::min(h, *opt.max_weight) : h;
}

std::vector<std::string> selected_algebras(const VerifyOptions& opt) {
    return opt.algebras.empty() ? kAlgebras : opt.algebras;
}

bool selected(const VerifyOptions& opt, const std::string& name) {
    auto a = selected_algebras(opt);
    return std::find(a.begin(), a.end(), name) != a.end();
}

// ------------------------------------------------------------ relations

Report suite_relations(Workspace& ws, const VerifyOptions& opt) {
    Report r = named("relations");
    std::size_t n = 0;
    for (const auto& name : selected_algebras(opt)) {
        const Algebra& A = ws.get(name);
        for (const auto& l : irrep_grid(A.cd(), opt.max_weight)) {
            auto rep = check_serre(*A.irrep(l));
            r.add(label(A.cd(), l), rep.all_pass(), rep.all_pass() ? json() : json(rep.failures()));
            ++n;
        }
    }
    r.data["irreps"] = n;
    r.finish();
    return r;
}

// ----------------------------------------------------------- dimensions

Report suite_dimensions(Workspace& ws, const VerifyOptions& opt) {
    Report r = named("dimensions");
    for (const auto& name : selected_algebras(opt)) {
        const Algebra& A = ws.get(name);
        const CartanData& cd = A.cd();
        for (const auto& l : irrep_grid(cd, opt.max_weight)) {
            auto m = A.irrep(l);
            const long weyl = weyl_dim(cd, l);
            r.add(label(cd, l) + " weyl_dim", static_cast<long>(m->dim()) == weyl,
                  json{{"dim", m->dim()}, {"weyl_dim", weyl}});
            Character ch;
            for (const auto& w : m->weights) ch[w] += 1;
            const bool same = ch == freudenthal_character(cd, l);
            r.add(label(cd, l) + " multiplicities", same, same ? json() : json{{"weights", ch.size()}});
        }
    }
    r.finish();
    return r;
}

// ----------------------------------------------------------------- hopf

using Triple = std::tuple<CoeffKey, CoeffKey, CoeffKey>;

bool coassociative(const Algebra& A, const Weight& l, std::size_t d) {
    // Delta of every t_ik once
    std::vector<CoeffTensor> delta(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) delta[i * d + k] = coproduct(A, CoeffElement::t(l, i, k));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::map<Triple, RationalFunction> left, right;
            for (const auto& [p, c] : delta[i * d + j]) {
                for (const auto& [p1, c1] : delta[p.first.i * d + p.first.j])
                    left[{p1.first, p1.second, p.second}] += c * c1;
                for (const auto& [p2, c2] : delta[p.second.i * d + p.second.j])
                    right[{p.first, p2.first, p2.second}] += c * c2;
            }
            if (left != right) return false;
        }
    return true;
}

bool counit_laws(const Algebra& A, const Weight& l, std::size_t d) {
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto t = CoeffElement::t(l, i, j);
            if (counit(t) != RationalFunction(i == j ? 1 : 0)) return false;
            CoeffElement left, right;
            for (const auto& [p, c] : coproduct(A, t)) {
                left += CoeffElement::t(p.second.lambda, p.second.i, p.second.j, c * counit(CoeffElement::t(p.first.lambda, p.first.i, p.first.j)));
                right += CoeffElement::t(p.first.lambda, p.first.i, p.first.j, c * counit(CoeffElement::t(p.second.lambda, p.second.i, p.second.j)));
            }
            if (left != t || right != t) return false;
        }
    return true;
}

// <S t_ij, x> = <t_ij, S x> through the dual intertwiner, for every letter
bool antipode_intertwiner(const Algebra& A, const IrrepModule& m) {
    auto di = dual_intertwiner(A, m.lambda);
    auto dual = A.irrep(di->dual);
    for (const auto& g : letters(*m.cd)) {
        AW x = AW::word({g});
        if (m.act(antipode(*m.cd, x)).transpose() != di->J * dual->act(x) * di->Jinv) return false;
    }
    return true;
}

// sum rho(S x1) rho(x2) = eps(x) = sum rho(x1) rho(S x2) on words of length <= 2
bool antipode_laws_pairing(const IrrepModule& m) {
    const CartanData& cd = *m.cd;
    const Matrix I = Matrix::identity(m.dim());
    for (const auto& w : all_words(all_indices(cd), 2)) {
        AW x = AW::word(w);
        Matrix left(m.dim(), m.dim()), right(m.dim(), m.dim());
        for (const auto& [p, c] : coproduct(x)) {
            AW a = AW::word(p.first), b = AW::word(p.second);
            left += m.act(antipode(cd, a)) * m.act(b) * c;
            right += m.act(a) * m.act(antipode(cd, b)) * c;
        }
        Matrix expect = I * counit(x);
        if (left != expect || right != expect) return false;
    }
    return true;
}

// m(S (x) id) Delta = eps = m(id (x) S) Delta through the product of T_q
bool antipode_laws_product(const Algebra& A, const Weight& l, std::size_t d) {
    const auto one = CoeffElement::unit(A.cd());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            CoeffElement left, right;
            for (std::size_t k = 0; k < d; ++k) {
                left += product(A, antipode(A, CoeffElement::t(l, i, k)), CoeffElement::t(l, k, j));
                right += product(A, CoeffElement::t(l, i, k), antipode(A, CoeffElement::t(l, k, j)));
            }
            const auto expect = i == j ? one : CoeffElement();
            if (left != expect || right != expect) return false;
        }
    return true;
}

// <ab, x> = <a (x) b, Delta x> on all words of length <= 3
json duality_failures(const Algebra& A, const CoeffElement& a, const CoeffElement& b) {
    json bad = json::array();
    const auto ab = product(A, a, b);
    for (const auto& w : all_words(all_indices(A.cd()), 3)) {
        AW x = AW::word(w);
        RationalFunction rhs;
        for (const auto& [p, c] : coproduct(x))
            rhs += c * coeff_eval(A, a, AW::word(p.first)) * coeff_eval(A, b, AW::word(p.second));
        if (coeff_eval(A, ab, x) != rhs) bad.push_back(word_to_string(w));
    }
    return bad;
}

Report suite_hopf(Workspace& ws, const VerifyOptions& opt) {
    Report r = named("hopf");
    std::size_t words = 0;
    for (const auto& name : selected_algebras(opt)) {
        const Algebra& A = ws.get(name);
        const CartanData& cd = A.cd();
        for (const auto& l : irrep_grid(cd, opt.max_weight)) {
            auto m = A.irrep(l);
            const std::size_t d = m->dim();
            const std::string at = label(cd, l);
            r.add(at + " counit", counit_laws(A, l, d));
            if (d <= kCoassocDim) r.add(at + " coassociativity", coassociative(A, l, d));
            r.add(at + " antipode_pairing", antipode_intertwiner(A, *m));
            r.add(at + " antipode_laws_pairing", antipode_laws_pairing(*m));
            if (d <= kProductAntipodeDim) r.add(at + " antipode_laws_product", antipode_laws_product(A, l, d));
        }
        // duality on random elements and on pairs of single coefficients
        std::mt19937_64 rng(opt.seed + 31 * cd.rank() + cd.name()[0]);
        std::vector<Weight> sup{cd.zero()};
        for (const auto& w : fundamentals(cd)) sup.push_back(w);
        std::vector<std::pair<CoeffElement, CoeffElement>> pairs;
        for (int k = 0; k < 2; ++k) pairs.emplace_back(random_coeff(A, rng, sup, 3), random_coeff(A, rng, sup, 3));
        const Weight w1 = fundamentals(cd).front(), w2 = fundamentals(cd).back();
        pairs.emplace_back(CoeffElement::t(w1, 0, 1), CoeffElement::t(w2, 1, 0));
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            json bad = duality_failures(A, pairs[k].first, pairs[k].second);
            r.add(cd.name() + " duality " + std::to_string(k + 1), bad.empty(), bad.empty() ? json() : bad);
        }
        words += all_words(all_indices(cd), 3).size();
    }
    r.data["coassociativity_max_dim"] = kCoassocDim;
    r.data["product_antipode_max_dim"] = kProductAntipodeDim;
    r.data["duality_words"] = words;
    r.finish();
    return r;
}

// ---------------------------------------------------------------- schur

Report suite_schur(Workspace& ws, const VerifyOptions& opt) {
    Report r = named("schur");
    json table = json::array();
    std::vector<std::pair<std::string, std::vector<Weight>>> grids;
    if (selected(opt, "A1")) {
        std::vector<Weight> ws1;
        for (int n = 0; n <= cap(3, opt); ++n) ws1.push_back({n});
        grids.emplace_back("A1", ws1);
    }
    if (selected(opt, "A2") && cap(1, opt) >= 1) grids.push_back({"A2", {{1, 0}, {0, 1}}});
    for (const auto& [name, grid] : grids) {
        const Algebra& A = ws.get(name);
        for (const auto& l : grid)
            for (const auto& mu : grid)
                for (auto var : {SchurVariant::t_ttilde, SchurVariant::ttilde_t}) {
                    const char* vname = var == SchurVariant::t_ttilde ? "t_ttilde" : "ttilde_t";
                    const std::size_t dl = A.irrep(l)->dim(), dm = A.irrep(mu)->dim();
                    std::size_t count = 0;
                    json bad = json::array();
                    for (std::size_t i = 0; i < dl; ++i)
                        for (std::size_t j = 0; j < dl; ++j)
                            for (std::size_t a = 0; a < dm; ++a)
                                for (std::size_t b = 0; b < dm; ++b) {
                                    auto got = schur_by_cg(A, var, l, i, j, a, b, mu);
                                    auto want = schur_pair(A, var, l, i, j, a, b, mu);
                                    ++count;
                                    json idx{i + 1, j + 1, a + 1, b + 1};
                                    if (got != want)
                                        bad.push_back({{"index", idx}, {"cg", got.to_string()}, {"closed_form", want.to_string()}});
                                    if (opt.detail && !got.is_zero())
                                        table.push_back({{"algebra", name}, {"lambda", l}, {"mu", mu}, {"variant", vname},
                                                         {"index", idx}, {"value", got.to_string()}});
                                }
                    r.add(name + " " + weight_to_string(l) + " x " + weight_to_string(mu) + " " + vname, bad.empty(),
                          bad.empty() ? json{{"entries", count}} : json{{"entries", count}, {"mismatches", bad}});
                }
    }
    // S^2(x) = K_2rho x K_2rho^-1 on every grid irrep
    for (const auto& name : selected_algebras(opt)) {
        const Algebra& A = ws.get(name);
        const CartanData& cd = A.cd();
        const CartanMonomial K = k2rho(cd);
        CartanMonomial Kinv = K;
        for (auto& c : Kinv.c) c = -c;
        for (const auto& l : irrep_grid(cd, opt.max_weight)) {
            auto m = A.irrep(l);
            const Matrix Km = cartan_monomial_matrix(*m, K), Kim = cartan_monomial_matrix(*m, Kinv);
            bool ok = true;
            for (const auto& g : letters(cd)) {
                AW x = AW::word({g});
                if (m->act(antipode(cd, antipode(cd, x))) != Km * m->act(x) * Kim) ok = false;
            }
            r.add(label(cd, l) + " antipode_squared", ok);
        }
    }
    if (opt.detail) r.data["table"] = std::move(table);
    r.finish();
    return r;
}

// ----------------------------------------------------------- positivity

Report suite_positivity(Workspace& ws, const VerifyOptions& opt) {
    Report r = named("positivity");
    r.data["v0"] = rational_to_string(opt.v0);
    for (const auto& name : selected_algebras(opt)) {
        const Algebra& A = ws.get(name);
        const CartanData& cd = A.cd();
        std::mt19937_64 rng(opt.seed + 101 * cd.rank() + cd.name()[0]);
        std::vector<Weight> sup{cd.zero()};
        for (const auto& w : fundamentals(cd)) sup.push_back(w);
        if (cd.rank() == 1) sup.push_back({2});
        const auto zero = haar_positivity(A, CoeffElement(), opt.v0);
        r.add(name + " zero element", zero.flavor == NumericFlavor::exact && zero.exact == 0);
        std::size_t positive = 0;
        json bad = json::array();
        std::optional<NumericValue> least;
        for (int k = 0; k < 50; ++k) {
            auto a = random_coeff(A, rng, sup, 4);
            auto val = haar_positivity(A, a, opt.v0);
            const bool pos = val.flavor == NumericFlavor::exact ? val.exact > 0 : val.approx > 0;
            if (a.is_zero() || !pos)
                bad.push_back({{"element", a.to_string()}, {"value", val.to_string()}});
            else
                ++positive;
            if (val.flavor == NumericFlavor::exact && (!least || val.exact < least->exact)) least = val;
        }
        r.add(name + " 50 samples", bad.empty(), bad.empty() ? json{{"positive", positive}} : json{{"failures", bad}});
        if (least) r.data["min_" + name] = least->to_string();
    }
    r.finish();
    return r;
}

// ------------------------------------------------------------------ hom

int hom_height(const CartanData& cd) {
    return cd.rank() == 1 ? 5 : cd.name() == "A2" ? 2 : 1;
}

Report suite_hom(Workspace& ws, const VerifyOptions& opt) {
    Report r = named("hom");
    std::size_t cases = 0, nonzero = 0;
    for (const auto& name : selected_algebras(opt)) {
        const Algebra& A = ws.get(name);
        const CartanData& cd = A.cd();
        const int h = cap(hom_height(cd), opt);
        const int b = h + 1;
        for (const auto& th : all_thetas(cd)) {
            ParabolicData p(cd, th);
            for (const auto& l : dominant_weights_upto(cd, h)) {
                auto m = A.irrep(l);
                json bad = json::array();
                for (const auto& mu : box(cd, -b, b)) {
                    if (!is_theta_dominant(mu, th)) continue;
                    const long got = static_cast<long>(hom_space(*m, A.levi(mu, th), p, HomFlavor::parabolic).dim());
                    const long want = predicted_parabolic_dim(cd, l, mu, th);
                    ++cases;
                    nonzero += got != 0;
                    if (got != want) bad.push_back({{"mu", mu}, {"dim", got}, {"predicted", want}});
                }
                r.add(label(cd, l) + " theta=" + theta_label(th), bad.empty(), bad.empty() ? json() : bad);
            }
        }
    }
    r.data["pairs"] = cases;
    r.data["nonzero"] = nonzero;
    r.finish();
    return r;
}

// ----------------------------------------------------------- invariants

Report suite_invariants(Workspace& ws, const VerifyOptions& opt) {
    Report r = named("invariants");
    for (const auto& name : selected_algebras(opt)) {
        const Algebra& A = ws.get(name);
        const CartanData& cd = A.cd();
        const Weight gamma = cd.root_to_weight(cd.highest_root());
        const long dg = weyl_dim(cd, gamma);
        for (const auto& th : all_thetas(cd)) {
            ParabolicData p(cd, th);
            const std::string at = cd.name() + " theta=" + theta_label(th);
            const long expect = cd.rank() - static_cast<long>(th.size());
            const long count = central_hom_count(A, p);
            r.add(at + " central_hom_count", count == expect, json{{"count", count}, {"expected", expect}});
            if (opt.max_weight && coord_sum(gamma) > *opt.max_weight) continue;
            auto pieces = invariant_functions(A, p, TruncationPolicy::only({cd.zero(), gamma}));
            const auto& g = pieces.at(gamma);
            r.add(at + " gamma_piece_dim", static_cast<long>(g.size()) == dg * expect,
                  json{{"dim", g.size()}, {"expected", dg * expect}});
            // products of invariants stay invariant
            std::vector<Section> sample = pieces.at(cd.zero());
            for (std::size_t k = 0; k < std::min<std::size_t>(2, g.size()); ++k) sample.push_back(g[k]);
            bool closed = true;
            json witness;
            for (std::size_t a = 0; a < sample.size(); ++a)
                for (std::size_t c = a; c < sample.size(); ++c) {
                    try {
                        product_closure_check(A, p, sample[a], sample[c]);
                    } catch (const std::logic_error& e) {
                        closed = false;
                        witness = e.what();
                    }
                }
            r.add(at + " product_closure", closed, witness);
        }
    }
    r.finish();
    return r;
}

// --------------------------------------------------------- projectivity

struct BundleCase {
    std::string algebra;
    Subset theta;
    Weight w;
    int trunc;
};

std::vector<BundleCase> projectivity_cases() {
    return {{"A1", {}, {1}, 2}, {"A2", {0}, {1, 0}, 2}, {"A2", {}, {0, 1}, 1}, {"A3", {0, 2}, {1, 0, 0}, 1},
            {"B2", {1}, {0, 1}, 1}};
}

Report suite_projectivity(Workspace& ws, const VerifyOptions& opt) {
    Report r = named("projectivity");
    std::size_t samples = 0;
    for (const auto& c : projectivity_cases()) {
        if (!selected(opt, c.algebra)) continue;
        const Algebra& A = ws.get(c.algebra);
        const CartanData& cd = A.cd();
        ParabolicData p(cd, c.theta);
        auto W = A.irrep(c.w);
        const std::string at = label(cd, c.w) + " theta=" + theta_label(c.theta);
        std::mt19937_64 rng(opt.seed + 7 * cd.rank() + c.theta.size() + cd.name()[0]);
        std::vector<Weight> sup{cd.zero()};
        for (const auto& w : fundamentals(cd)) sup.push_back(w);
        bool trips = true;
        for (int n = 0; n < 20; ++n, ++samples) {
            Section s = random_section(A, W, rng, sup, 3);
            trips = trips && eta_map(A, eta_map(A, s, Direction::inverse), Direction::forward) == s &&
                    eta_map(A, eta_map(A, s, Direction::forward), Direction::inverse) == s &&
                    kappa_map(A, kappa_map(A, s, Direction::inverse), Direction::forward) == s &&
                    kappa_map(A, kappa_map(A, s, Direction::forward), Direction::inverse) == s;
        }
        r.add(at + " round_trips", trips, json{{"samples", 20}});
        // F_q(W) lands in E_q (x) W and comes back
        bool into = true;
        std::size_t sections = 0;
        for (const auto& l : dominant_weights_upto(cd, c.trunc))
            for (const auto& z : sections_direct(A, W, p, l, HomFlavor::levi)) {
                ++sections;
                Section e = eta_map(A, z, Direction::forward), k = kappa_map(A, z, Direction::forward);
                into = into && in_invariants_tensor(A, e, p.levi_generators) &&
                       in_invariants_tensor(A, k, p.levi_generators) && eta_map(A, e, Direction::inverse) == z &&
                       kappa_map(A, k, Direction::inverse) == z;
            }
        r.add(at + " sections_to_invariants", into, json{{"sections", sections}});
        bool back = true;
        std::size_t invs = 0;
        for (const auto& [l, fs] : invariant_functions(A, p, TruncationPolicy::up_to(c.trunc)))
            for (const auto& f : fs)
                for (std::size_t j = 0; j < W->dim(); ++j) {
                    std::vector<CoeffElement> comps(W->dim());
                    comps[j] = f.coordinate(0);
                    Section fw = Section::from_coordinates(W, comps);
                    ++invs;
                    back = back && satisfies_defining_property(A, eta_map(A, fw, Direction::inverse), p.levi_generators) &&
                           satisfies_defining_property(A, kappa_map(A, fw, Direction::inverse), p.levi_generators);
                }
        r.add(at + " invariants_to_sections", back, json{{"elements", invs}});
        // V + V-perp = W for the Levi irreps of small weight
        for (const auto& mu : box(cd, -1, 1)) {
            if (!is_theta_dominant(mu, c.theta)) continue;
            auto V = A.levi(mu, c.theta);
            auto lc = levi_complement(A, V, p);
            std::size_t total = V->dim();
            for (auto k : lc.complement) total += lc.branching.summands[k].irrep->dim();
            const bool ok = lc.certified && lc.branching.summands[lc.summand].mu == mu && total == lc.W->dim();
            r.add(cd.name() + " theta=" + theta_label(c.theta) + " levi_complement " + weight_to_string(mu), ok,
                  json{{"W", lc.W->lambda}, {"dim_W", lc.W->dim()}, {"complement", lc.complement.size()}});
        }
    }
    r.data["samples"] = samples;
    r.finish();
    return r;
}

// ------------------------------------------------------------ frobenius

Report suite_frobenius(Workspace& ws, const VerifyOptions& opt) {
    Report r = named("frobenius");
    struct Case {
        std::string algebra;
        Subset theta;
        std::vector<Weight> modules;
        int lo, hi, trunc;
    };
    const std::vector<Case> cases{{"A1", {}, {{0}, {1}, {2}, {3}}, -3, 3, 4},
                                  {"A2", {0}, {{1, 0}, {0, 1}, {1, 1}}, -1, 1, 2},
                                  {"A2", {}, {{1, 0}}, -1, 1, 1},
                                  {"B2", {1}, {{1, 0}, {0, 1}}, -1, 1, 1}};
    std::size_t maps = 0;
    for (const auto& c : cases) {
        if (!selected(opt, c.algebra)) continue;
        const Algebra& A = ws.get(c.algebra);
        const CartanData& cd = A.cd();
        ParabolicData p(cd, c.theta);
        for (const auto& wl : c.modules) {
            if (opt.max_weight && coord_sum(wl) > *opt.max_weight) continue;
            for (const auto& mu : box(cd, c.lo, c.hi)) {
                if (!is_theta_dominant(mu, c.theta)) continue;
                auto rep = frobenius_maps(A, *A.irrep(wl), A.levi(mu, c.theta), p, TruncationPolicy::up_to(c.trunc));
                maps += rep.data.value("dim_module_hom", 0);
                r.add(label(cd, wl) + " -> " + weight_to_string(mu) + " theta=" + theta_label(c.theta),
                      rep.status == Status::pass, rep.status == Status::pass ? json(rep.data) : rep.to_json());
            }
        }
    }
    r.data["intertwiners"] = maps;
    r.finish();
    return r;
}

// ----------------------------------------------------------- borel_weil

long expected_bw_dim(const CartanData& cd, const Weight& mu, const Subset& th) {
    const Weight m = -levi_lowest_weight(cd, mu, th);
    for (int x : m)
        if (x < 0) return 0;
    return weyl_dim(cd, dagger(cd, m));
}

Report suite_borel_weil(Workspace& ws, const VerifyOptions& opt) {
    Report r = named("borel_weil");
    struct Case {
        std::string algebra;
        Subset theta;
        int lo, hi, trunc;
    };
    const std::vector<Case> cases{{"A1", {}, -5, 5, 6}, {"A2", {}, -1, 1, 2}, {"A2", {0}, -2, 1, 2}};
    for (const auto& c : cases) {
        if (!selected(opt, c.algebra)) continue;
        const Algebra& A = ws.get(c.algebra);
        const CartanData& cd = A.cd();
        ParabolicData p(cd, c.theta);
        const int trunc = cap(c.trunc, opt);
        for (const auto& mu : box(cd, c.lo, c.hi)) {
            if (!is_theta_dominant(mu, c.theta)) continue;
            const long want = expected_bw_dim(cd, mu, c.theta);
            if (want > 0 && coord_sum(dagger(cd, -levi_lowest_weight(cd, mu, c.theta))) > trunc) continue;
            auto rep = borel_weil_check(A, A.levi(mu, c.theta), p, TruncationPolicy::up_to(trunc));
            const long got = rep.data.value("dim", -1L);
            const bool ok = rep.status == Status::pass && got == want;
            r.add(cd.name() + " theta=" + theta_label(c.theta) + " mu=" + weight_to_string(mu), ok,
                  ok ? json{{"dim", got}} : json{{"expected", want}, {"report", rep.to_json()}});
        }
        // the trivial bundle carries only the constants
        auto sec = holomorphic_sections(A, A.levi(cd.zero(), c.theta), p, TruncationPolicy::up_to(trunc));
        std::size_t total = 0;
        bool constant = true;
        for (const auto& [l, fam] : sec) {
            total += fam.size();
            for (const auto& z : fam) {
                auto f = z.coordinate(0);
                constant = constant && f.support() == std::set<Weight>{cd.zero()};
            }
        }
        r.add(cd.name() + " theta=" + theta_label(c.theta) + " trivial_bundle", total == 1 && constant,
              json{{"dim", total}});
    }
    struct Full {
        std::string algebra;
        Subset theta;
        Weight w;
        int trunc;
    };
    for (const auto& f : std::vector<Full>{{"A1", {}, {1}, 3}, {"A2", {}, {1, 0}, 2}, {"A2", {0}, {1, 0}, 2}}) {
        if (!selected(opt, f.algebra)) continue;
        const Algebra& A = ws.get(f.algebra);
        auto rep = full_module_check(A, A.irrep(f.w), ParabolicData(A.cd(), f.theta), TruncationPolicy::up_to(f.trunc));
        r.add(label(A.cd(), f.w) + " theta=" + theta_label(f.theta) + " full_module", rep.status == Status::pass,
              rep.status == Status::pass ? json(rep.data) : rep.to_json());
    }
    r.finish();
    return r;
}

Report run_named(const std::string& name, Workspace& ws, const VerifyOptions& opt) {
    if (name == "relations") return suite_relations(ws, opt);
    if (name == "dimensions") return suite_dimensions(ws, opt);
    if (name == "hopf") return suite_hopf(ws, opt);
    if (name == "schur") return suite_schur(ws, opt);
    if (name == "positivity") return suite_positivity(ws, opt);
    if (name == "hom") return suite_hom(ws, opt);
    if (name == "invariants") return suite_invariants(ws, opt);
    if (name == "projectivity") return suite_projectivity(ws, opt);
    if (name == "frobenius") return suite_frobenius(ws, opt);
    if (name == "borel_weil") return suite_borel_weil(ws, opt);
    throw std::invalid_argument("unknown suite: " + name);
}

std::vector<std::string> selected_suites(const VerifyOptions& opt) {
    if (opt.suites.empty()) return kSuites;
    std::vector<std::string> out;
    for (const auto& s : kSuites)
        if (std::find(opt.suites.begin(), opt.suites.end(), s) != opt.suites.end()) out.push_back(s);
    return out;
}

}  // namespace

json VerifyOptions::to_json() const {
    json j{{"suites", selected_suites(*this)},
           {"algebras", selected_algebras(*this)},
           {"v0", rational_to_string(v0)},
           {"seed", seed},
           {"detail", detail}};
    j["max_weight"] = max_weight ? json(*max_weight) : json();
    return j;
}

const std::vector<std::string>& suite_names() {
    return kSuites;
}

const std::vector<std::string>& supported_algebras() {
    return kAlgebras;
}

bool is_suite(const std::string& name) {
    return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end();
}

const Algebra& Workspace::get(const std::string& name) {
    auto& p = algebras_[name];
    if (!p) p = std::make_unique<Algebra>(CartanData::get(name), store_);
    return *p;
}

std::vector<Weight> irrep_grid(const CartanData& cd, std::optional<int> max_weight) {
    std::vector<Weight> out;
    const std::string& n = cd.name();
    if (n == "A1") {
        for (int k = 0; k <= 8; ++k) out.push_back({k});
    } else if (n == "A2") {
        out = dominant_weights_upto(cd, 4);
    } else if (n == "A3") {
        out.push_back(cd.zero());
        for (const auto& w : fundamentals(cd)) out.push_back(w);
    } else if (n == "B2") {
        out = box(cd, 0, 2);
    } else {
        throw std::invalid_argument("no grid for " + n);
    }
    if (max_weight) std::erase_if(out, [&](const Weight& w) { return coord_sum(w) > *max_weight; });
    return out;
}

Report run_suite(const std::string& name, Workspace& ws, const VerifyOptions& opt) {
    for (const auto& a : selected_algebras(opt))
        if (std::find(kAlgebras.begin(), kAlgebras.end(), a) == kAlgebras.end())
            throw std::invalid_argument("unsupported algebra: " + a);
    if (name == "determinism") {
        // reruns every other selected suite twice in fresh workspaces
        VerifyOptions o = opt;
        o.suites.clear();
        for (const auto& s : selected_suites(opt))
            if (s != "determinism") o.suites.push_back(s);
        if (o.suites.empty()) o.suites = {"relations"};
        std::string first, second;
        for (std::string* out : {&first, &second}) {
            Workspace fresh(opt.store);
            json suites = json::array();
            for (const auto& s : o.suites) suites.push_back(run_named(s, fresh, o).to_json());
            *out = suites.dump();
        }
        Report r = named("determinism");
        r.add("identical bytes", first == second, json{{"bytes", first.size()}, {"sha256", sha256_hex(first)}});
        r.data["suites"] = o.suites;
        r.finish();
        return r;
    }
    return run_named(name, ws, opt);
}

VerifyResult run_verify(const VerifyOptions& opt) {
    VerifyResult out;
    Workspace ws(opt.store);
    json suites = json::array(), others = json::array();
    std::vector<std::string> names;
    bool failed = false;
    for (const auto& name : selected_suites(opt)) {
        Report r;
        if (name != "determinism") {
            r = run_named(name, ws, opt);
            names.push_back(name);
            others.push_back(r.to_json());
        } else if (names.empty()) {
            r = run_suite(name, ws, opt);
        } else {
            // this run against one more in a fresh workspace
            VerifyOptions o = opt;
            o.suites = names;
            Workspace fresh(opt.store);
            json again = json::array();
            for (const auto& s : names) again.push_back(run_named(s, fresh, o).to_json());
            const std::string a = others.dump(), b = again.dump();
            r.subject = name;
            r.add("identical bytes", a == b, json{{"bytes", b.size()}, {"sha256", sha256_hex(b)}});
            r.data["suites"] = names;
            r.finish();
        }
        failed = failed || r.status == Status::fail;
        suites.push_back(r.to_json());
    }
    out.status = failed ? Status::fail : Status::pass;
    out.report = {{"schema", "qbw-report/1"},
                  {"command", "verify"},
                  {"options", opt.to_json()},
                  {"suites", std::move(suites)},
                  {"status", status_name(out.status)}};
    return out;
}

}  // namespace qbw
