#include "qbw/cartan.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qbw {

std::string weight_to_string(const Weight& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
}

Weight parse_weight(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') s += c;
    Weight w;
    if (s.empty()) return w;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int x = 0;
        try {
            x = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad weight component '" + tok + "'");
        }
        if (used != tok.size()) throw std::invalid_argument("bad weight component '" + tok + "'");
        w.push_back(x);
    }
    return w;
}

int height(const RootVec& c) {
    int h = 0;
    for (int x : c) h += x;
    return h;
}

Weight operator+(const Weight& a, const Weight& b) {
    Weight c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.at(i);
    return c;
}

Weight operator-(const Weight& a, const Weight& b) {
    Weight c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.at(i);
    return c;
}

Weight operator-(const Weight& a) {
    Weight c(a);
    for (auto& x : c) x = -x;
    return c;
}

namespace {

std::vector<std::vector<Rational>> rational_inverse(const std::vector<std::vector<int>>& A) {
    const std::size_t n = A.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = A[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        Rational inv = Rational(1) / m[c][c];
        for (auto& x : m[c]) x *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
    return out;
}

}  // namespace

CartanData::CartanData(std::string name, char type, std::vector<std::vector<int>> A, std::vector<int> d,
                       std::vector<RootVec> roots, RootVec highest)
    : name_(std::move(name)),
      type_(type),
      rank_(static_cast<int>(A.size())),
      A_(std::move(A)),
      d_(std::move(d)),
      roots_(std::move(roots)),
      two_rho_(static_cast<std::size_t>(rank_), 0),
      highest_root_(std::move(highest)) {
    for (const auto& r : roots_)
        for (int i = 0; i < rank_; ++i) two_rho_[i] += r[i];
    Ainv_ = rational_inverse(A_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            if (d_[i] * A_[i][j] != d_[j] * A_[j][i]) throw std::logic_error("Cartan data not symmetrizable");
}

const CartanData& CartanData::get(const std::string& name) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<CartanData>> table;
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(name);
    if (it != table.end()) return *it->second;
    std::unique_ptr<CartanData> cd;
    if (name == "A1" || name == "A2" || name == "A3") {
        int n = name[1] - '0';
        std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            A[i][i] = 2;
            if (i + 1 < n) A[i][i + 1] = A[i + 1][i] = -1;
        }
        std::vector<RootVec> roots;
        // alpha_i + ... + alpha_j, ordered by height then position
        for (int h = 1; h <= n; ++h)
            for (int i = 0; i + h <= n; ++i) {
                RootVec r(n, 0);
                for (int k = i; k < i + h; ++k) r[k] = 1;
                roots.push_back(r);
            }
        RootVec top(n, 1);
        cd.reset(new CartanData(name, 'A', A, std::vector<int>(n, 1), roots, top));
    } else if (name == "B2") {
        // alpha_1 long, alpha_2 short
        cd.reset(new CartanData(name, 'B', {{2, -1}, {-2, 2}}, {2, 1}, {{1, 0}, {0, 1}, {1, 1}, {1, 2}}, {1, 2}));
    } else {
        throw std::invalid_argument("unsupported algebra '" + name + "' (supported: A1, A2, A3, B2)");
    }
    auto* raw = cd.get();
    table.emplace(name, std::move(cd));
    return *raw;
}

bool CartanData::supported(const std::string& name) {
    return name == "A1" || name == "A2" || name == "A3" || name == "B2";
}

std::vector<std::string> CartanData::supported_names() {
    return {"A1", "A2", "A3", "B2"};
}

Weight CartanData::root_to_weight(const RootVec& c) const {
    Weight w(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) w[i] += A_[i][j] * c.at(j);
    return w;
}

Weight CartanData::simple_root(int j) const {
    Weight w(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) w[i] = A_[i][j];
    return w;
}

std::vector<Rational> CartanData::weight_to_root(const Weight& w) const {
    std::vector<Rational> c(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) c[i] += Ainv_[i][j] * w.at(j);
    return c;
}

bool CartanData::in_root_lattice(const Weight& w, RootVec* out) const {
    auto c = weight_to_root(w);
    RootVec r(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
        if (c[i].get_den() != 1) return false;
        r[i] = static_cast<int>(c[i].get_num().get_si());
    }
    if (out) *out = r;
    return true;
}

Rational CartanData::inner(const Weight& l, const Weight& m) const {
    auto c = weight_to_root(m);
    Rational s = 0;
    for (int j = 0; j < rank_; ++j) s += c[j] * d_[j] * l.at(j);
    return s;
}

int CartanData::inner_root(const Weight& mu, const RootVec& alpha) const {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += alpha.at(j) * d_[j] * mu.at(j);
    return s;
}

Weight CartanData::reflect(const Weight& mu, int i) const {
    Weight r(mu);
    int mi = mu.at(i);
    for (int k = 0; k < rank_; ++k) r[k] -= mi * A_[k][i];
    return r;
}

Weight CartanData::apply(const Weight& mu, const WeylWord& w) const {
    Weight r(mu);
    for (int i : w) r = reflect(r, i);
    return r;
}

bool CartanData::is_dominant(const Weight& mu) const {
    if (static_cast<int>(mu.size()) != rank_) return false;
    for (int x : mu)
        if (x < 0) return false;
    return true;
}

nlohmann::json CartanData::to_json() const {
    return {{"type", std::string(1, type_)},
            {"rank", rank_},
            {"cartan_matrix", A_},
            {"symmetrizers", d_},
            {"positive_roots", roots_},
            {"two_rho", two_rho_},
            {"highest_root", highest_root_}};
}

namespace {
void require_dominant(const CartanData& cd, const Weight& l) {
    if (!cd.is_dominant(l))
        throw std::invalid_argument("weight " + weight_to_string(l) + " is not dominant for " + cd.name());
}
}  // namespace

Weight lowest_weight(const CartanData& cd, const Weight& lambda) {
    require_dominant(cd, lambda);
    Weight mu = lambda;
    for (;;) {
        int i = 0;
        while (i < cd.rank() && mu[i] <= 0) ++i;
        if (i == cd.rank()) return mu;
        mu = cd.reflect(mu, i);
    }
}

Weight dagger(const CartanData& cd, const Weight& lambda) {
    return -lowest_weight(cd, lambda);
}

std::pair<Weight, WeylWord> dominant_orbit_rep(const CartanData& cd, const Weight& mu) {
    if (static_cast<int>(mu.size()) != cd.rank()) throw std::invalid_argument("weight has wrong rank");
    Weight w = mu;
    WeylWord word;
    for (;;) {
        int i = 0;
        while (i < cd.rank() && w[i] >= 0) ++i;
        if (i == cd.rank()) return {w, word};
        w = cd.reflect(w, i);
        word.push_back(i);
    }
}

long weyl_dim(const CartanData& cd, const Weight& lambda) {
    require_dominant(cd, lambda);
    Weight lr = lambda + cd.rho();
    Rational p = 1;
    for (const auto& a : cd.positive_roots()) p *= make_rational(cd.inner_root(lr, a), cd.inner_root(cd.rho(), a));
    if (p.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
    return p.get_num().get_si();
}

}  // namespace qbw
