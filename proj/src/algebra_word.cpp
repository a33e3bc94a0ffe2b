#include "qbw/algebra_word.hpp"

#include "qbw/matrix.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qbw {

std::string letter_to_string(const Letter& l) {
    std::string idx = std::to_string(l.i + 1);
    switch (l.g) {
        case Gen::E: return "e" + idx;
        case Gen::F: return "f" + idx;
        case Gen::K: return "k" + idx;
        case Gen::Kinv: return "k" + idx + "^-1";
    }
    return "?";
}

std::string word_to_string(const Word& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? " " : "") + letter_to_string(w[k]);
    return s;
}

AlgebraWord AlgebraWord::one() {
    return word({});
}

AlgebraWord AlgebraWord::word(Word w, RationalFunction c) {
    AlgebraWord a;
    if (!c.is_zero()) a.terms_.emplace(std::move(w), std::move(c));
    return a;
}

std::size_t AlgebraWord::max_length() const {
    std::size_t n = 0;
    for (const auto& [w, c] : terms_) n = std::max(n, w.size());
    return n;
}

void AlgebraWord::add_term(const Word& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

AlgebraWord& AlgebraWord::operator+=(const AlgebraWord& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

AlgebraWord& AlgebraWord::operator-=(const AlgebraWord& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

AlgebraWord& AlgebraWord::operator*=(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

AlgebraWord operator*(const AlgebraWord& a, const AlgebraWord& b) {
    AlgebraWord r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

std::string AlgebraWord::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += c.to_string() + " [" + word_to_string(w) + "]";
    }
    return s;
}

AlgebraWord AlgebraWord::parse_monomial(const std::string& text, int rank) {
    std::stringstream ss(text);
    std::string tok;
    Word w;
    bool saw_one = false;
    while (ss >> tok) {
        if (tok == "1") {
            saw_one = true;
            continue;
        }
        if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'f' && tok[0] != 'k'))
            throw std::invalid_argument("bad generator token '" + tok + "'");
        bool inv = false;
        std::string body = tok.substr(1);
        if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
            if (tok[0] != 'k') throw std::invalid_argument("only k may be inverted: '" + tok + "'");
            inv = true;
            body.resize(body.size() - 3);
        }
        std::size_t used = 0;
        int idx = 0;
        try {
            idx = std::stoi(body, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad generator index in '" + tok + "'");
        }
        if (used != body.size() || idx < 1 || idx > rank)
            throw std::invalid_argument("generator index out of range in '" + tok + "'");
        Gen g = tok[0] == 'e' ? Gen::E : tok[0] == 'f' ? Gen::F : (inv ? Gen::Kinv : Gen::K);
        w.push_back({g, idx - 1});
    }
    if (w.empty() && !saw_one) throw std::invalid_argument("empty algebra word");
    return word(w);
}

TensorWord coproduct(const AlgebraWord& x) {
    TensorWord out;
    for (const auto& [w, c] : x.terms()) {
        std::vector<std::pair<WordPair, RationalFunction>> acc{{{Word{}, Word{}}, c}};
        for (const auto& l : w) {
            std::vector<std::pair<WordPair, RationalFunction>> next;
            next.reserve(acc.size() * 2);
            for (auto& [p, coef] : acc) {
                if (l.g == Gen::K || l.g == Gen::Kinv) {
                    WordPair q = p;
                    q.first.push_back(l);
                    q.second.push_back(l);
                    next.emplace_back(std::move(q), coef);
                    continue;
                }
                WordPair a = p;  // x (x) k
                a.first.push_back(l);
                a.second.push_back({Gen::K, l.i});
                next.emplace_back(std::move(a), coef);
                WordPair b = p;  // k^-1 (x) x
                b.first.push_back({Gen::Kinv, l.i});
                b.second.push_back(l);
                next.emplace_back(std::move(b), coef);
            }
            acc = std::move(next);
        }
        for (auto& [p, coef] : acc) {
            auto [it, inserted] = out.try_emplace(p, coef);
            if (!inserted) {
                it->second += coef;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

RationalFunction counit(const AlgebraWord& x) {
    RationalFunction s;
    for (const auto& [w, c] : x.terms()) {
        bool torus = true;
        for (const auto& l : w)
            if (l.g == Gen::E || l.g == Gen::F) torus = false;
        if (torus) s += c;
    }
    return s;
}

namespace {

// Applies a letter-wise anti-multiplicative map.
template <class F>
AlgebraWord anti_map(const AlgebraWord& x, F&& on_letter) {
    AlgebraWord out;
    for (const auto& [w, c] : x.terms()) {
        RationalFunction coef = c;
        Word r;
        r.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            auto [l, s] = on_letter(*it);
            r.push_back(l);
            coef *= s;
        }
        out += AlgebraWord::word(r, coef);
    }
    return out;
}

}  // namespace

AlgebraWord antipode(const CartanData& cd, const AlgebraWord& x) {
    return anti_map(x, [&](const Letter& l) -> std::pair<Letter, RationalFunction> {
        int d = cd.d(l.i);
        switch (l.g) {
            case Gen::E: return {l, -RationalFunction::v(2 * d)};
            case Gen::F: return {l, -RationalFunction::v(-2 * d)};
            case Gen::K: return {{Gen::Kinv, l.i}, RationalFunction(1)};
            case Gen::Kinv: return {{Gen::K, l.i}, RationalFunction(1)};
        }
        throw std::logic_error("bad letter");
    });
}

AlgebraWord antipode_inverse(const CartanData& cd, const AlgebraWord& x) {
    return anti_map(x, [&](const Letter& l) -> std::pair<Letter, RationalFunction> {
        int d = cd.d(l.i);
        switch (l.g) {
            case Gen::E: return {l, -RationalFunction::v(-2 * d)};
            case Gen::F: return {l, -RationalFunction::v(2 * d)};
            case Gen::K: return {{Gen::Kinv, l.i}, RationalFunction(1)};
            case Gen::Kinv: return {{Gen::K, l.i}, RationalFunction(1)};
        }
        throw std::logic_error("bad letter");
    });
}

AlgebraWord star(const AlgebraWord& x) {
    return anti_map(x, [](const Letter& l) -> std::pair<Letter, RationalFunction> {
        switch (l.g) {
            case Gen::E: return {{Gen::F, l.i}, RationalFunction(1)};
            case Gen::F: return {{Gen::E, l.i}, RationalFunction(1)};
            default: return {l, RationalFunction(1)};
        }
    });
}

AlgebraWord theta(const CartanData& cd, const AlgebraWord& x) {
    return star(antipode(cd, x));
}

int CartanMonomial::v_exponent(const CartanData& cd, const Weight& mu) const {
    int s = 0;
    for (int j = 0; j < cd.rank(); ++j) s += c[j] * cd.inner_simple(mu, j);
    return s;
}

AlgebraWord CartanMonomial::as_word() const {
    Word w;
    for (std::size_t j = 0; j < c.size(); ++j)
        for (int k = 0; k < std::abs(c[j]); ++k) w.push_back({c[j] > 0 ? Gen::K : Gen::Kinv, static_cast<int>(j)});
    return AlgebraWord::word(w);
}

AlgebraWord CartanMonomial::inverse_word() const {
    Word w;
    for (std::size_t j = 0; j < c.size(); ++j)
        for (int k = 0; k < std::abs(c[j]); ++k) w.push_back({c[j] > 0 ? Gen::Kinv : Gen::K, static_cast<int>(j)});
    return AlgebraWord::word(w);
}

CartanMonomial k2rho(const CartanData& cd) {
    CartanMonomial m;
    for (int x : cd.two_rho()) m.c.push_back(2 * x);
    return m;
}

std::vector<std::pair<std::string, AlgebraWord>> coideal_spanning_set(const CartanData& cd,
                                                                     const std::vector<int>& theta) {
    std::vector<std::pair<std::string, AlgebraWord>> out;
    for (int i : theta) {
        std::string n = std::to_string(i + 1);
        RationalFunction qi = RationalFunction::v(2 * cd.d(i));
        out.emplace_back("X" + n, AlgebraWord::e(i) - AlgebraWord::f(i) * qi);
        out.emplace_back("Y" + n, AlgebraWord::e(i) + AlgebraWord::f(i) * qi);
    }
    for (int i = 0; i < cd.rank(); ++i) {
        std::string n = std::to_string(i + 1);
        RationalFunction den = RationalFunction::v(2 * cd.d(i)) - RationalFunction::v(-2 * cd.d(i));
        out.emplace_back("Z" + n, (AlgebraWord::k(i) - AlgebraWord::kinv(i)) * den.inverse());
        out.emplace_back("S" + n, AlgebraWord::k(i) + AlgebraWord::kinv(i) - AlgebraWord::one() * RationalFunction(2));
    }
    return out;
}

bool coproduct_in_coideal(const std::vector<AlgebraWord>& span, const AlgebraWord& z) {
    TensorWord dz = coproduct(z);
    std::map<Word, std::size_t> index;
    for (const auto& c : span)
        for (const auto& [w, x] : c.terms()) index.emplace(w, 0);
    for (const auto& [p, x] : dz) {
        index.emplace(p.first, 0);
        index.emplace(p.second, 0);
    }
    std::size_t n = 0;
    for (auto& [w, k] : index) k = n++;
    // rows of the reduced span; the quotient map kills pivot coordinates
    Matrix c(span.size(), n);
    for (std::size_t r = 0; r < span.size(); ++r)
        for (const auto& [w, x] : span[r].terms()) c(r, index.at(w)) = x;
    Rref red = rref(c);
    Matrix proj = Matrix::identity(n);  // proj * x = x mod span
    for (std::size_t r = 0; r < red.pivots.size(); ++r) {
        std::size_t p = red.pivots[r];
        for (std::size_t j = 0; j < n; ++j) proj(j, p) -= red.reduced(r, j);
    }
    Matrix m(n, n);
    for (const auto& [p, x] : dz) m(index.at(p.first), index.at(p.second)) += x;
    return (proj * m * proj.transpose()).is_zero();
}

std::vector<Word> all_words(const std::vector<int>& indices, std::size_t n, bool with_kinv) {
    std::vector<Letter> letters;
    for (int i : indices) {
        letters.push_back({Gen::E, i});
        letters.push_back({Gen::F, i});
        letters.push_back({Gen::K, i});
        if (with_kinv) letters.push_back({Gen::Kinv, i});
    }
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    for (std::size_t len = 1; len <= n; ++len) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (const auto& l : letters) {
                Word x = w;
                x.push_back(l);
                next.push_back(x);
            }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
    }
    return out;
}

}  // namespace qbw
