#include "qbw/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qbw {

namespace {

using Dense = std::vector<Rational>;  // coefficient of v^k at index k

Dense to_dense(const LaurentPoly& p, int shift) {
    Dense d(static_cast<std::size_t>(p.max_exp() - shift + 1));
    for (const auto& t : p.terms()) d[static_cast<std::size_t>(t.exp - shift)] = t.coeff;
    return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (sgn(d[k]) != 0) terms.push_back({static_cast<int>(k) + shift, d[k]});
    return LaurentPoly::from_terms(std::move(terms));
}

void trim(Dense& d) {
    while (!d.empty() && sgn(d.back()) == 0) d.pop_back();
}

// Long division in place: a becomes the remainder, returns the quotient.
Dense divmod(Dense& a, const Dense& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    Dense quo(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    const bool monic = lead == 1;
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j + 1 < b.size(); ++j)
        if (sgn(b[j]) != 0) nz.push_back(j);
    Rational t;
    for (std::size_t off = quo.size(); off-- > 0;) {
        std::size_t k = off + b.size() - 1;
        if (sgn(a[k]) == 0) continue;
        Rational& c = quo[off];
        if (monic) c = a[k];
        else c = a[k] / lead;
        a[k] = 0;
        for (std::size_t j : nz) {
            t = c * b[j];
            a[off + j] -= t;
        }
    }
    trim(a);
    return quo;
}

void make_monic(Dense& d) {
    if (d.empty()) return;
    Rational lead = d.back();
    if (lead == 1) return;
    for (auto& c : d) c /= lead;
}

// Integer content-free form of d (up to a rational scalar).
std::vector<mpz_class> primitive_part(const Dense& d) {
    mpz_class l = 1;
    for (const auto& c : d)
        if (sgn(c) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<mpz_class> z(d.size());
    mpz_class g = 0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        z[k] = d[k].get_num() * (l / d[k].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[k].get_mpz_t());
    }
    if (g > 1)
        for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return z;
}

mpz_class max_norm(const std::vector<mpz_class>& z) {
    mpz_class m = 0;
    for (const auto& c : z)
        if (abs(c) > m) m = abs(c);
    return m;
}

mpz_class eval_at(const std::vector<mpz_class>& z, const mpz_class& x) {
    mpz_class acc = 0;
    for (std::size_t k = z.size(); k-- > 0;) acc = acc * x + z[k];
    return acc;
}

bool divides(const Dense& g, Dense a) {
    divmod(a, g);
    return a.empty();
}

// Heuristic gcd: gcd of values at a large integer, lifted back by the balanced
// xi-adic expansion and accepted only if it divides both inputs.
std::optional<Dense> heuristic_gcd(const Dense& x, const Dense& y) {
    const auto a = primitive_part(x), b = primitive_part(y);
    mpz_class xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
    const std::size_t deg = std::max(a.size(), b.size());
    for (int attempt = 0; attempt < 6; ++attempt) {
        if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg > 200000) break;
        mpz_class gamma;
        mpz_class ea = eval_at(a, xi), eb = eval_at(b, xi);
        mpz_gcd(gamma.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
        Dense g;
        const mpz_class half = xi / 2;
        while (gamma != 0) {
            mpz_class c;
            mpz_fdiv_r(c.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
            if (c > half) c -= xi;
            g.emplace_back(c);
            gamma = (gamma - c) / xi;
        }
        trim(g);
        if (!g.empty()) {
            auto gz = primitive_part(g);
            Dense gp(gz.begin(), gz.end());
            if (divides(gp, x) && divides(gp, y)) {
                make_monic(gp);
                return gp;
            }
        }
        xi = xi * 73794 / 27011;
    }
    return std::nullopt;
}

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    if (i >= s.size()) throw std::invalid_argument("bad rational: " + s);
    for (std::size_t k = i; k < s.size(); ++k) {
        if (s[k] == '/' && !slash && k > i && k + 1 < s.size()) {
            slash = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw std::invalid_argument("bad rational: " + s);
    }
    if (s[0] == '+') s.erase(0, 1);
    Rational r(s, 10);
    if (slash && r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.push_back({0, Rational(c)});
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) terms_.push_back({0, c});
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.push_back({exp, c});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
    }
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].exp == 0 && terms_[0].coeff == 1;
}

Rational LaurentPoly::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp, [](const Term& t, int e) { return t.exp < e; });
    if (it != terms_.end() && it->exp == exp) return it->coeff;
    return 0;
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.exp += s;
    return p;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) p.terms_.push_back({-it->exp, it->coeff});
    return p;
}

Rational LaurentPoly::eval(const Rational& v0) const {
    if (terms_.empty()) return 0;
    if (sgn(v0) == 0) throw std::domain_error("evaluation at v = 0");
    // Horner from the top, then divide out v0^{-min_exp}.
    Rational acc = 0;
    int prev = max_exp();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int k = it->exp; k < prev; ++k) acc *= v0;
        acc += it->coeff;
        prev = it->exp;
    }
    Rational scale = 1;
    int e = min_exp();
    Rational base = e >= 0 ? v0 : Rational(1) / v0;
    for (int k = 0; k < std::abs(e); ++k) scale *= base;
    return acc * scale;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->exp < a->exp) {
            out.push_back(*b++);
        } else {
            Rational c = a->coeff + b->coeff;
            if (sgn(c) != 0) out.push_back({a->exp, std::move(c)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    return *this += -o;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.is_monomial()) {
        LaurentPoly p = a;
        for (auto& t : p.terms_) {
            t.exp += b.terms_[0].exp;
            t.coeff *= b.terms_[0].coeff;
        }
        return p;
    }
    if (a.is_monomial()) return b * a;
    int lo = a.min_exp() + b.min_exp();
    Dense acc(static_cast<std::size_t>(a.max_exp() + b.max_exp() - lo + 1));
    Rational tmp;
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            tmp = x.coeff * y.coeff;
            acc[static_cast<std::size_t>(x.exp + y.exp - lo)] += tmp;
        }
    return from_dense(acc, lo);
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k)
        if (a.terms_[k].exp != b.terms_[k].exp || a.terms_[k].coeff != b.terms_[k].coeff) return false;
    return true;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (k) out += " + ";
        out += terms_[k].coeff.get_str();
        out += "*v^";
        out += std::to_string(terms_[k].exp);
    }
    return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::string s(text);
    if (s == "0") return {};
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(" + ", pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        std::size_t star = tok.find("*v^");
        if (star == std::string::npos) throw std::invalid_argument("bad Laurent term: " + tok);
        Rational c = parse_rational(tok.substr(0, star));
        std::string e = tok.substr(star + 3);
        std::size_t used = 0;
        int ex = 0;
        try {
            ex = std::stoi(e, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent: " + tok);
        }
        if (used != e.size()) throw std::invalid_argument("bad exponent: " + tok);
        if (sgn(c) == 0) throw std::invalid_argument("zero coefficient in canonical text: " + tok);
        if (!terms.empty() && terms.back().exp >= ex) throw std::invalid_argument("exponents not ascending: " + s);
        terms.push_back({ex, c});
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return from_terms(std::move(terms));
}

std::string LaurentPoly::pretty(char var, int exp_divisor) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int e = it->exp / exp_divisor;
        Rational c = it->coeff;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (e == 0) {
            out += c.get_str();
            continue;
        }
        if (c != 1) out += c.get_str() + "*";
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {};
    if (b.is_monomial()) {
        LaurentPoly p = a;
        Rational inv = Rational(1) / b.terms_[0].coeff;
        for (auto& t : p.terms_) {
            t.exp -= b.terms_[0].exp;
            t.coeff *= inv;
        }
        return p;
    }
    Dense num = to_dense(a, a.min_exp());
    Dense den = to_dense(b, b.min_exp());
    Dense quo = divmod(num, den);
    if (!num.empty()) throw std::domain_error("inexact polynomial division");
    return from_dense(quo, a.min_exp() - b.min_exp());
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero() || b.is_zero()) {
        const LaurentPoly& n = a.is_zero() ? b : a;
        Dense d = to_dense(n, n.min_exp());
        make_monic(d);
        return from_dense(d, 0);
    }
    if (a.is_monomial() || b.is_monomial()) return LaurentPoly(1);
    Dense x = to_dense(a, a.min_exp());
    Dense y = to_dense(b, b.min_exp());
    if (auto g = heuristic_gcd(x, y)) return from_dense(*g, 0);
    if (x.size() < y.size()) std::swap(x, y);
    make_monic(y);
    while (!y.empty()) {
        divmod(x, y);
        make_monic(x);
        std::swap(x, y);
    }
    make_monic(x);
    return from_dense(x, 0);
}

// ----------------------------------------------------------- RationalFunction

namespace {
const LaurentPoly& one_poly() {
    static const LaurentPoly one(1);
    return one;
}
}  // namespace

RationalFunction::RationalFunction(long c) : num_(c) {}
RationalFunction::RationalFunction(const Rational& c) : num_(c) {}
RationalFunction::RationalFunction(LaurentPoly num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::v(int e) {
    return RationalFunction(LaurentPoly::monomial(1, e));
}

const LaurentPoly& RationalFunction::den() const {
    return den_.is_zero() ? one_poly() : den_;
}

void RationalFunction::normalize() {
    if (den_.is_zero()) return;  // already Laurent
    if (num_.is_zero()) {
        den_ = {};
        return;
    }
    if (den_.is_monomial()) {
        num_ = LaurentPoly::exact_div(num_, den_);
        den_ = {};
        return;
    }
    int s = den_.min_exp();
    if (s != 0) {
        den_ = den_.shifted(-s);
        num_ = num_.shifted(-s);
    }
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = LaurentPoly::exact_div(num_, g);
        den_ = LaurentPoly::exact_div(den_, g);
    }
    Rational lead = den_.leading_coeff();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
    if (den_.is_one()) den_ = {};
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    return RationalFunction(den(), num_);
}

RationalFunction RationalFunction::bar() const {
    if (den_.is_zero()) return RationalFunction(num_.bar());
    return RationalFunction(num_.bar(), den_.bar());
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.is_zero() && o.den_.is_zero()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    if (o.den_.is_zero()) {
        num_ += o.num_ * den_;
        normalize();
        return *this;
    }
    if (den_.is_zero()) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        normalize();
        return *this;
    }
    LaurentPoly g = LaurentPoly::gcd(den_, o.den_);
    LaurentPoly b1 = LaurentPoly::exact_div(den_, g);
    LaurentPoly d1 = LaurentPoly::exact_div(o.den_, g);
    num_ = num_ * d1 + o.num_ * b1;
    den_ = den_ * d1;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalFunction();
    if (den_.is_zero() && o.den_.is_zero()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // Cross-cancel so the product is already reduced.
    LaurentPoly a = num_, b = den(), c = o.num_, d = o.den();
    if (!d.is_one()) {
        LaurentPoly g = LaurentPoly::gcd(a, d);
        if (!g.is_one()) {
            a = LaurentPoly::exact_div(a, g);
            d = LaurentPoly::exact_div(d, g);
        }
    }
    if (!b.is_one()) {
        LaurentPoly g = LaurentPoly::gcd(c, b);
        if (!g.is_one()) {
            c = LaurentPoly::exact_div(c, g);
            b = LaurentPoly::exact_div(b, g);
        }
    }
    num_ = a * c;
    den_ = b * d;
    if (den_.is_one()) {
        den_ = {};
        return *this;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    return *this *= o.inverse();
}

std::string RationalFunction::to_string() const {
    if (den_.is_zero()) return num_.to_string();
    return num_.to_string() + " / " + den_.to_string();
}

RationalFunction RationalFunction::parse(std::string_view text) {
    std::string s(text);
    std::size_t slash = s.find(" / ");
    if (slash == std::string::npos) return RationalFunction(LaurentPoly::parse(s));
    LaurentPoly num = LaurentPoly::parse(s.substr(0, slash));
    LaurentPoly den = LaurentPoly::parse(s.substr(slash + 3));
    RationalFunction r(num, den);
    if (r.num_ != num || r.den() != den) throw std::invalid_argument("rational function not in normal form: " + s);
    return r;
}

std::string RationalFunction::pretty() const {
    auto even = [](const LaurentPoly& p) {
        return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.exp % 2 == 0; });
    };
    bool use_q = even(num_) && even(den());
    char var = use_q ? 'q' : 'v';
    int div = use_q ? 2 : 1;
    std::string n = num_.pretty(var, div);
    if (den_.is_zero()) return n;
    auto wrap = [](const LaurentPoly& p, const std::string& s) { return p.size() > 1 ? "(" + s + ")" : s; };
    return wrap(num_, n) + " / " + wrap(den_, den_.pretty(var, div));
}

std::string NumericValue::to_string() const {
    if (flavor == NumericFlavor::exact) return exact.get_str();
    std::ostringstream os;
    os.precision(17);
    os << approx;
    return os.str();
}

// ----------------------------------------------------------------- q-numbers

LaurentPoly q_integer(int n, int d) {
    if (d <= 0) throw std::invalid_argument("q_integer: symmetrizer must be positive");
    if (n == 0) return {};
    if (n < 0) return -q_integer(-n, d);
    std::vector<LaurentPoly::Term> terms;
    for (int k = 0; k < n; ++k) terms.push_back({2 * d * (n - 1 - 2 * k), Rational(1)});
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly q_factorial(int n, int d) {
    if (n < 0) throw std::invalid_argument("q_factorial of a negative integer");
    LaurentPoly r(1);
    for (int k = 2; k <= n; ++k) r = r * q_integer(k, d);
    return r;
}

LaurentPoly gauss_binomial(int m, int t, int d) {
    if (d <= 0) throw std::invalid_argument("gauss_binomial: symmetrizer must be positive");
    if (t < 0 || t > m) throw std::invalid_argument("gauss_binomial: need 0 <= t <= m");
    // Pascal rule [m,t] = q_i^{-t}[m-1,t] + q_i^{m-t}[m-1,t-1].
    std::vector<LaurentPoly> row{LaurentPoly(1)};
    for (int r = 1; r <= m; ++r) {
        std::vector<LaurentPoly> next(static_cast<std::size_t>(r + 1));
        for (int s = 0; s <= r; ++s) {
            LaurentPoly acc;
            if (s < r) acc += row[static_cast<std::size_t>(s)].shifted(-2 * d * s);
            if (s > 0) acc += row[static_cast<std::size_t>(s - 1)].shifted(2 * d * (r - s));
            next[static_cast<std::size_t>(s)] = std::move(acc);
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(t)];
}

NumericValue specialize(const RationalFunction& f, const Rational& v0) {
    if (sgn(v0) <= 0 || v0 == 1) throw std::invalid_argument("specialize: need v0 > 0 and v0 != 1");
    Rational den = f.den().eval(v0);
    if (sgn(den) == 0) throw std::domain_error("specialize: pole at v0 = " + v0.get_str());
    NumericValue out;
    out.exact = f.num().eval(v0) / den;
    out.approx = out.exact.get_d();
    return out;
}

}  // namespace qbw
