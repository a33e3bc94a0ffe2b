#pragma once

/// Exact scalars for the quantum group engine: the field Q(v) with v^2 = q.
///
/// Everything downstream (generator matrices, Gram matrices, Clebsch-Gordan
/// change of basis, Haar integrals) is expressed over this field, so the types
/// here are kept value-semantic and immutable once built.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qbw {

using Rational = mpq_class;

/// num/den in lowest terms (mpq_class(num, den) alone does not canonicalize).
Rational make_rational(long num, long den);
std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// Sparse Laurent polynomial in v with rational coefficients.
/// Terms are kept sorted by ascending exponent and never hold a zero coefficient.
class LaurentPoly {
public:
    struct Term {
        int exp;
        Rational coeff;
    };

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

    static LaurentPoly monomial(const Rational& c, int exp);
    /// Builds from arbitrary (exp, coeff) pairs; duplicates are summed.
    static LaurentPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    std::size_t size() const noexcept { return terms_.size(); }

    // Only meaningful for nonzero polynomials.
    int min_exp() const { return terms_.front().exp; }
    int max_exp() const { return terms_.back().exp; }
    const Rational& leading_coeff() const { return terms_.back().coeff; }
    const Rational& trailing_coeff() const { return terms_.front().coeff; }
    Rational coeff(int exp) const;

    LaurentPoly shifted(int s) const;
    /// v -> v^{-1}
    LaurentPoly bar() const;
    Rational eval(const Rational& v0) const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Canonical form "c1*v^e1 + c2*v^e2 + ..." (ascending exponents), "0" for zero.
    std::string to_string() const;
    static LaurentPoly parse(std::string_view text);
    /// Readable form used by reports, e.g. "v^-2 + 1 + v^2".
    std::string pretty(char var = 'v', int exp_divisor = 1) const;

    /// Exact quotient a / b; throws std::domain_error when b does not divide a.
    static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
    /// Monic gcd of the polynomial parts (powers of v are units and dropped).
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

private:
    std::vector<Term> terms_;
};

/// Element of Q(v) kept in normal form: gcd(num, den) = 1, den is a monic
/// polynomial with nonzero constant term. An empty stored denominator means 1.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(long c);  // NOLINT(google-explicit-constructor)
    RationalFunction(const Rational& c);  // NOLINT(google-explicit-constructor)
    RationalFunction(LaurentPoly num);  // NOLINT(google-explicit-constructor)
    /// Normalizes; throws std::domain_error on a zero denominator.
    RationalFunction(LaurentPoly num, LaurentPoly den);

    /// v^e
    static RationalFunction v(int e = 1);
    /// q^e = v^{2e}
    static RationalFunction q(int e = 1) { return v(2 * e); }

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const;

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return den_.is_zero() && num_.is_one(); }
    bool is_laurent() const noexcept { return den_.is_zero(); }

    RationalFunction inverse() const;
    RationalFunction bar() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    /// Canonical text; "num" or "num / den" with the separator exactly " / ".
    std::string to_string() const;
    static RationalFunction parse(std::string_view text);
    /// Human-oriented form; switches to q when only even powers of v occur.
    std::string pretty() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;  // empty <=> 1

    void normalize();
};

enum class NumericFlavor { exact, floating };

struct NumericValue {
    NumericFlavor flavor = NumericFlavor::exact;
    Rational exact;
    double approx = 0.0;

    std::string to_string() const;
};

/// Balanced q-number [n] in q_i = v^{2d}.
LaurentPoly q_integer(int n, int d = 1);
LaurentPoly q_factorial(int n, int d = 1);
/// Balanced Gauss polynomial [m choose t] in q_i = v^{2d}; throws unless 0 <= t <= m.
LaurentPoly gauss_binomial(int m, int t, int d = 1);

/// Evaluates f at v = v0 exactly. Requires v0 > 0, v0 != 1 and no pole at v0.
NumericValue specialize(const RationalFunction& f, const Rational& v0);

}  // namespace qbw
