#pragma once

// Formal Q(v)-linear combinations of words in e_i, f_i, k_i, k_i^{-1}.
// No relations are imposed; words are only ordered for canonical printing.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qbw/cartan.hpp"
#include "qbw/scalar.hpp"

namespace qbw {

enum class Gen : std::uint8_t { E = 0, F = 1, K = 2, Kinv = 3 };

struct Letter {
    Gen g;
    int i;  // 0-based simple root index
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

std::string letter_to_string(const Letter& l);
std::string word_to_string(const Word& w);

class AlgebraWord {
public:
    using Terms = std::map<Word, RationalFunction>;

    AlgebraWord() = default;
    static AlgebraWord one();
    static AlgebraWord word(Word w, RationalFunction c = RationalFunction(1));
    static AlgebraWord e(int i) { return word({{Gen::E, i}}); }
    static AlgebraWord f(int i) { return word({{Gen::F, i}}); }
    static AlgebraWord k(int i) { return word({{Gen::K, i}}); }
    static AlgebraWord kinv(int i) { return word({{Gen::Kinv, i}}); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t max_length() const;

    AlgebraWord& operator+=(const AlgebraWord& o);
    AlgebraWord& operator-=(const AlgebraWord& o);
    AlgebraWord& operator*=(const RationalFunction& c);
    friend AlgebraWord operator+(AlgebraWord a, const AlgebraWord& b) { return a += b; }
    friend AlgebraWord operator-(AlgebraWord a, const AlgebraWord& b) { return a -= b; }
    friend AlgebraWord operator*(AlgebraWord a, const RationalFunction& c) { return a *= c; }
    friend AlgebraWord operator*(const RationalFunction& c, AlgebraWord a) { return a *= c; }
    friend AlgebraWord operator*(const AlgebraWord& a, const AlgebraWord& b);
    friend bool operator==(const AlgebraWord& a, const AlgebraWord& b) { return a.terms_ == b.terms_; }

    /// e.g. "1*v^0 [e1 f1] + -1*v^2 [f1 e1]"; the empty word prints as [].
    std::string to_string() const;
    /// Accepts a product of tokens e1, f2, k1, k1^-1 (1-based indices), or "1".
    static AlgebraWord parse_monomial(const std::string& text, int rank);

private:
    Terms terms_;
    void add_term(const Word& w, const RationalFunction& c);
};

using WordPair = std::pair<Word, Word>;
using TensorWord = std::map<WordPair, RationalFunction>;

/// Delta(e) = e (x) k + k^-1 (x) e, Delta(f) = f (x) k + k^-1 (x) f, Delta(k) = k (x) k.
TensorWord coproduct(const AlgebraWord& x);
RationalFunction counit(const AlgebraWord& x);
/// S(e) = -q_i e, S(f) = -q_i^-1 f, S(k) = k^-1; anti-multiplicative.
AlgebraWord antipode(const CartanData& cd, const AlgebraWord& x);
AlgebraWord antipode_inverse(const CartanData& cd, const AlgebraWord& x);
/// Compact real form: e* = f, f* = e, k* = k; anti-multiplicative. Coefficients
/// are real at real v, so they are left unchanged.
AlgebraWord star(const AlgebraWord& x);
/// theta = * S
AlgebraWord theta(const CartanData& cd, const AlgebraWord& x);

/// Exponents c with sum c_j alpha_j = 4 rho; K_{2rho} = prod k_j^{c_j}.
struct CartanMonomial {
    std::vector<int> c;
    /// exponent of v in the action on a weight-mu vector
    int v_exponent(const CartanData& cd, const Weight& mu) const;
    AlgebraWord as_word() const;
    AlgebraWord inverse_word() const;
};
CartanMonomial k2rho(const CartanData& cd);

/// Spanning set of C_q(k) for theta (all indices: C_q itself): X_i, Y_i for i in
/// theta, Z_i, S_i for all i. The sqrt(-1) factors of Y_i and Z_i are dropped;
/// they do not change the complex span.
std::vector<std::pair<std::string, AlgebraWord>> coideal_spanning_set(const CartanData& cd, const std::vector<int>& theta);

/// Decides Delta(z) in C (x) U + U (x) C exactly in the free algebra on the
/// letters, with C the span of the given elements.
bool coproduct_in_coideal(const std::vector<AlgebraWord>& span, const AlgebraWord& z);

/// All words of length <= n in the letters of the given subset (e, f, k, k^-1).
std::vector<Word> all_words(const std::vector<int>& indices, std::size_t n, bool with_kinv = true);

}  // namespace qbw
