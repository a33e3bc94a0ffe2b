#pragma once

// The algebra T_q of matrix coefficients t^(lambda)_ij of the canonical irreps,
// with its Hopf *-structure, the two U_q-actions and the Haar functional.
// Indices are 0-based internally and printed 1-based.

#include <nlohmann/json.hpp>

#include <compare>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qbw/context.hpp"

namespace qbw {

struct CoeffKey {
    Weight lambda;
    std::size_t i = 0, j = 0;
    friend auto operator<=>(const CoeffKey&, const CoeffKey&) = default;
};

std::string coeff_key_to_string(const CoeffKey& k);

class CoeffElement {
public:
    using Terms = std::map<CoeffKey, RationalFunction>;

    CoeffElement() = default;
    static CoeffElement t(const Weight& lambda, std::size_t i, std::size_t j,
                          const RationalFunction& c = RationalFunction(1));
    /// t^(0), the unit of T_q
    static CoeffElement unit(const CartanData& cd);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    void add(const CoeffKey& k, const RationalFunction& c);
    std::set<Weight> support() const;
    CoeffElement component(const Weight& lambda) const;

    CoeffElement& operator+=(const CoeffElement& o);
    CoeffElement& operator-=(const CoeffElement& o);
    CoeffElement& operator*=(const RationalFunction& c);
    friend CoeffElement operator+(CoeffElement a, const CoeffElement& b) { return a += b; }
    friend CoeffElement operator-(CoeffElement a, const CoeffElement& b) { return a -= b; }
    friend CoeffElement operator*(CoeffElement a, const RationalFunction& c) { return a *= c; }
    friend CoeffElement operator*(const RationalFunction& c, CoeffElement a) { return a *= c; }
    friend bool operator==(const CoeffElement& a, const CoeffElement& b) { return a.terms_ == b.terms_; }

    /// "c * t(1,0)[1,2] + ..." with c in canonical scalar text; "0" when empty.
    std::string to_string() const;
    /// Sorted list of {lambda, i, j, c} records, indices 1-based.
    nlohmann::json to_json() const;
    static CoeffElement from_json(const nlohmann::json& j);

private:
    Terms terms_;
};

using CoeffPair = std::pair<CoeffKey, CoeffKey>;
using CoeffTensor = std::map<CoeffPair, RationalFunction>;
void add_to(CoeffTensor& t, const CoeffPair& k, const RationalFunction& c);

/// <a, x>, with x w_i = sum_j t_ji(x) w_j.
RationalFunction coeff_eval(const Algebra& alg, const CoeffElement& a, const AlgebraWord& x);
RationalFunction counit(const CoeffElement& a);
/// Delta(t_ij) = sum_k t_ik (x) t_kj
CoeffTensor coproduct(const Algebra& alg, const CoeffElement& a);
/// Product through the CG change of basis of W(lambda) (x) W(mu).
CoeffElement product(const Algebra& alg, const CoeffElement& a, const CoeffElement& b);

/// Intertwiner J with t^(lambda)(S x)^T = J t^(lambda-dagger)(x) J^-1.
struct DualIntertwiner {
    Weight lambda, dual;
    Matrix J, Jinv;
};
std::shared_ptr<const DualIntertwiner> dual_intertwiner(const Algebra& alg, const Weight& lambda);

/// S(t^(lambda)_ij), re-expressed in canonical coefficients of W(lambda-dagger).
CoeffElement antipode(const Algebra& alg, const CoeffElement& a);
/// <*a, x> = <a, theta(x)> at real v; uses the full Gram matrix of W(lambda).
CoeffElement star(const Algebra& alg, const CoeffElement& a);

/// Coefficient of t^(0).
RationalFunction haar(const CoeffElement& a);

enum class SchurVariant {
    t_ttilde,  // int t^(lambda)_ij ttilde^(mu-dagger)_rs
    ttilde_t,  // int ttilde^(lambda-dagger)_ij t^(mu)_rs
};
/// ttilde^(lambda-dagger)_ij = S(t^(lambda)_ji)
CoeffElement ttilde(const Algebra& alg, const Weight& lambda, std::size_t i, std::size_t j);
/// Closed form of the orthogonality relations, without any product.
RationalFunction schur_pair(const Algebra& alg, SchurVariant v, const Weight& lambda, std::size_t i, std::size_t j,
                            std::size_t r, std::size_t s, const Weight& mu);
/// Same integral computed by product and haar.
RationalFunction schur_by_cg(const Algebra& alg, SchurVariant v, const Weight& lambda, std::size_t i, std::size_t j,
                             std::size_t r, std::size_t s, const Weight& mu);

/// x o t_ij = sum_k t_ik <t_kj, x>, so (x o f)(y) = f(yx).
CoeffElement circ_action(const Algebra& alg, const AlgebraWord& x, const CoeffElement& a);
/// x . t_ij = sum_k <t_ik, S^-1 x> t_kj, so (x . f)(y) = f(S^-1(x) y).
CoeffElement dot_action(const Algebra& alg, const AlgebraWord& x, const CoeffElement& a);

/// (a, a)_h = int a* a specialised at v0.
NumericValue haar_positivity(const Algebra& alg, const CoeffElement& a, const Rational& v0);

/// Pseudo-random element supported on the given weights; coefficients are small
/// rationals times powers of v.
CoeffElement random_coeff(const Algebra& alg, std::mt19937_64& rng, const std::vector<Weight>& support,
                          std::size_t terms);

}  // namespace qbw
