#pragma once

// V-valued sections in T_q (x) V, the spaces F_q(V) and O_q(V_mu) on graded
// pieces, the two module structures, the eta/kappa maps, Frobenius reciprocity
// and the Borel-Weil checks.

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qbw/coeff.hpp"
#include "qbw/parabolic.hpp"

namespace qbw {

/// Finite sum of t_key (x) v_key. V is any module with generator matrices (a
/// Levi irrep, or a full W viewed through the Levi subalgebra).
struct Section {
    IrrepPtr V;
    std::map<CoeffKey, Vec> terms;

    Section() = default;
    explicit Section(IrrepPtr v) : V(std::move(v)) {}

    bool is_zero() const noexcept { return terms.empty(); }
    void add(const CoeffKey& k, const Vec& v, const RationalFunction& c = RationalFunction(1));
    std::set<Weight> support() const;
    /// V-component r as a coefficient element.
    CoeffElement coordinate(std::size_t r) const;
    static Section from_coordinates(IrrepPtr V, const std::vector<CoeffElement>& comps);

    Section& operator+=(const Section& o);
    Section& operator*=(const RationalFunction& c);
    friend Section operator+(Section a, const Section& b) { return a += b; }
    friend Section operator*(Section a, const RationalFunction& c) { return a *= c; }
    friend bool operator==(const Section& a, const Section& b) { return a.terms == b.terms; }

    /// Sorted {lambda, i, j, v} records, indices 1-based, v in canonical scalar text.
    nlohmann::json to_json() const;
};

struct TruncationPolicy {
    std::optional<std::vector<Weight>> explicit_weights;
    int height = 0;  // bound on the sum of fundamental coordinates

    static TruncationPolicy up_to(int h) { return {std::nullopt, h}; }
    static TruncationPolicy only(std::vector<Weight> ws) { return {std::move(ws), 0}; }
    std::vector<Weight> weights(const CartanData& cd) const;
    bool contains(const CartanData& cd, const Weight& lambda) const;
    nlohmann::json to_json() const;
};

/// Dominant weights with coordinate sum <= h, in lexicographic order.
std::vector<Weight> dominant_weights_upto(const CartanData& cd, int h);

/// x o zeta, coefficientwise.
Section circ_on_section(const Algebra& alg, const AlgebraWord& x, const Section& z);
/// (id (x) rho_V(y)) zeta
Section act_on_values(const AlgebraWord& y, const Section& z);
/// x o zeta = (id (x) S(x)) zeta for every listed generator.
bool satisfies_defining_property(const Algebra& alg, const Section& z, const std::vector<Letter>& gens);
/// x . zeta, coefficientwise dot action.
Section dot_on_section(const Algebra& alg, const AlgebraWord& x, const Section& z);

/// Coordinates of a family in a common basis of keys x V, one column per section.
Matrix flatten(const std::vector<Section>& family);
std::size_t family_rank(const std::vector<Section>& family);
bool same_span(const std::vector<Section>& a, const std::vector<Section>& b);
/// Columns are the coordinates of each target in terms of the basis; nullopt if
/// some target is outside the span.
std::optional<Matrix> express_in(const std::vector<Section>& basis, const std::vector<Section>& targets);

/// zeta_i = sum_j S(t^(lambda)_ji) (x) phi(w_j), i = 1..d_lambda.
std::vector<Section> sections_from_hom(const Algebra& alg, const IrrepPtr& V, const Weight& lambda, const Matrix& phi);
/// Solves the defining constraints on T^(lambda-dagger) (x) V directly.
std::vector<Section> sections_direct(const Algebra& alg, const IrrepPtr& V, const ParabolicData& p,
                                     const Weight& lambda, HomFlavor flavor);

/// Invariant functions E_q (V trivial), per graded piece.
std::map<Weight, std::vector<Section>> invariant_functions(const Algebra& alg, const ParabolicData& p,
                                                           const TruncationPolicy& trunc);
bool is_invariant(const Algebra& alg, const CoeffElement& f, const std::vector<Letter>& gens);
/// Product of two invariants; throws std::logic_error if it is not invariant.
Section product_closure_check(const Algebra& alg, const ParabolicData& p, const Section& a, const Section& b);
/// a zeta and zeta a for a coefficient element a.
Section left_multiply(const Algebra& alg, const CoeffElement& a, const Section& z);
Section right_multiply(const Algebra& alg, const Section& z, const CoeffElement& a);

/// omega(zeta) = (Delta (x) id) zeta
using CoactionImage = std::map<std::pair<CoeffKey, CoeffKey>, Vec>;
CoactionImage omega_coaction(const Algebra& alg, const Section& z);
struct CoactionReport {
    bool coassociative = false, counit = false, compatible = false;
    bool all_pass() const { return coassociative && counit && compatible; }
};
CoactionReport check_coaction(const Algebra& alg, const Section& z, const std::vector<Letter>& gens);

enum class Direction { forward, inverse };
/// eta(f (x) w_j) = sum_i t_ij f (x) w_i; inverse uses S(t_ij).
Section eta_map(const Algebra& alg, const Section& z, Direction d);
/// kappa(f (x) w_j) = sum_i f S^2(t_ij) (x) w_i; inverse uses S(t_ij).
Section kappa_map(const Algebra& alg, const Section& z, Direction d);
/// Every V-coordinate invariant under the generators.
bool in_invariants_tensor(const Algebra& alg, const Section& z, const std::vector<Letter>& gens);
/// Random element of T_q (x) W on the given coefficient weights.
Section random_section(const Algebra& alg, const IrrepPtr& W, std::mt19937_64& rng, const std::vector<Weight>& support,
                       std::size_t terms);

struct LeviComplement {
    IrrepPtr W;
    LeviBranching branching;
    std::size_t summand = 0;             // the copy of V
    std::vector<std::size_t> complement; // V-perp
    bool certified = false;              // P invertible and V found
};
LeviComplement levi_complement(const Algebra& alg, const IrrepPtr& V, const ParabolicData& p);

struct Check {
    std::string name;
    bool pass = false;
    nlohmann::json witness;
};
enum class Status { pass, fail, inconclusive };
const char* status_name(Status s);
struct Report {
    std::string subject;
    Status status = Status::pass;
    std::vector<Check> checks;
    nlohmann::json data;

    void add(std::string name, bool pass, nlohmann::json witness = nullptr);
    /// pass unless a check failed; inconclusive stays inconclusive
    void finish();
    nlohmann::json to_json() const;
};

/// Intertwiner W -> F_q(V) given by its images of the basis of W.
using SectionMap = std::vector<Section>;
/// Fbar(phi)(w_j) = sum_i S(t_ij) (x) phi(w_i)
SectionMap frobenius_bar(const Algebra& alg, const IrrepModule& W, const IrrepPtr& V, const Matrix& phi);
/// F(psi) = psi(1)
Matrix frobenius_f(const SectionMap& psi, std::size_t dimV);
/// Basis of Hom_{U_q}(W, F_q(V) restricted to trunc).
std::vector<SectionMap> module_homs_into_sections(const Algebra& alg, const IrrepModule& W, const IrrepPtr& V,
                                                  const ParabolicData& p, const TruncationPolicy& trunc);
Report frobenius_maps(const Algebra& alg, const IrrepModule& W, const IrrepPtr& V, const ParabolicData& p,
                      const TruncationPolicy& trunc);

/// O_q(V) per graded piece (parabolic constraints).
std::map<Weight, std::vector<Section>> holomorphic_sections(const Algebra& alg, const IrrepPtr& V,
                                                            const ParabolicData& p, const TruncationPolicy& trunc);
/// Dot action of x on a family that spans a submodule, in the family's coordinates.
std::optional<Matrix> dot_matrix(const Algebra& alg, const AlgebraWord& x, const std::vector<Section>& family);

Report borel_weil_check(const Algebra& alg, const IrrepPtr& V, const ParabolicData& p, const TruncationPolicy& trunc);
/// O_q(W) for a full module W: dimension dim W and eta(O_q(W)) = C t^(0) (x) W.
Report full_module_check(const Algebra& alg, const IrrepPtr& W, const ParabolicData& p, const TruncationPolicy& trunc);

}  // namespace qbw
