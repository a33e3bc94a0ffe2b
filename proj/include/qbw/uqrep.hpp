#pragma once

// Finite-dimensional type-1 modules W(lambda) of U_q(g), and of the Levi
// subalgebras U_q(l) attached to a subset theta, as explicit generator matrices.

#include <nlohmann/json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbw/algebra_word.hpp"
#include "qbw/cartan.hpp"
#include "qbw/classical.hpp"
#include "qbw/matrix.hpp"

namespace qbw {

struct WeightBlock {
    Weight weight;
    std::size_t start = 0;
    std::size_t size = 0;
};

/// Generator matrices act on column vectors. The basis is built from the highest
/// weight vector by f-words: basis vector b (b > 0) equals f_{letter[b]} applied
/// to basis vector parent[b]. Basis vectors of one weight are contiguous, weights
/// ordered by depth below the highest weight.
struct IrrepModule {
    const CartanData* cd = nullptr;
    Weight lambda;
    Subset theta;  // all indices for a U_q(g)-module
    std::vector<Weight> weights;
    std::vector<WeightBlock> blocks;
    std::vector<long> parent;
    std::vector<int> letter;
    std::vector<Matrix> E, F, K, Kinv;  // E_j = F_j = 0 for j outside theta
    Matrix gram;                        // contravariant form, (v+, v+) = 1

    std::size_t dim() const noexcept { return weights.size(); }
    bool is_levi() const { return static_cast<int>(theta.size()) != cd->rank(); }
    const WeightBlock* block_of(const Weight& mu) const;
    std::size_t block_index(std::size_t basis_index) const;

    const Matrix& letter_matrix(const Letter& l) const;
    Matrix act(const Word& w) const;
    Matrix act(const AlgebraWord& x) const;
    /// v-exponent of k_i on basis vector b
    int k_exponent(std::size_t b, int i) const { return cd->inner_simple(weights[b], i); }
    /// Indices j in theta, i.e. generators e_j, f_j that act nontrivially.
    bool in_theta(int j) const;
};

using IrrepPtr = std::shared_ptr<const IrrepModule>;

/// W(lambda) for U_q(g); lambda must be dominant.
IrrepPtr build_irrep(const CartanData& cd, const Weight& lambda);
/// Irreducible U_q(l)-module with highest weight mu (theta-dominant), full torus.
IrrepPtr build_levi_irrep(const CartanData& cd, const Weight& mu, const Subset& theta);

/// Images of the canonical basis of m under the module map sending the highest
/// weight vector to hw, computed in a module whose F matrices are given.
std::vector<Vec> canonical_images(const IrrepModule& m, const std::vector<Matrix>& F_other, const Vec& hw);
/// Same, with f_i applied by a callback.
std::vector<Vec> canonical_images(const IrrepModule& m, const std::function<Vec(int, const Vec&)>& apply_f,
                                  const Vec& hw);

struct RelationCheck {
    std::string name;
    bool pass = false;
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass() const;
    std::vector<std::string> failures() const;
};

/// Checks every defining relation of U_q (or of U_q(l) for Levi modules) on the
/// given matrices. Works on any module given by E, F, K, K^-1 matrices and weights.
RelationReport check_relations(const CartanData& cd, const Subset& theta, const std::vector<Matrix>& E,
                               const std::vector<Matrix>& F, const std::vector<Matrix>& K,
                               const std::vector<Matrix>& Kinv);
RelationReport check_serre(const IrrepModule& m);

/// gram(x u, w) = gram(u, x* w) for all generators.
bool check_contravariance(const IrrepModule& m);

Matrix act_word(const IrrepModule& m, const AlgebraWord& x);
Matrix cartan_monomial_matrix(const IrrepModule& m, const CartanMonomial& c);
/// Trace of K_{2rho}.
RationalFunction quantum_dimension(const IrrepModule& m);

/// Sparse [row, col, canonical scalar text] triples.
nlohmann::json sparse_json(const Matrix& m);
Matrix sparse_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);

nlohmann::json irrep_to_json(const IrrepModule& m);
IrrepPtr irrep_from_json(const nlohmann::json& j);

}  // namespace qbw
