#pragma once

// Levi and parabolic subalgebras attached to theta, branching of W(lambda) to
// the Levi subalgebra, and intertwiner spaces.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "qbw/context.hpp"

namespace qbw {

enum class HomFlavor { levi, parabolic };
const char* flavor_name(HomFlavor f);

struct ParabolicData {
    const CartanData* cd = nullptr;
    Subset theta;
    std::vector<Letter> levi_generators;       // k_i^{+-1} for all i, e_j, f_j for j in theta
    std::vector<Letter> parabolic_generators;  // levi ones plus e_j for j outside theta

    ParabolicData(const CartanData& cd, Subset theta);
    bool in_theta(int j) const;
    const std::vector<Letter>& generators(HomFlavor f) const {
        return f == HomFlavor::levi ? levi_generators : parabolic_generators;
    }
};

/// Any module given by weights and generator matrices (K is read off the weights).
struct ModuleView {
    std::vector<Weight> weights;
    const std::vector<Matrix>* E = nullptr;
    const std::vector<Matrix>* F = nullptr;
};
ModuleView view(const IrrepModule& m);
ModuleView view(const TensorModule& t);

/// Basis of the weight preserving maps phi: src -> tgt with phi X_src = X_tgt phi
/// for the listed e/f generators (k generators are implied by weight preservation).
std::vector<Matrix> solve_intertwiners(const ModuleView& src, const ModuleView& tgt, const std::vector<Letter>& gens);

struct LeviSummand {
    Weight mu;
    std::size_t copy = 0;
    std::size_t offset = 0;
    IrrepPtr irrep;    // Levi irrep V_mu
    Matrix embedding;  // dim W x dim V_mu, intertwines the Levi generators
};

struct LeviBranching {
    Weight lambda;
    Subset theta;
    std::vector<LeviSummand> summands;
    Matrix P, Pinv;  // all embeddings side by side, and the inverse

    std::map<Weight, long> multiplicities() const;
    /// Projection W -> V_mu of a summand (rows of Pinv).
    Matrix projection(std::size_t summand) const;
};

/// Complete decomposition into Levi irreps, generated from Levi highest weight
/// vectors by the canonical f-words of the Levi irreps.
LeviBranching restrict_levi(const Algebra& alg, const IrrepModule& m, const ParabolicData& p);

struct HomBasis {
    HomFlavor flavor = HomFlavor::levi;
    Weight lambda;   // source W(lambda)
    IrrepPtr target; // V_mu
    std::vector<Matrix> maps;

    std::size_t dim() const noexcept { return maps.size(); }
};

HomBasis hom_space(const IrrepModule& m, const IrrepPtr& target, const ParabolicData& p,
                   HomFlavor flavor);
/// Checks phi x = x phi for every generator of the flavor, including the zero
/// action of e_j (j outside theta) on the target.
bool is_intertwiner(const IrrepModule& src, const IrrepModule& tgt, const Matrix& phi, const ParabolicData& p,
                    HomFlavor flavor);

struct HomElement {
    Weight lambda;
    IrrepPtr target;
    Matrix phi;
};

/// W(l1 + l2) -> W(l1) (x) W(l2) -> V_{m1} (x) V_{m2} -> V_{m1 + m2}.
HomElement tensor_hom(const Algebra& alg, const ParabolicData& p, const HomElement& a, const HomElement& b);

/// dim Hom_{U_q(l)}(W(gamma), C) for the highest root gamma.
long central_hom_count(const Algebra& alg, const ParabolicData& p);

/// Predicted parabolic Hom dimension: 1 if the lowest weights agree, else 0.
long predicted_parabolic_dim(const CartanData& cd, const Weight& lambda, const Weight& mu, const Subset& theta);

nlohmann::json hom_to_json(const HomBasis& h);

}  // namespace qbw
