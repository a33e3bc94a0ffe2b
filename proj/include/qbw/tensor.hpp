#pragma once

// Tensor products through the coproduct and their Clebsch-Gordan decomposition
// into canonical irreducible blocks.

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "qbw/uqrep.hpp"

namespace qbw {

/// W(lambda) (x) W(mu); product basis index i * dim(mu) + k. Both factors may
/// also be modules of the same Levi subalgebra.
struct TensorModule {
    const CartanData* cd = nullptr;
    Subset theta;
    IrrepPtr a, b;
    std::vector<Weight> weights;
    std::vector<Matrix> E, F, K, Kinv;

    std::size_t dim() const noexcept { return weights.size(); }
    std::vector<std::size_t> indices_of(const Weight& mu) const;
};

TensorModule tensor_module(const IrrepPtr& a, const IrrepPtr& b);

/// Basis (columns) of the weight-nu vectors killed by every E_j, in the
/// canonical order of the reduced echelon kernel.
Matrix highest_weight_vectors(const TensorModule& t, const Weight& nu);

/// Inverse of a square matrix mapping a weight basis (col_weights) to a weight
/// basis (row_weights), inverted one weight space at a time.
Matrix graded_inverse(const Matrix& P, const std::vector<Weight>& row_weights, const std::vector<Weight>& col_weights);

using IrrepSource = std::function<IrrepPtr(const Weight&)>;

struct CGComponent {
    Weight nu;
    std::size_t copy = 0;    // index within the isotypic component
    std::size_t offset = 0;  // first column in the embedding
    IrrepPtr irrep;
};

struct CGDecomposition {
    Weight lambda, mu;
    std::vector<CGComponent> components;
    Matrix P;     // columns: canonical block bases in product coordinates
    Matrix Pinv;  // inverse change of basis

    std::map<Weight, long> multiplicities() const;
};

using CGPtr = std::shared_ptr<const CGDecomposition>;

/// Full decomposition; each block is generated from its highest weight vector by
/// the canonical f-words of build_irrep(nu), so conjugated matrices equal the
/// canonical ones exactly. Components ordered by decreasing height of nu.
CGPtr decompose(const IrrepPtr& a, const IrrepPtr& b, const IrrepSource& source);
CGPtr decompose(const TensorModule& t, const IrrepSource& source);
inline CGPtr decompose(const TensorModule& t) {
    const CartanData* cd = t.cd;
    return decompose(t, [cd](const Weight& w) { return build_irrep(*cd, w); });
}

/// Pinv * X_product * P equals the block-diagonal canonical matrices for all generators.
bool check_block_diagonal(const TensorModule& t, const CGDecomposition& cg);

nlohmann::json cg_to_json(const CGDecomposition& cg);
CGPtr cg_from_json(const nlohmann::json& j, const IrrepSource& source);

}  // namespace qbw
