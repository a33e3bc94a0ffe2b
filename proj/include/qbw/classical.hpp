#pragma once

// Classical (q = 1) character theory. Used as an independent reference for the
// quantum constructions: weight multiplicities, tensor product and branching
// multiplicities never go through the generator matrices.

#include <map>
#include <vector>

#include "qbw/cartan.hpp"

namespace qbw {

using Character = std::map<Weight, long>;
/// Subset of simple-root indices (0-based), sorted.
using Subset = std::vector<int>;

Subset full_subset(const CartanData& cd);

/// Formal character of the irreducible module with highest weight lambda for the
/// Levi subalgebra attached to theta (theta = all indices gives g itself), by
/// Freudenthal's recursion. lambda must be theta-dominant.
Character freudenthal_character(const CartanData& cd, const Weight& lambda, const Subset& theta);
inline Character freudenthal_character(const CartanData& cd, const Weight& lambda) {
    return freudenthal_character(cd, lambda, full_subset(cd));
}

Character multiply_characters(const Character& a, const Character& b);

/// Peels off leading characters; returns highest weights with multiplicities.
std::map<Weight, long> decompose_character(const CartanData& cd, Character ch, const Subset& theta);

/// Classical Clebsch-Gordan multiplicities of W(lambda) (x) W(mu).
std::map<Weight, long> char_decompose_oracle(const CartanData& cd, const Weight& lambda, const Weight& mu);

/// Multiplicities of Levi constituents of W(lambda) restricted to theta.
std::map<Weight, long> branching_oracle(const CartanData& cd, const Weight& lambda, const Subset& theta);

/// Lowest weight of a Levi module: longest element of W_theta applied to mu.
Weight levi_lowest_weight(const CartanData& cd, const Weight& mu, const Subset& theta);
bool is_theta_dominant(const Weight& mu, const Subset& theta);

}  // namespace qbw
