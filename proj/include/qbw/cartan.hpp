#pragma once

// Root data for the supported simple types. Weights live in fundamental-weight
// coordinates, roots in simple-root coordinates.

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "qbw/scalar.hpp"

namespace qbw {

using Weight = std::vector<int>;   // fundamental coordinates
using RootVec = std::vector<int>;  // simple-root coordinates
using WeylWord = std::vector<int>; // reflection indices, applied left to right

std::string weight_to_string(const Weight& w);
/// Parses "1,0" or "(1,0)"; an empty string yields an empty vector.
Weight parse_weight(const std::string& text);

class CartanData {
public:
    /// Supported names: A1, A2, A3, B2.
    static const CartanData& get(const std::string& name);
    static bool supported(const std::string& name);
    static std::vector<std::string> supported_names();

    const std::string& name() const noexcept { return name_; }
    char type() const noexcept { return type_; }
    int rank() const noexcept { return rank_; }
    int a(int i, int j) const { return A_[i][j]; }
    int d(int i) const { return d_[i]; }
    const std::vector<int>& symmetrizers() const noexcept { return d_; }
    const std::vector<std::vector<int>>& cartan_matrix() const noexcept { return A_; }
    const std::vector<RootVec>& positive_roots() const noexcept { return roots_; }
    const RootVec& two_rho() const noexcept { return two_rho_; }
    const RootVec& highest_root() const noexcept { return highest_root_; }
    /// (alpha_i, alpha_j)
    int root_inner(int i, int j) const { return d_[i] * A_[i][j]; }

    Weight root_to_weight(const RootVec& c) const;
    Weight simple_root(int j) const;
    /// Simple-root coordinates of a weight (rational in general).
    std::vector<Rational> weight_to_root(const Weight& w) const;
    /// Exact root coordinates when the weight lies in the root lattice.
    bool in_root_lattice(const Weight& w, RootVec* out = nullptr) const;

    Rational inner(const Weight& l, const Weight& m) const;
    /// (mu, alpha) for alpha given in simple-root coordinates; always an integer.
    int inner_root(const Weight& mu, const RootVec& alpha) const;
    /// (mu, alpha_i) = d_i mu_i
    int inner_simple(const Weight& mu, int i) const { return d_[i] * mu[i]; }

    Weight reflect(const Weight& mu, int i) const;
    Weight apply(const Weight& mu, const WeylWord& w) const;
    bool is_dominant(const Weight& mu) const;
    Weight zero() const { return Weight(static_cast<std::size_t>(rank_), 0); }
    Weight rho() const { return Weight(static_cast<std::size_t>(rank_), 1); }

    nlohmann::json to_json() const;

private:
    CartanData(std::string name, char type, std::vector<std::vector<int>> A, std::vector<int> d,
               std::vector<RootVec> roots, RootVec highest);

    std::string name_;
    char type_;
    int rank_;
    std::vector<std::vector<int>> A_;
    std::vector<int> d_;
    std::vector<RootVec> roots_;
    RootVec two_rho_;
    RootVec highest_root_;
    std::vector<std::vector<Rational>> Ainv_;
};

int height(const RootVec& c);
Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);

/// w0(lambda), by reflecting until anti-dominant.
Weight lowest_weight(const CartanData& cd, const Weight& lambda);
/// -w0(lambda): highest weight of the dual module.
Weight dagger(const CartanData& cd, const Weight& lambda);
/// Dominant representative of the Weyl orbit of mu, with a word sigma such that
/// cd.apply(mu, sigma) is that representative.
std::pair<Weight, WeylWord> dominant_orbit_rep(const CartanData& cd, const Weight& mu);
/// Classical dimension by the Weyl product formula.
long weyl_dim(const CartanData& cd, const Weight& lambda);

}  // namespace qbw
