#pragma once

// Property suites over fixed grids of weights. Each suite returns a Report with
// one named check per grid point; run_verify assembles them into one JSON
// document whose bytes depend only on the options.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbw/bundle.hpp"

namespace qbw {

struct VerifyOptions {
    std::vector<std::string> suites;    // empty: every suite in canonical order
    std::vector<std::string> algebras;  // empty: A1 A2 A3 B2
    std::optional<int> max_weight;      // caps the coordinate sum of grid weights
    Rational v0 = 2;
    std::uint64_t seed = 20240917;
    bool detail = false;  // per-entry tables (schur)
    std::shared_ptr<const Store> store;

    nlohmann::json to_json() const;
};

const std::vector<std::string>& suite_names();
const std::vector<std::string>& supported_algebras();
bool is_suite(const std::string& name);

/// Algebras shared by the suites of one run.
class Workspace {
public:
    explicit Workspace(std::shared_ptr<const Store> store = nullptr) : store_(std::move(store)) {}
    const Algebra& get(const std::string& name);

private:
    std::shared_ptr<const Store> store_;
    std::map<std::string, std::unique_ptr<Algebra>> algebras_;
};

/// Default irrep grid of an algebra, cut down by max_weight.
std::vector<Weight> irrep_grid(const CartanData& cd, std::optional<int> max_weight);

Report run_suite(const std::string& name, Workspace& ws, const VerifyOptions& opt);

struct VerifyResult {
    nlohmann::json report;
    Status status = Status::pass;
};
/// Runs the selected suites. The determinism suite reruns the others in a fresh
/// workspace and compares the serialized reports byte for byte.
VerifyResult run_verify(const VerifyOptions& opt);

}  // namespace qbw
