// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>

#include "qbw/verify.hpp"

int main() {
    using namespace qbw;
    const std::map<std::string, std::string> titles{
        {"relations", "defining relations on the irrep grid"},
        {"dimensions", "Weyl dimensions and Freudenthal multiplicities"},
        {"hopf", "coassociativity, counit, antipode, duality"},
        {"schur", "orthogonality relations and S^2 = Ad K_2rho"},
        {"positivity", "Haar form positive at v0 = 2"},
        {"hom", "parabolic Hom dimension = delta(lowest weights)"},
        {"invariants", "invariant algebra, central count, gamma piece"},
        {"projectivity", "eta/kappa round trips and Levi complements"},
        {"frobenius", "Frobenius reciprocity"},
        {"borel_weil", "Borel-Weil dimensions, dot action, trivial and full modules"},
        {"determinism", "byte-identical verify reports"},
    };
    const auto t0 = std::chrono::steady_clock::now();
    VerifyOptions opt;
    if (const char* dir = std::getenv("QBW_CACHE_DIR")) opt.store = std::make_shared<Store>(dir);
    VerifyResult res = run_verify(opt);
    int n = 0;
    bool all = true;
    for (const auto& s : res.report["suites"]) {
        const std::string name = s["subject"];
        const bool pass = s["status"] == "pass";
        all = all && pass;
        std::size_t failed = 0;
        for (const auto& c : s["checks"]) failed += !c["pass"].get<bool>();
        std::cout << "criterion " << ++n << " " << name << ": " << (pass ? "PASS" : "FAIL") << " ("
                  << s["checks"].size() << " checks";
        if (failed) std::cout << ", " << failed << " failed";
        std::cout << ") " << titles.at(name) << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "overall: " << (all ? "PASS" : "FAIL") << " in " << static_cast<long>(secs) << " s\n";
    return all ? 0 : 1;
}
