#include "qbw/classical.hpp"

#include <algorithm>
#include <stdexcept>

namespace qbw {

Subset full_subset(const CartanData& cd) {
    Subset s(static_cast<std::size_t>(cd.rank()));
    for (int i = 0; i < cd.rank(); ++i) s[i] = i;
    return s;
}

bool is_theta_dominant(const Weight& mu, const Subset& theta) {
    for (int j : theta)
        if (mu.at(j) < 0) return false;
    return true;
}

Weight levi_lowest_weight(const CartanData& cd, const Weight& mu, const Subset& theta) {
    if (!is_theta_dominant(mu, theta))
        throw std::invalid_argument("weight " + weight_to_string(mu) + " is not dominant for the Levi subalgebra");
    Weight w = mu;
    for (;;) {
        auto it = std::find_if(theta.begin(), theta.end(), [&](int j) { return w[j] > 0; });
        if (it == theta.end()) return w;
        w = cd.reflect(w, *it);
    }
}

namespace {

bool in_subset(const Subset& s, int i) {
    return std::find(s.begin(), s.end(), i) != s.end();
}

std::vector<RootVec> theta_roots(const CartanData& cd, const Subset& theta) {
    std::vector<RootVec> out;
    for (const auto& a : cd.positive_roots()) {
        bool ok = true;
        for (int i = 0; i < cd.rank(); ++i)
            if (a[i] != 0 && !in_subset(theta, i)) ok = false;
        if (ok) out.push_back(a);
    }
    return out;
}

// lambda - mu as a nonnegative integer combination of alpha_j, j in theta
bool below(const CartanData& cd, const Weight& lambda, const Weight& mu, const Subset& theta) {
    RootVec c;
    if (!cd.in_root_lattice(lambda - mu, &c)) return false;
    for (int i = 0; i < cd.rank(); ++i) {
        if (c[i] < 0) return false;
        if (c[i] > 0 && !in_subset(theta, i)) return false;
    }
    return true;
}

Weight theta_dominant_conjugate(const CartanData& cd, Weight w, const Subset& theta) {
    for (;;) {
        auto it = std::find_if(theta.begin(), theta.end(), [&](int j) { return w[j] < 0; });
        if (it == theta.end()) return w;
        w = cd.reflect(w, *it);
    }
}

Rational root_height(const CartanData& cd, const Weight& w) {
    Rational h = 0;
    for (const auto& x : cd.weight_to_root(w)) h += x;
    return h;
}

}  // namespace

Character freudenthal_character(const CartanData& cd, const Weight& lambda, const Subset& theta) {
    if (static_cast<int>(lambda.size()) != cd.rank() || !is_theta_dominant(lambda, theta))
        throw std::invalid_argument("freudenthal_character: weight not dominant for the subalgebra");
    RootVec span;
    cd.in_root_lattice(lambda - levi_lowest_weight(cd, lambda, theta), &span);
    const auto roots = theta_roots(cd, theta);
    RootVec two_rho_roots(static_cast<std::size_t>(cd.rank()), 0);
    for (const auto& a : roots)
        for (int i = 0; i < cd.rank(); ++i) two_rho_roots[i] += a[i];
    const Weight two_rho = cd.root_to_weight(two_rho_roots);

    // all c with 0 <= c_i <= span_i, grouped by height
    std::vector<RootVec> cs{RootVec(static_cast<std::size_t>(cd.rank()), 0)};
    for (int i = 0; i < cd.rank(); ++i) {
        std::vector<RootVec> next;
        for (const auto& c : cs)
            for (int k = 0; k <= span[i]; ++k) {
                RootVec d = c;
                d[i] = k;
                next.push_back(d);
            }
        cs = std::move(next);
    }
    std::stable_sort(cs.begin(), cs.end(), [](const RootVec& a, const RootVec& b) { return height(a) < height(b); });

    Character ch;
    for (const auto& c : cs) {
        Weight mu = lambda - cd.root_to_weight(c);
        if (!below(cd, lambda, theta_dominant_conjugate(cd, mu, theta), theta)) continue;
        if (height(c) == 0) {
            ch[mu] = 1;
            continue;
        }
        Rational sum = 0;
        for (const auto& a : roots) {
            Weight step = cd.root_to_weight(a);
            Weight nu = mu + step;
            for (;;) {
                auto it = ch.find(nu);
                if (!below(cd, lambda, nu, theta)) break;
                if (it != ch.end()) sum += Rational(it->second * cd.inner_root(nu, a));
                nu = nu + step;
            }
        }
        Rational denom = cd.inner(lambda - mu, lambda + mu + two_rho);
        Rational m = 2 * sum / denom;
        if (m.get_den() != 1 || m < 0) throw std::logic_error("Freudenthal recursion produced a non-integer");
        if (m > 0) ch[mu] = m.get_num().get_si();
    }
    return ch;
}

Character multiply_characters(const Character& a, const Character& b) {
    Character c;
    for (const auto& [wa, ma] : a)
        for (const auto& [wb, mb] : b) c[wa + wb] += ma * mb;
    return c;
}

std::map<Weight, long> decompose_character(const CartanData& cd, Character ch, const Subset& theta) {
    std::map<Weight, long> out;
    for (;;) {
        std::erase_if(ch, [](const auto& kv) { return kv.second == 0; });
        if (ch.empty()) return out;
        auto top = ch.begin();
        Rational best = root_height(cd, top->first);
        for (auto it = ch.begin(); it != ch.end(); ++it) {
            Rational h = root_height(cd, it->first);
            if (h > best || (h == best && it->first > top->first)) {
                best = h;
                top = it;
            }
        }
        Weight hw = top->first;
        long m = top->second;
        if (m < 0 || !is_theta_dominant(hw, theta)) throw std::logic_error("character is not a module character");
        out[hw] += m;
        for (const auto& [w, k] : freudenthal_character(cd, hw, theta)) ch[w] -= m * k;
    }
}

std::map<Weight, long> char_decompose_oracle(const CartanData& cd, const Weight& lambda, const Weight& mu) {
    return decompose_character(cd, multiply_characters(freudenthal_character(cd, lambda), freudenthal_character(cd, mu)),
                               full_subset(cd));
}

std::map<Weight, long> branching_oracle(const CartanData& cd, const Weight& lambda, const Subset& theta) {
    return decompose_character(cd, freudenthal_character(cd, lambda), theta);
}

}  // namespace qbw
