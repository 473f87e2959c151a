#include "deza/feasibility.hpp"

#include <stdexcept>

namespace deza {

std::optional<Multiplicities> multiplicities(int v, int k, int b, int a) {
    if (!(0 <= a && a <= b && b <= k && k <= v - 1))
        throw std::invalid_argument("multiplicities: need 0 <= a <= b <= k <= v-1");
    const long kk1 = static_cast<long>(k) * (k - 1);
    if (a == b) {
        if (a == 0) return std::nullopt;  // k(k-1)/a undefined unless k(k-1)=0
        if (kk1 % a != 0) return std::nullopt;
        const long m = kk1 / a;
        return Multiplicities{m, m};
    }
    const long num_alpha = static_cast<long>(b) * (v - 1) - kk1;
    const long num_beta = kk1 - static_cast<long>(a) * (v - 1);
    const long d = b - a;
    if (num_alpha % d != 0 || num_beta % d != 0) return std::nullopt;
    const long alpha = num_alpha / d;
    const long beta = num_beta / d;
    if (alpha < 0 || beta < 0) return std::nullopt;
    return Multiplicities{alpha, beta};
}

std::vector<DezaParams> feasible_params(int v, ParamFilter mode) {
    if (v < 2 || v > Graph::kMaxVertices)
        throw std::invalid_argument("feasible_params: v out of range [2, 64]");
    const bool strict = mode == ParamFilter::Strict;
    std::vector<DezaParams> out;
    for (int k = 1; k <= v - 2; ++k) {
        if (strict && (static_cast<long>(v) * k) % 2 != 0) continue;  // handshake
        for (int b = 1; b <= k; ++b)
            for (int a = 0; a <= (strict ? b - 1 : b); ++a) {
                const auto m = multiplicities(v, k, b, a);
                if (!m) continue;
                if (strict && (m->alpha < 1 || m->beta < 1)) continue;
                // Lemma 1 (ii): alpha != 0 forces v >= 2k - a.
                if (m->alpha != 0 && v < 2 * k - a) continue;
                // Lemma 1 (iii) is equivalent to alpha,beta > 0 given the
                // formulas, so it needs no separate test.
                out.push_back(DezaParams{v, k, b, a, m->alpha, m->beta});
            }
    }
    return out;
}

}  // namespace deza
