#pragma once

#include <optional>
#include <vector>

#include "deza/graph.hpp"

namespace deza {

struct Multiplicities {
    long alpha = 0;
    long beta = 0;
};

/// Per-vertex multiplicities for (v,k,b,a): with a != b,
///   alpha = (b(v-1) - k(k-1)) / (b-a),  beta = (a(v-1) - k(k-1)) / (a-b);
/// with a == b, alpha = beta = k(k-1)/a. nullopt when not a pair of
/// non-negative integers.
std::optional<Multiplicities> multiplicities(int v, int k, int b, int a);

/// Strict is the documented default: Lemma 1 conditions, integral
/// non-negative multiplicities, a < b, alpha >= 1, beta >= 1, and v*k even.
/// Relaxed drops the parity, a < b, and alpha/beta >= 1 filters (a == b
/// tuples are kept when k(k-1)/a is integral), for probing the published
/// feasible-parameter counts.
enum class ParamFilter { Strict, Relaxed };

/// All feasible (v,k,b,a) tuples with 1 <= k <= v-2 in lexicographic
/// (k,b,a) order, each carrying its multiplicities.
std::vector<DezaParams> feasible_params(int v, ParamFilter mode = ParamFilter::Strict);

}  // namespace deza
