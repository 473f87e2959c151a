#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "deza/graph.hpp"
#include "deza/scheme.hpp"

namespace deza {

using BigInt = boost::multiprecision::cpp_int;

/// Exact characteristic polynomial of the adjacency matrix, as coefficients
/// c[0..n] of c[0] + c[1] x + ... + c[n] x^n with c[n] = 1.
std::vector<BigInt> char_poly(const Graph& g);

struct SpectrumEntry {
    bool is_integer = false;
    long value = 0;    // set when is_integer
    double approx = 0; // always set
    int multiplicity = 0;
};

struct Spectrum {
    std::vector<SpectrumEntry> entries;  // ascending by value
    bool integral = false;
    int distinct_count = 0;  // number of distinct eigenvalues, principal included
};

/// Integer eigenvalues extracted exactly by rational-root factorization;
/// distinct_count from the degree of the square-free part (exact for any
/// spectrum); remaining irrational eigenvalues reported numerically.
Spectrum spectrum(const Graph& g);

/// Stable partition of ordered vertex pairs under 2-dimensional
/// Weisfeiler-Leman refinement, class ids numbered by first occurrence in
/// row-major order.
struct CoherentConfiguration {
    int n = 0;
    std::vector<int> classes;  // class id of pair (x,y) at index x*n + y
    int rank = 0;

    int class_of(int x, int y) const {
        return classes[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(y)];
    }
};

CoherentConfiguration wl_closure(const Graph& g);

/// Runs one more refinement round; used to check stability.
CoherentConfiguration wl_refine_once(const CoherentConfiguration& cc);

/// Packages the closure as an association scheme when the diagonal is a
/// single class and all classes are symmetric; nullopt otherwise.
std::optional<AssociationScheme> scheme_from_closure(const CoherentConfiguration& cc);

// Exact polynomial helpers (integer coefficients), exposed for tests.
std::vector<BigInt> poly_derivative(const std::vector<BigInt>& p);
std::vector<BigInt> poly_gcd(std::vector<BigInt> a, std::vector<BigInt> b);

}  // namespace deza
