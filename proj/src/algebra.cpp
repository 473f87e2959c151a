#include "deza/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <Eigen/Dense>

namespace deza {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

Matrix adjacency_matrix(const Graph& g) {
    const int n = g.order();
    Matrix m(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
    for (int u = 0; u < n; ++u)
        for (int w = 0; w < n; ++w)
            if (g.adjacent(u, w)) m[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = 1;
    return m;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
    const std::size_t n = x.size();
    Matrix out(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (x[i][k] == 0) continue;
            const BigInt& f = x[i][k];
            for (std::size_t j = 0; j < n; ++j)
                if (y[k][j] != 0) out[i][j] += f * y[k][j];
        }
    return out;
}

BigInt trace(const Matrix& m) {
    BigInt t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

}  // namespace

std::vector<BigInt> char_poly(const Graph& g) {
    const int n = g.order();
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1),
    // M_k = A (M_{k-1} + c_{n-k+1} I), c_{n-k} = -tr(M_k)/k (exact division).
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, 0);
    c[static_cast<std::size_t>(n)] = 1;
    const Matrix a = adjacency_matrix(g);
    Matrix m = a;
    c[static_cast<std::size_t>(n - 1)] = -trace(m);
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] +=
                c[static_cast<std::size_t>(n - k + 1)];
        m = multiply(a, m);
        c[static_cast<std::size_t>(n - k)] = -trace(m) / k;
    }
    return c;
}

namespace {

int degree(const std::vector<BigInt>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[static_cast<std::size_t>(i)] != 0) return i;
    return -1;  // zero polynomial
}

void trim(std::vector<BigInt>& p) { p.resize(static_cast<std::size_t>(degree(p) + 1)); }

BigInt content(const std::vector<BigInt>& p) {
    BigInt c = 0;
    for (const BigInt& x : p) c = boost::multiprecision::gcd(c, x);
    return c;
}

void make_primitive(std::vector<BigInt>& p) {
    const BigInt c = content(p);
    if (c > 1)
        for (BigInt& x : p) x /= c;
    if (!p.empty() && p.back() < 0)
        for (BigInt& x : p) x = -x;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const int db = degree(b);
    const BigInt lead_b = b[static_cast<std::size_t>(db)];
    int da = degree(a);
    while (da >= db && da >= 0) {
        const BigInt lead_a = a[static_cast<std::size_t>(da)];
        for (int i = 0; i <= da; ++i) a[static_cast<std::size_t>(i)] *= lead_b;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(da - db + i)] -= lead_a * b[static_cast<std::size_t>(i)];
        trim(a);
        da = degree(a);
    }
    return a;
}

}  // namespace

std::vector<BigInt> poly_derivative(const std::vector<BigInt>& p) {
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    if (d.empty()) d.push_back(0);
    return d;
}

std::vector<BigInt> poly_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
    trim(a);
    trim(b);
    make_primitive(a);
    make_primitive(b);
    if (degree(a) < degree(b)) std::swap(a, b);
    while (degree(b) >= 0) {
        std::vector<BigInt> r = pseudo_rem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Spectrum spectrum(const Graph& g) {
    const int n = g.order();
    std::vector<BigInt> p = char_poly(g);

    // Peel integer roots exactly. Adjacency eigenvalues lie in [-(n-1), n-1].
    std::map<long, int> integer_roots;
    for (long t = -(n - 1); t <= n - 1 && degree(p) > 0;) {
        // Synthetic division by (x - t); remainder is p(t).
        std::vector<BigInt> q(p.size() - 1);
        BigInt acc = p.back();
        for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
            q[static_cast<std::size_t>(i)] = acc;
            acc = acc * t + p[static_cast<std::size_t>(i)];
        }
        if (acc == 0) {
            ++integer_roots[t];
            p = std::move(q);
        } else {
            ++t;
        }
    }

    Spectrum s;
    s.integral = degree(p) <= 0;

    // Exact count of distinct eigenvalues via the square-free part.
    std::vector<BigInt> full = char_poly(g);
    const std::vector<BigInt> gcd_pp = poly_gcd(full, poly_derivative(full));
    s.distinct_count = n - std::max(degree(gcd_pp), 0);

    for (const auto& [value, mult] : integer_roots)
        s.entries.push_back(SpectrumEntry{true, value, static_cast<double>(value), mult});

    if (!s.integral) {
        // Remaining eigenvalues reported numerically, clustered within 1e-6.
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < n; ++w)
                if (g.adjacent(u, w)) a(u, w) = 1.0;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
        std::vector<double> vals(solver.eigenvalues().data(),
                                 solver.eigenvalues().data() + n);
        std::sort(vals.begin(), vals.end());
        // Drop the ones already accounted for exactly.
        for (const auto& [value, mult] : integer_roots) {
            for (int c = 0; c < mult; ++c) {
                auto it = std::min_element(vals.begin(), vals.end(), [&](double x, double y) {
                    return std::abs(x - value) < std::abs(y - value);
                });
                vals.erase(it);
            }
        }
        std::size_t i = 0;
        while (i < vals.size()) {
            std::size_t j = i + 1;
            while (j < vals.size() && vals[j] - vals[j - 1] < 1e-6) ++j;
            double mean = 0;
            for (std::size_t t = i; t < j; ++t) mean += vals[t];
            mean /= static_cast<double>(j - i);
            s.entries.push_back(SpectrumEntry{false, 0, mean, static_cast<int>(j - i)});
            i = j;
        }
        std::sort(s.entries.begin(), s.entries.end(),
                  [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.approx < y.approx; });
    }
    return s;
}

namespace {

CoherentConfiguration renumber_row_major(int n, const std::vector<long>& raw) {
    CoherentConfiguration cc;
    cc.n = n;
    cc.classes.assign(raw.size(), -1);
    std::map<long, int> ids;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto [it, fresh] = ids.emplace(raw[i], static_cast<int>(ids.size()));
        cc.classes[i] = it->second;
    }
    cc.rank = static_cast<int>(ids.size());
    return cc;
}

CoherentConfiguration refine_rounds(int n, std::vector<long> colors, bool single_round) {
    std::map<std::vector<long>, long> signature_ids;
    while (true) {
        signature_ids.clear();
        std::vector<long> next(colors.size());
        std::vector<long> sig;
        sig.reserve(2 * static_cast<std::size_t>(n) + 1);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                sig.clear();
                sig.push_back(colors[static_cast<std::size_t>(x) * n + y]);
                std::vector<long> parts;
                parts.reserve(static_cast<std::size_t>(n));
                for (int z = 0; z < n; ++z)
                    parts.push_back(colors[static_cast<std::size_t>(x) * n + z] * (4L * n * n) +
                                    colors[static_cast<std::size_t>(z) * n + y]);
                std::sort(parts.begin(), parts.end());
                sig.insert(sig.end(), parts.begin(), parts.end());
                auto [it, fresh] = signature_ids.emplace(sig, static_cast<long>(signature_ids.size()));
                next[static_cast<std::size_t>(x) * n + y] = it->second;
            }
        const bool stable = signature_ids.size() ==
                            static_cast<std::size_t>(renumber_row_major(n, colors).rank);
        colors = std::move(next);
        if (stable || single_round) break;
    }
    return renumber_row_major(n, colors);
}

}  // namespace

CoherentConfiguration wl_closure(const Graph& g) {
    const int n = g.order();
    std::vector<long> colors(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            colors[static_cast<std::size_t>(x) * n + y] = x == y ? 0 : (g.adjacent(x, y) ? 1 : 2);
    return refine_rounds(n, std::move(colors), false);
}

CoherentConfiguration wl_refine_once(const CoherentConfiguration& cc) {
    std::vector<long> colors(cc.classes.begin(), cc.classes.end());
    return refine_rounds(cc.n, std::move(colors), true);
}

std::optional<AssociationScheme> scheme_from_closure(const CoherentConfiguration& cc) {
    const int n = cc.n;
    const int diag = cc.class_of(0, 0);
    for (int x = 1; x < n; ++x)
        if (cc.class_of(x, x) != diag) return std::nullopt;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (cc.class_of(x, y) != cc.class_of(y, x)) return std::nullopt;

    // Diagonal class first, remaining classes in id order.
    std::vector<int> order{diag};
    for (int c = 0; c < cc.rank; ++c)
        if (c != diag) order.push_back(c);
    std::vector<std::vector<std::uint64_t>> relations(
        static_cast<std::size_t>(cc.rank),
        std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int c = cc.class_of(x, y);
            const int slot = static_cast<int>(std::find(order.begin(), order.end(), c) -
                                              order.begin());
            relations[static_cast<std::size_t>(slot)][static_cast<std::size_t>(x)] |=
                std::uint64_t{1} << y;
        }
    return build_scheme(n, std::move(relations));
}

}  // namespace deza
