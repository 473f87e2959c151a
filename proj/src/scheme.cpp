#include "deza/scheme.hpp"

#include <bit>
#include <stdexcept>

namespace deza {

std::optional<AssociationScheme> build_scheme(int n,
                                              std::vector<std::vector<std::uint64_t>> relations) {
    if (relations.empty() || n < 1 || n > 64) return std::nullopt;
    const int nm = static_cast<int>(relations.size());
    const std::uint64_t full = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);

    // (i) A_0 = I.
    for (int x = 0; x < n; ++x)
        if (relations[0][static_cast<std::size_t>(x)] != (std::uint64_t{1} << x)) return std::nullopt;
    // (ii) sum A_i = J, checked as a disjoint cover; (iii) symmetry.
    for (int x = 0; x < n; ++x) {
        std::uint64_t seen = 0;
        for (const auto& rel : relations) {
            if (seen & rel[static_cast<std::size_t>(x)]) return std::nullopt;
            seen |= rel[static_cast<std::size_t>(x)];
        }
        if (seen != full) return std::nullopt;
    }
    for (const auto& rel : relations)
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (((rel[static_cast<std::size_t>(x)] >> y) & 1) !=
                    ((rel[static_cast<std::size_t>(y)] >> x) & 1))
                    return std::nullopt;

    // (iv) A_i A_j constant on every class; record p^k_{ij}.
    auto class_of = [&](int x, int y) {
        for (int c = 0; c < nm; ++c)
            if ((relations[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] >> y) & 1)
                return c;
        return -1;
    };
    AssociationScheme s;
    s.n = n;
    s.d = nm - 1;
    s.relations = std::move(relations);
    s.p.assign(static_cast<std::size_t>(nm),
               std::vector<std::vector<int>>(static_cast<std::size_t>(nm),
                                             std::vector<int>(static_cast<std::size_t>(nm), -1)));
    for (int i = 0; i < nm; ++i)
        for (int j = 0; j < nm; ++j)
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) {
                    const int prod = std::popcount(s.relations[static_cast<std::size_t>(i)]
                                                               [static_cast<std::size_t>(x)] &
                                                   s.relations[static_cast<std::size_t>(j)]
                                                               [static_cast<std::size_t>(y)]);
                    const int k = class_of(x, y);
                    int& slot = s.p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                   [static_cast<std::size_t>(k)];
                    if (slot < 0)
                        slot = prod;
                    else if (slot != prod)
                        return std::nullopt;
                }
    return s;
}

Graph fusion_graph(const AssociationScheme& s, const std::vector<int>& classes) {
    Graph g(s.n);
    for (int c : classes) {
        if (c < 1 || c > s.d) throw std::invalid_argument("fusion_graph: class out of range");
        for (int x = 0; x < s.n; ++x) {
            std::uint64_t bits = s.relations[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
            g.set_row(x, g.row(x) | bits);
        }
    }
    g.check_invariants();
    return g;
}

}  // namespace deza
