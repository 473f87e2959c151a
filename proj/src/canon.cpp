#include "deza/canon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "deza/graph6.hpp"

namespace deza {

Perm identity_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

Perm compose(const Perm& f, const Perm& g) {
    Perm out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
        out[i] = f[static_cast<std::size_t>(g[i])];
    return out;
}

Perm inverse(const Perm& f) {
    Perm out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
    return out;
}

ColoredGraph with_unit_partition(const Graph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.order()));
    std::iota(all.begin(), all.end(), 0);
    return ColoredGraph{g, {all}};
}

namespace {

// Ordered partition as a vertex sequence with cell-start markers. Cells are
// identified by their start position, which is stable under splitting.
struct Partition {
    std::vector<int> verts;
    std::vector<int> pos;     // pos[v] = index of v in verts
    std::vector<char> start;  // start[i] set iff verts[i] opens a cell

    int n() const { return static_cast<int>(verts.size()); }

    int cell_end(int s) const {
        int e = s + 1;
        while (e < n() && !start[static_cast<std::size_t>(e)]) ++e;
        return e;
    }

    bool discrete() const {
        return std::all_of(start.begin(), start.end(), [](char c) { return c != 0; });
    }
};

Partition initial_partition(const ColoredGraph& cg) {
    const int n = cg.graph.order();
    Partition p;
    p.verts.reserve(static_cast<std::size_t>(n));
    p.start.assign(static_cast<std::size_t>(n), 0);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (const auto& cls : cg.colors) {
        if (cls.empty()) continue;
        p.start[p.verts.size()] = 1;
        for (int v : cls) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("ColoredGraph: colors must partition the vertex set");
            seen[static_cast<std::size_t>(v)] = 1;
            p.verts.push_back(v);
        }
    }
    if (static_cast<int>(p.verts.size()) != n)
        throw std::invalid_argument("ColoredGraph: colors must cover every vertex");
    p.pos.assign(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) p.pos[static_cast<std::size_t>(p.verts[i])] = i;
    return p;
}

// Equitable degree refinement. Splits cells by neighbour counts into each
// splitter cell until stable; subcells are ordered by ascending count, which
// keeps the result invariant under color-preserving relabeling.
void refine(const Graph& g, Partition& p) {
    const int n = p.n();
    std::vector<std::pair<int, int>> keyed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < n; s = p.cell_end(s)) {
            std::uint64_t mask = 0;
            for (int i = s, e = p.cell_end(s); i < e; ++i)
                mask |= std::uint64_t{1} << p.verts[static_cast<std::size_t>(i)];
            for (int t = 0; t < n;) {
                const int te = p.cell_end(t);
                if (te - t > 1) {
                    keyed.clear();
                    bool uniform = true;
                    for (int i = t; i < te; ++i) {
                        const int v = p.verts[static_cast<std::size_t>(i)];
                        const int c = std::popcount(g.row(v) & mask);
                        keyed.emplace_back(c, v);
                        if (c != keyed.front().first) uniform = false;
                    }
                    if (!uniform) {
                        std::stable_sort(keyed.begin(), keyed.end());
                        for (int i = t; i < te; ++i) {
                            p.verts[static_cast<std::size_t>(i)] =
                                keyed[static_cast<std::size_t>(i - t)].second;
                            p.pos[static_cast<std::size_t>(p.verts[static_cast<std::size_t>(i)])] = i;
                            if (i > t && keyed[static_cast<std::size_t>(i - t)].first !=
                                             keyed[static_cast<std::size_t>(i - t - 1)].first)
                                p.start[static_cast<std::size_t>(i)] = 1;
                        }
                        changed = true;
                    }
                }
                t = te;
            }
        }
    }
}

void individualize(Partition& p, int v) {
    const int i = p.pos[static_cast<std::size_t>(v)];
    int s = i;
    while (!p.start[static_cast<std::size_t>(s)]) --s;
    std::swap(p.verts[static_cast<std::size_t>(s)], p.verts[static_cast<std::size_t>(i)]);
    p.pos[static_cast<std::size_t>(p.verts[static_cast<std::size_t>(i)])] = i;
    p.pos[static_cast<std::size_t>(v)] = s;
    if (s + 1 < p.n()) p.start[static_cast<std::size_t>(s + 1)] = 1;
}

// Smallest non-singleton cell, earliest position on ties; -1 when discrete.
int select_target_cell(const Partition& p) {
    int best = -1, best_size = 1 << 30;
    for (int s = 0; s < p.n(); s = p.cell_end(s)) {
        const int size = p.cell_end(s) - s;
        if (size > 1 && size < best_size) {
            best = s;
            best_size = size;
        }
    }
    return best;
}

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
};

class CanonSearch {
public:
    CanonSearch(const Graph& g, Partition root) : g_(g), root_(std::move(root)) {}

    CanonicalResult run() {
        refine(g_, root_);
        recurse(root_);
        CanonicalResult out;
        out.form.bytes = best_bytes_;
        out.labeling = best_perm_;
        out.generators = gens_;
        return out;
    }

private:
    void recurse(const Partition& p) {
        const int target = select_target_cell(p);
        if (target < 0) {
            handle_leaf(p);
            return;
        }
        const int end = p.cell_end(target);
        std::vector<int> candidates(p.verts.begin() + target, p.verts.begin() + end);
        std::sort(candidates.begin(), candidates.end());

        std::vector<int> tried;
        for (int v : candidates) {
            if (in_tried_orbit(v, tried)) continue;
            Partition child = p;
            individualize(child, v);
            refine(g_, child);
            base_.push_back(v);
            recurse(child);
            base_.pop_back();
            tried.push_back(v);
        }
    }

    bool in_tried_orbit(int v, const std::vector<int>& tried) {
        if (tried.empty()) return false;
        DisjointSet ds(g_.order());
        for (const Perm& gen : gens_) {
            bool fixes_base = true;
            for (int b : base_)
                if (gen[static_cast<std::size_t>(b)] != b) {
                    fixes_base = false;
                    break;
                }
            if (!fixes_base) continue;
            for (int u = 0; u < g_.order(); ++u) ds.unite(u, gen[static_cast<std::size_t>(u)]);
        }
        for (int t : tried)
            if (ds.find(t) == ds.find(v)) return true;
        return false;
    }

    void handle_leaf(const Partition& p) {
        Perm perm(static_cast<std::size_t>(g_.order()));
        for (int i = 0; i < p.n(); ++i) perm[static_cast<std::size_t>(p.verts[static_cast<std::size_t>(i)])] = i;
        const std::string bytes = to_graph6(apply_permutation(g_, perm));

        if (!have_first_) {
            have_first_ = true;
            first_perm_ = perm;
            first_bytes_ = bytes;
            best_perm_ = perm;
            best_bytes_ = bytes;
            return;
        }
        if (bytes == first_bytes_) {
            add_automorphism(compose(inverse(perm), first_perm_));
        } else if (bytes == best_bytes_) {
            add_automorphism(compose(inverse(perm), best_perm_));
        }
        if (bytes > best_bytes_) {
            best_bytes_ = bytes;
            best_perm_ = perm;
        }
    }

    void add_automorphism(Perm gamma) {
        if (is_identity(gamma)) return;
        if (std::find(gens_.begin(), gens_.end(), gamma) == gens_.end())
            gens_.push_back(std::move(gamma));
    }

    const Graph& g_;
    Partition root_;
    std::vector<int> base_;
    std::vector<Perm> gens_;
    bool have_first_ = false;
    Perm first_perm_;
    std::string first_bytes_;
    Perm best_perm_;
    std::string best_bytes_;
};

}  // namespace

CanonicalResult canonical_labeling(const ColoredGraph& cg) {
    CanonSearch search(cg.graph, initial_partition(cg));
    return search.run();
}

CanonicalForm canonical_form(const ColoredGraph& cg) { return canonical_labeling(cg).form; }

CanonicalForm canonical_form(const Graph& g) { return canonical_form(with_unit_partition(g)); }

namespace {

// Schreier-Sims stabilizer chain. Kept simple: whenever a Schreier generator
// fails to sift to the identity, the residue joins the generator pool and
// every level is rebuilt. Orders here are tiny, so the fixpoint converges in
// a handful of rounds.
class StabilizerChain {
public:
    explicit StabilizerChain(int n) : n_(n) {}

    void build(const std::vector<Perm>& gens) {
        for (const Perm& g : gens) add_generator(g);
        while (true) {
            rebuild();
            Perm residue = find_violation();
            if (residue.empty()) break;
            add_generator(residue);
        }
    }

    boost::multiprecision::cpp_int order() const {
        boost::multiprecision::cpp_int o = 1;
        for (const Level& lvl : levels_) o *= static_cast<long>(lvl.orbit.size());
        return o;
    }

private:
    struct Level {
        std::vector<Perm> sgens;        // generators fixing all earlier base points
        std::vector<int> orbit;
        std::vector<Perm> transversal;  // by point; empty = not in orbit
    };

    void add_generator(const Perm& g) {
        if (is_identity(g)) return;
        gens_.push_back(g);
        bool moves_base = false;
        for (int b : base_)
            if (g[static_cast<std::size_t>(b)] != b) {
                moves_base = true;
                break;
            }
        if (!moves_base)
            for (int x = 0; x < n_; ++x)
                if (g[static_cast<std::size_t>(x)] != x) {
                    base_.push_back(x);
                    break;
                }
    }

    void rebuild() {
        levels_.assign(base_.size(), Level{});
        for (std::size_t l = 0; l < base_.size(); ++l) {
            Level& lvl = levels_[l];
            for (const Perm& g : gens_) {
                bool fixes = true;
                for (std::size_t m = 0; m < l; ++m)
                    if (g[static_cast<std::size_t>(base_[m])] != base_[m]) {
                        fixes = false;
                        break;
                    }
                if (fixes) lvl.sgens.push_back(g);
            }
            lvl.transversal.assign(static_cast<std::size_t>(n_), Perm{});
            lvl.orbit.push_back(base_[l]);
            lvl.transversal[static_cast<std::size_t>(base_[l])] = identity_perm(n_);
            for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
                const int x = lvl.orbit[qi];
                for (const Perm& s : lvl.sgens) {
                    const int y = s[static_cast<std::size_t>(x)];
                    if (lvl.transversal[static_cast<std::size_t>(y)].empty()) {
                        lvl.transversal[static_cast<std::size_t>(y)] =
                            compose(s, lvl.transversal[static_cast<std::size_t>(x)]);
                        lvl.orbit.push_back(y);
                    }
                }
            }
        }
    }

    Perm strip(Perm h, std::size_t from) const {
        for (std::size_t lv = from; lv < levels_.size(); ++lv) {
            const Level& lvl = levels_[lv];
            const int x = h[static_cast<std::size_t>(base_[lv])];
            if (lvl.transversal[static_cast<std::size_t>(x)].empty()) return h;
            h = compose(inverse(lvl.transversal[static_cast<std::size_t>(x)]), h);
        }
        return h;
    }

    // First Schreier generator that does not sift to the identity; empty
    // permutation when the chain is complete.
    Perm find_violation() const {
        for (std::size_t l = 0; l < levels_.size(); ++l) {
            const Level& lvl = levels_[l];
            for (const int x : lvl.orbit)
                for (const Perm& s : lvl.sgens) {
                    const int y = s[static_cast<std::size_t>(x)];
                    Perm schreier =
                        compose(inverse(lvl.transversal[static_cast<std::size_t>(y)]),
                                compose(s, lvl.transversal[static_cast<std::size_t>(x)]));
                    Perm residue = strip(std::move(schreier), l + 1);
                    if (!is_identity(residue)) return residue;
                }
        }
        return {};
    }

    int n_;
    std::vector<Perm> gens_;
    std::vector<int> base_;
    std::vector<Level> levels_;
};

}  // namespace

boost::multiprecision::cpp_int permutation_group_order(const std::vector<Perm>& gens, int n) {
    StabilizerChain chain(n);
    chain.build(gens);
    return chain.order();
}

AutomorphismGroup automorphism_group(const Graph& g) {
    CanonicalResult canon = canonical_labeling(with_unit_partition(g));
    return AutomorphismGroup{canon.generators,
                             permutation_group_order(canon.generators, g.order())};
}

std::vector<Perm> seidel_automorphisms(const Graph& g, bool fixed_point_free,
                                       std::size_t max_results) {
    const int n = g.order();
    std::vector<Perm> found;
    Perm sigma(static_cast<std::size_t>(n), -1);

    auto consistent_fix = [&](int u) {
        for (int x = 0; x < n; ++x)
            if (sigma[static_cast<std::size_t>(x)] >= 0 &&
                g.adjacent(u, x) != g.adjacent(u, sigma[static_cast<std::size_t>(x)]))
                return false;
        return true;
    };
    auto consistent_swap = [&](int u, int w) {
        for (int x = 0; x < n; ++x) {
            const int sx = sigma[static_cast<std::size_t>(x)];
            if (sx < 0) continue;
            if (g.adjacent(u, x) != g.adjacent(w, sx)) return false;
            if (g.adjacent(w, x) != g.adjacent(u, sx)) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int from) -> bool {
        if (max_results && found.size() >= max_results) return true;
        int u = from;
        while (u < n && sigma[static_cast<std::size_t>(u)] >= 0) ++u;
        if (u == n) {
            Perm p(sigma.begin(), sigma.end());
            if (!is_identity(p)) found.push_back(std::move(p));
            return max_results && found.size() >= max_results;
        }
        if (!fixed_point_free && consistent_fix(u)) {
            sigma[static_cast<std::size_t>(u)] = u;
            if (self(self, u + 1)) return true;
            sigma[static_cast<std::size_t>(u)] = -1;
        }
        for (int w = u + 1; w < n; ++w) {
            if (sigma[static_cast<std::size_t>(w)] >= 0) continue;
            if (g.adjacent(u, w)) continue;  // moved pairs must be non-adjacent
            if (!consistent_swap(u, w)) continue;
            sigma[static_cast<std::size_t>(u)] = w;
            sigma[static_cast<std::size_t>(w)] = u;
            if (self(self, u + 1)) return true;
            sigma[static_cast<std::size_t>(u)] = -1;
            sigma[static_cast<std::size_t>(w)] = -1;
        }
        return false;
    };
    rec(rec, 0);
    return found;
}

std::vector<Perm> group_elements(const std::vector<Perm>& gens, int n, std::size_t limit) {
    std::set<Perm> elems;
    std::vector<Perm> queue{identity_perm(n)};
    elems.insert(queue.front());
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const Perm current = queue[qi];
        for (const Perm& s : gens) {
            Perm next = compose(s, current);
            if (elems.insert(next).second) {
                if (elems.size() > limit)
                    throw std::length_error("group_elements: group larger than limit");
                queue.push_back(std::move(next));
            }
        }
    }
    return {elems.begin(), elems.end()};
}

}  // namespace deza
