#include "deza/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "deza/graph6.hpp"

namespace deza {

namespace {

std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

// Pair-count rule shared by the Deza and SRG searches.
struct Mode {
    bool srg = false;
    int v = 0;
    int k = 0;
    int a = 0;       // Deza values, a <= b
    int b = 0;
    long alpha = 0;  // Deza per-vertex quotas; counters active when a < b
    long beta = 0;
    int lambda = 0;  // SRG targets
    int mu = 0;

    int pair_max() const { return srg ? std::max(lambda, mu) : b; }
    int pair_min() const { return srg ? std::min(lambda, mu) : a; }
};

Mode deza_mode(const DezaParams& p) {
    Mode m;
    m.v = p.v;
    m.k = p.k;
    m.a = p.a;
    m.b = p.b;
    m.alpha = p.alpha;
    m.beta = p.beta;
    return m;
}

std::vector<std::uint64_t> pending_columns(const PartialMatrix& pm) {
    std::vector<std::uint64_t> pending(static_cast<std::size_t>(pm.v), 0);
    for (int u = 0; u < pm.filled; ++u) {
        std::uint64_t r = pm.rows[static_cast<std::size_t>(u)];
        while (r) {
            const int w = std::countr_zero(r);
            r &= r - 1;
            pending[static_cast<std::size_t>(w)] |= std::uint64_t{1} << u;
        }
    }
    return pending;
}

std::optional<PartialMatrix> seed_internal(const Mode& m) {
    const int v = m.v, k = m.k;
    if (v < 3 || k < 1) return std::nullopt;
    PartialMatrix pm;
    pm.v = v;
    pm.filled = 2;
    pm.rows.assign(2, 0);

    int widths[4];
    bool adjacent_pair;
    if (m.srg) {
        adjacent_pair = true;
        widths[0] = m.lambda;
        widths[1] = widths[2] = k - m.lambda - 1;
        widths[3] = v - 2 * k + m.lambda;
    } else if (m.alpha <= m.k) {
        // Cases 1 and 2: adjacent pair with exactly b common neighbours.
        adjacent_pair = true;
        widths[0] = m.b;
        widths[1] = widths[2] = k - m.b - 1;
        widths[3] = v - 2 * k + m.b;
    } else {
        // Case 3: non-adjacent pair with exactly a common neighbours.
        adjacent_pair = false;
        widths[0] = m.a;
        widths[1] = widths[2] = k - m.a;
        widths[3] = v - 2 * k + m.a - 2;
    }
    for (int w : widths)
        if (w < 0) return std::nullopt;

    const int c0 = 2, c1 = c0 + widths[0], c2 = c1 + widths[1], c3 = c2 + widths[2];
    auto span_bits = [](int from, int to) {
        std::uint64_t bits = 0;
        for (int i = from; i < to; ++i) bits |= std::uint64_t{1} << i;
        return bits;
    };
    std::uint64_t row0 = span_bits(c0, c1) | span_bits(c1, c2);
    std::uint64_t row1 = span_bits(c0, c1) | span_bits(c2, c3);
    if (adjacent_pair) {
        row0 |= std::uint64_t{1} << 1;
        row1 |= std::uint64_t{1} << 0;
    }
    pm.rows[0] = row0;
    pm.rows[1] = row1;
    for (int i = 0, start = 2; i < 4; ++i) {
        if (widths[i] > 0) pm.blocks.emplace_back(start, widths[i]);
        start += widths[i];
    }
    return pm;
}

// Validates a fully specified candidate row against every filled row and the
// partial information of the unfilled ones. cnt_a/cnt_b are the per-vertex
// determined-pair counters (Deza mode only); they are updated on success.
class RowChecker {
public:
    RowChecker(const Mode& m) : m_(m) {}

    bool admissible(int i, std::uint64_t candidate, const std::vector<std::uint64_t>& rows,
                    const std::vector<std::uint64_t>& pending, const std::vector<int>& cnt_a,
                    const std::vector<int>& cnt_b) const {
        const int v = m_.v;
        const bool counters = !m_.srg && m_.a < m_.b;
        // After this row is placed, any vertex u <= i still has v-1-i
        // undetermined pairs (those with w > i).
        const long remaining_after = v - 1 - i;
        int na = 0, nb = 0;
        for (int u = 0; u < i; ++u) {
            const int c = std::popcount(rows[static_cast<std::size_t>(u)] & candidate);
            if (m_.srg) {
                const int target = ((candidate >> u) & 1) ? m_.lambda : m_.mu;
                if (c != target) return false;
                continue;
            }
            if (c == m_.a) {
                if (counters && cnt_a[static_cast<std::size_t>(u)] + 1 > m_.alpha) return false;
                ++na;
            } else if (c == m_.b) {
                if (counters && cnt_b[static_cast<std::size_t>(u)] + 1 > m_.beta) return false;
                ++nb;
            } else {
                return false;
            }
            if (counters) {
                if (cnt_a[static_cast<std::size_t>(u)] + ((c == m_.a) ? 1 : 0) + remaining_after <
                    m_.alpha)
                    return false;
                if (cnt_b[static_cast<std::size_t>(u)] + ((c == m_.b) ? 1 : 0) + remaining_after <
                    m_.beta)
                    return false;
            }
        }
        if (counters) {
            if (na > m_.alpha || nb > m_.beta) return false;
            if (na + (v - 1 - i) < m_.alpha || nb + (v - 1 - i) < m_.beta) return false;
        }

        const std::uint64_t above = candidate & ~low_mask(i + 1);
        const int future_total = std::popcount(above);
        for (int w = i + 1; w < v; ++w) {
            const std::uint64_t pcol = pending[static_cast<std::size_t>(w)];
            const bool adj = (candidate >> w) & 1;
            const int dw = std::popcount(pcol) + (adj ? 1 : 0);
            if (dw > m_.k || dw + (v - 1 - (i + 1)) < m_.k) return false;
            const int pcn = std::popcount(candidate & pcol);
            if (m_.srg) {
                const int target = adj ? m_.lambda : m_.mu;
                if (pcn > target) return false;
                if (pcn + future_total - (adj ? 1 : 0) < target) return false;
            } else {
                if (pcn > m_.b) return false;
                if (pcn + future_total - (adj ? 1 : 0) < m_.a) return false;
            }
        }
        return true;
    }

private:
    const Mode& m_;
};

std::vector<PartialMatrix> extend_internal(const PartialMatrix& pm, const Mode& m,
                                           bool prune_equivalent) {
    const int v = m.v, i = pm.filled;
    std::vector<PartialMatrix> out;
    if (i >= v) return out;

    // Column i leaves the block partition; it is the next row's own vertex.
    std::vector<std::pair<int, int>> blocks = pm.blocks;
    if (blocks.empty() || blocks.front().first != i)
        throw std::logic_error("extend: block partition out of step with filled rows");
    if (--blocks.front().second == 0)
        blocks.erase(blocks.begin());
    else
        ++blocks.front().first;

    std::vector<std::uint64_t> pending = pending_columns(pm);
    std::vector<int> cnt_a(static_cast<std::size_t>(v), 0), cnt_b(static_cast<std::size_t>(v), 0);
    for (int x = 0; x < i; ++x)
        for (int y = x + 1; y < i; ++y) {
            const int c = std::popcount(pm.rows[static_cast<std::size_t>(x)] &
                                        pm.rows[static_cast<std::size_t>(y)]);
            if (!m.srg) {
                if (c == m.a) {
                    ++cnt_a[static_cast<std::size_t>(x)];
                    ++cnt_a[static_cast<std::size_t>(y)];
                } else if (c == m.b) {
                    ++cnt_b[static_cast<std::size_t>(x)];
                    ++cnt_b[static_cast<std::size_t>(y)];
                }
            }
        }

    const std::uint64_t forced = pending[static_cast<std::size_t>(i)];
    const int r = m.k - std::popcount(forced);
    if (r < 0) return out;

    RowChecker checker(m);
    std::vector<int> take(blocks.size(), 0);

    auto emit = [&] {
        std::uint64_t candidate = forced;
        for (std::size_t bi = 0; bi < blocks.size(); ++bi)
            for (int t = 0; t < take[bi]; ++t)
                candidate |= std::uint64_t{1} << (blocks[bi].first + t);
        if (!checker.admissible(i, candidate, pm.rows, pending, cnt_a, cnt_b)) return;
        PartialMatrix child;
        child.params = pm.params;
        child.v = v;
        child.filled = i + 1;
        child.rows = pm.rows;
        child.rows.push_back(candidate);
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            const auto [s, len] = blocks[bi];
            const int t = take[bi];
            if (t > 0) child.blocks.emplace_back(s, t);
            if (len - t > 0) child.blocks.emplace_back(s + t, len - t);
        }
        out.push_back(std::move(child));
    };

    auto rec = [&](auto&& self, std::size_t bi, int left) -> void {
        if (bi == blocks.size()) {
            if (left == 0) emit();
            return;
        }
        int tail = 0;
        for (std::size_t j = bi; j < blocks.size(); ++j) tail += blocks[j].second;
        if (left > tail) return;
        for (int t = std::min(left, blocks[bi].second); t >= 0; --t) {
            take[bi] = t;
            self(self, bi + 1, left - t);
        }
        take[bi] = 0;
    };
    rec(rec, 0, r);

    // Deterministic order before dedup.
    std::sort(out.begin(), out.end(), [](const PartialMatrix& x, const PartialMatrix& y) {
        return x.rows.back() < y.rows.back();
    });
    if (prune_equivalent && out.size() > 1) {
        std::map<std::string, std::size_t> seen;
        std::vector<PartialMatrix> kept;
        for (auto& cand : out) {
            const std::string key = canonical_form(partial_colored_graph(cand)).bytes;
            if (seen.emplace(key, kept.size()).second) kept.push_back(std::move(cand));
        }
        out = std::move(kept);
    }
    return out;
}

// Constrained DFS over the remaining rows.
class Completion {
public:
    Completion(const Mode& m, long max_nodes, std::atomic<long>* node_counter,
               std::chrono::steady_clock::time_point deadline, bool has_deadline)
        : m_(m),
          checker_(m),
          max_nodes_(max_nodes),
          nodes_(node_counter),
          deadline_(deadline),
          has_deadline_(has_deadline) {}

    bool complete = true;

    std::vector<Graph> run(const PartialMatrix& pm) {
        const int v = m_.v;
        rows_ = pm.rows;
        rows_.resize(static_cast<std::size_t>(v), 0);
        pending_ = pending_columns(pm);
        cnt_a_.assign(static_cast<std::size_t>(v), 0);
        cnt_b_.assign(static_cast<std::size_t>(v), 0);
        for (int x = 0; x < pm.filled; ++x)
            for (int y = x + 1; y < pm.filled; ++y) {
                const int c = std::popcount(rows_[static_cast<std::size_t>(x)] &
                                            rows_[static_cast<std::size_t>(y)]);
                if (m_.srg) continue;
                if (c == m_.a) {
                    ++cnt_a_[static_cast<std::size_t>(x)];
                    ++cnt_a_[static_cast<std::size_t>(y)];
                } else if (c == m_.b) {
                    ++cnt_b_[static_cast<std::size_t>(x)];
                    ++cnt_b_[static_cast<std::size_t>(y)];
                }
            }
        results_.clear();
        dfs(pm.filled);
        return std::move(results_);
    }

private:
    bool budget_exceeded() {
        if (max_nodes_ >= 0 && nodes_ && nodes_->load(std::memory_order_relaxed) > max_nodes_) {
            complete = false;
            return true;
        }
        if (has_deadline_ && (local_ticks_++ & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline_) {
            complete = false;
            return true;
        }
        return false;
    }

    void dfs(int i) {
        if (nodes_) nodes_->fetch_add(1, std::memory_order_relaxed);
        if (budget_exceeded()) return;
        const int v = m_.v;
        if (i == v) {
            finalize();
            return;
        }
        const std::uint64_t forced = pending_[static_cast<std::size_t>(i)];
        const int r = m_.k - std::popcount(forced);
        const int width = v - 1 - i;
        if (r < 0 || r > width) return;

        const bool counters = !m_.srg && m_.a < m_.b;
        std::uint64_t choice = r == 0 ? 0 : (low_mask(r));
        const std::uint64_t stop = std::uint64_t{1} << width;
        while (true) {
            const std::uint64_t candidate = forced | (choice << (i + 1));
            if (checker_.admissible(i, candidate, rows_, pending_, cnt_a_, cnt_b_)) {
                if (pairwise_unfilled_ok(i, candidate)) {
                    push_row(i, candidate, counters);
                    dfs(i + 1);
                    pop_row(i, candidate, counters);
                    if (!complete) return;
                }
            }
            if (r == 0) break;
            // Gosper's hack: next subset of the same size.
            const std::uint64_t c = choice & (~choice + 1);
            const std::uint64_t rip = choice + c;
            choice = (((choice ^ rip) >> 2) / c) | rip;
            if (choice >= stop) break;
        }
    }

    // New common neighbour i for unfilled pairs (w1, w2) both picked by the
    // candidate: their partial count must stay within the upper target.
    bool pairwise_unfilled_ok(int i, std::uint64_t candidate) const {
        std::uint64_t sel = candidate & ~low_mask(i + 1);
        const int cap = m_.pair_max();
        while (sel) {
            const int w1 = std::countr_zero(sel);
            sel &= sel - 1;
            std::uint64_t rest = sel;
            while (rest) {
                const int w2 = std::countr_zero(rest);
                rest &= rest - 1;
                const int pcn = std::popcount(pending_[static_cast<std::size_t>(w1)] &
                                              pending_[static_cast<std::size_t>(w2)]) +
                                1;
                if (pcn > cap) return false;
            }
        }
        return true;
    }

    void push_row(int i, std::uint64_t candidate, bool counters) {
        rows_[static_cast<std::size_t>(i)] = candidate;
        std::uint64_t sel = candidate & ~low_mask(i + 1);
        while (sel) {
            const int w = std::countr_zero(sel);
            sel &= sel - 1;
            pending_[static_cast<std::size_t>(w)] |= std::uint64_t{1} << i;
        }
        if (counters) {
            for (int u = 0; u < i; ++u) {
                const int c = std::popcount(rows_[static_cast<std::size_t>(u)] & candidate);
                if (c == m_.a) {
                    ++cnt_a_[static_cast<std::size_t>(u)];
                    ++cnt_a_[static_cast<std::size_t>(i)];
                } else {
                    ++cnt_b_[static_cast<std::size_t>(u)];
                    ++cnt_b_[static_cast<std::size_t>(i)];
                }
            }
        }
    }

    void pop_row(int i, std::uint64_t candidate, bool counters) {
        if (counters) {
            for (int u = 0; u < i; ++u) {
                const int c = std::popcount(rows_[static_cast<std::size_t>(u)] & candidate);
                if (c == m_.a) {
                    --cnt_a_[static_cast<std::size_t>(u)];
                    --cnt_a_[static_cast<std::size_t>(i)];
                } else {
                    --cnt_b_[static_cast<std::size_t>(u)];
                    --cnt_b_[static_cast<std::size_t>(i)];
                }
            }
        }
        std::uint64_t sel = candidate & ~low_mask(i + 1);
        while (sel) {
            const int w = std::countr_zero(sel);
            sel &= sel - 1;
            pending_[static_cast<std::size_t>(w)] &= ~(std::uint64_t{1} << i);
        }
        rows_[static_cast<std::size_t>(i)] = 0;
    }

    void finalize() {
        Graph g(m_.v);
        for (int u = 0; u < m_.v; ++u) g.set_row(u, rows_[static_cast<std::size_t>(u)]);
        const Classification cls = classify_regular_deza(g);
        if (m_.srg) {
            const auto* srg = std::get_if<SrgParams>(&cls);
            if (!srg || srg->k != m_.k) return;
            if (srg->k >= 1 && srg->lambda != m_.lambda) return;
            if (srg->k <= m_.v - 2 && srg->mu != m_.mu) return;
            results_.push_back(std::move(g));
            return;
        }
        const auto* dz = std::get_if<DezaParams>(&cls);
        if (!dz || dz->k != m_.k || dz->a != m_.a || dz->b != m_.b) return;
        if (m_.a == 0) {
            const auto diam = diameter(g);
            if (!diam || *diam != 2) return;
        }
        results_.push_back(std::move(g));
    }

    Mode m_;
    RowChecker checker_;
    long max_nodes_;
    std::atomic<long>* nodes_;
    std::chrono::steady_clock::time_point deadline_;
    bool has_deadline_;
    long local_ticks_ = 0;

    std::vector<std::uint64_t> rows_;
    std::vector<std::uint64_t> pending_;
    std::vector<int> cnt_a_, cnt_b_;
    std::vector<Graph> results_;
};

struct FrontierOutcome {
    std::vector<Graph> graphs;  // canonically relabeled, deduplicated
    SearchStats stats;
};

// Expands the seed through the block phase, then runs the DFS over the
// frontier with an optional worker pool, merging in frontier order.
FrontierOutcome run_pipeline(const Mode& m, std::optional<PartialMatrix> seed,
                             const SearchOptions& opt, const std::string& checkpoint_path) {
    FrontierOutcome out;
    const auto t0 = std::chrono::steady_clock::now();
    if (!seed) return out;

    std::vector<PartialMatrix> frontier{*seed};
    const int crossover = std::min(opt.crossover_row, m.v);
    while (!frontier.empty() && frontier.front().filled < crossover) {
        std::vector<PartialMatrix> next;
        std::map<std::string, std::size_t> seen;
        for (const PartialMatrix& pm : frontier)
            for (PartialMatrix& child : extend_internal(pm, m, opt.prune_equivalent)) {
                if (opt.prune_equivalent) {
                    const std::string key = canonical_form(partial_colored_graph(child)).bytes;
                    if (!seen.emplace(key, next.size()).second) continue;
                }
                next.push_back(std::move(child));
            }
        frontier = std::move(next);
    }
    out.stats.frontier_size = static_cast<long>(frontier.size());

    // Checkpoint: per-frontier-item raw graph6 results.
    nlohmann::json done = nlohmann::json::object();
    if (!checkpoint_path.empty() && std::filesystem::exists(checkpoint_path)) {
        std::ifstream in(checkpoint_path);
        nlohmann::json cp = nlohmann::json::parse(in, nullptr, false);
        if (!cp.is_discarded() && cp.value("frontier", -1) == static_cast<long>(frontier.size()))
            done = cp.value("items", nlohmann::json::object());
    }

    std::atomic<long> node_counter{0};
    const bool has_deadline = opt.max_seconds > 0;
    const auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(has_deadline ? opt.max_seconds : 0));

    std::vector<std::vector<Graph>> per_item(frontier.size());
    std::vector<char> item_complete(frontier.size(), 1);
    std::atomic<std::size_t> next_item{0};
    std::mutex cp_mutex;

    auto worker = [&] {
        while (true) {
            const std::size_t idx = next_item.fetch_add(1);
            if (idx >= frontier.size()) break;
            const std::string key = std::to_string(idx);
            if (done.contains(key)) {
                for (const auto& s : done[key])
                    per_item[idx].push_back(from_graph6(s.get<std::string>()));
                continue;
            }
            Completion comp(m, opt.max_nodes, &node_counter, deadline, has_deadline);
            per_item[idx] = comp.run(frontier[idx]);
            item_complete[idx] = comp.complete ? 1 : 0;
            if (!checkpoint_path.empty() && comp.complete) {
                std::lock_guard<std::mutex> lock(cp_mutex);
                nlohmann::json lst = nlohmann::json::array();
                for (const Graph& g : per_item[idx]) lst.push_back(to_graph6(g));
                done[key] = std::move(lst);
                nlohmann::json cp;
                cp["frontier"] = static_cast<long>(frontier.size());
                cp["items"] = done;
                std::ofstream f(checkpoint_path);
                f << cp.dump();
            }
        }
    };

    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Merge in frontier order; isomorph rejection by canonical form.
    std::map<std::string, std::size_t> canon_seen;
    for (std::size_t idx = 0; idx < frontier.size(); ++idx) {
        if (!item_complete[idx]) out.stats.complete = false;
        for (const Graph& g : per_item[idx]) {
            ++out.stats.graphs_raw;
            CanonicalResult canon = canonical_labeling(with_unit_partition(g));
            if (canon_seen.emplace(canon.form.bytes, out.graphs.size()).second)
                out.graphs.push_back(apply_permutation(g, canon.labeling));
        }
    }
    std::sort(out.graphs.begin(), out.graphs.end(),
              [](const Graph& x, const Graph& y) { return to_graph6(x) < to_graph6(y); });

    out.stats.nodes = node_counter.load();
    out.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

}  // namespace

std::optional<PartialMatrix> seed_prefix(const DezaParams& p) {
    auto pm = seed_internal(deza_mode(p));
    if (pm) pm->params = p;
    return pm;
}

ColoredGraph partial_colored_graph(const PartialMatrix& pm) {
    Graph g(pm.v);
    for (int u = 0; u < pm.filled; ++u) g.set_row(u, pm.rows[static_cast<std::size_t>(u)]);
    const std::vector<std::uint64_t> pending = pending_columns(pm);
    for (int w = pm.filled; w < pm.v; ++w) g.set_row(w, pending[static_cast<std::size_t>(w)]);
    g.check_invariants();
    ColoredGraph cg;
    cg.graph = std::move(g);
    std::vector<int> filled, open;
    for (int u = 0; u < pm.filled; ++u) filled.push_back(u);
    for (int w = pm.filled; w < pm.v; ++w) open.push_back(w);
    cg.colors.push_back(std::move(filled));
    if (!open.empty()) cg.colors.push_back(std::move(open));
    return cg;
}

bool partial_equivalent(const PartialMatrix& p1, const PartialMatrix& p2) {
    if (p1.v != p2.v || p1.filled != p2.filled)
        throw std::invalid_argument("partial_equivalent: dimension mismatch");
    if (!(p1.params == p2.params))
        throw std::invalid_argument("partial_equivalent: different parameter context");
    return canonical_form(partial_colored_graph(p1)) == canonical_form(partial_colored_graph(p2));
}

std::vector<PartialMatrix> extend_row_blockwise(const PartialMatrix& pm, bool prune_equivalent) {
    return extend_internal(pm, deza_mode(pm.params), prune_equivalent);
}

std::vector<Graph> complete_exhaustive(const PartialMatrix& pm) {
    Completion comp(deza_mode(pm.params), -1, nullptr, {}, false);
    return comp.run(pm);
}

TupleResult enumerate_tuple(const DezaParams& p, const SearchOptions& opt) {
    TupleResult result;
    result.params = p;
    std::string cp_path;
    if (!opt.checkpoint_dir.empty()) {
        std::filesystem::create_directories(opt.checkpoint_dir);
        cp_path = opt.checkpoint_dir + "/cp_" + std::to_string(p.v) + "_" + std::to_string(p.k) +
                  "_" + std::to_string(p.b) + "_" + std::to_string(p.a) + ".json";
    }
    FrontierOutcome outcome = run_pipeline(deza_mode(p), seed_prefix(p), opt, cp_path);
    result.graphs = std::move(outcome.graphs);
    result.stats = outcome.stats;
    return result;
}

EnumerationResult enumerate_all(int v, const SearchOptions& opt) {
    EnumerationResult result;
    result.v = v;
    for (const DezaParams& p : feasible_params(v, ParamFilter::Strict)) {
        TupleResult tr = enumerate_tuple(p, opt);
        if (!tr.stats.complete) result.complete = false;
        result.tuples.push_back(std::move(tr));
    }
    for (const TupleResult& tr : result.tuples)
        for (const Graph& g : tr.graphs) result.graphs.push_back(g);
    std::stable_sort(result.graphs.begin(), result.graphs.end(), [](const Graph& x, const Graph& y) {
        const auto key = [](const Graph& g) {
            const Classification c = classify_regular_deza(g);
            const auto& dp = std::get<DezaParams>(c);
            return std::tuple<int, int, int, std::string>(dp.k, dp.b, dp.a, to_graph6(g));
        };
        return key(x) < key(y);
    });
    return result;
}

std::vector<Graph> enumerate_srg(int v, int k, int lambda, int mu, const SearchOptions& opt) {
    if (k == 0) return {empty_graph(v)};
    if (k == v - 1) return lambda == k - 1 ? std::vector<Graph>{complete_graph(v)}
                                           : std::vector<Graph>{};
    Mode m;
    m.srg = true;
    m.v = v;
    m.k = k;
    m.lambda = lambda;
    m.mu = mu;
    FrontierOutcome outcome = run_pipeline(m, seed_internal(m), opt, "");
    return std::move(outcome.graphs);
}

bool srg_feasible(int v, int k, int lambda, int mu) {
    if (v < 2 || k < 0 || k > v - 1 || lambda < 0 || mu < 0) return false;
    if (k == 0) return lambda == 0 && mu == 0;
    if ((static_cast<long>(v) * k) % 2 != 0) return false;
    if (lambda > k - 1 || mu > k) return false;
    if (k == v - 1) return lambda == k - 1;
    if (static_cast<long>(k) * (k - lambda - 1) != static_cast<long>(v - k - 1) * mu) return false;
    if (mu == 0) return lambda == k - 1 && v % (k + 1) == 0;
    // Eigenvalue multiplicities must be non-negative integers, or the
    // parameters are of conference type (which additionally needs v to be a
    // sum of two squares).
    const long disc = static_cast<long>(lambda - mu) * (lambda - mu) + 4L * (k - mu);
    const long s = std::lround(std::sqrt(static_cast<double>(disc)));
    if (s * s == disc && s != 0) {
        const long num = 2L * k + static_cast<long>(v - 1) * (lambda - mu);
        if (num % s != 0) {
            if (num != 0) return false;
        }
        const long f2 = (v - 1) - num / s;
        const long g2 = (v - 1) + num / s;
        if (f2 < 0 || g2 < 0 || f2 % 2 != 0 || g2 % 2 != 0) return false;
        return true;
    }
    // Conference type: k = (v-1)/2, lambda = (v-5)/4, mu = (v-1)/4.
    if (2 * k != v - 1 || 4 * lambda != v - 5 || 4 * mu != v - 1) return false;
    for (int i = 0; i * i <= v; ++i) {
        const int rest = v - i * i;
        const int j = static_cast<int>(std::lround(std::sqrt(static_cast<double>(rest))));
        if (j * j == rest) return true;
    }
    return false;
}

}  // namespace deza
