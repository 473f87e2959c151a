#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deza/canon.hpp"
#include "deza/feasibility.hpp"
#include "deza/graph.hpp"

namespace deza {

/// Prefix of an adjacency matrix under construction: the first `filled` rows
/// are fully specified; `blocks` is the ordered interval partition of the
/// columns in [filled, v) induced by the 0/1 patterns of the filled rows.
struct PartialMatrix {
    DezaParams params;
    int v = 0;
    int filled = 0;
    std::vector<std::uint64_t> rows;
    std::vector<std::pair<int, int>> blocks;  // (start, length)
};

/// The two-row prefix forced by the case analysis on alpha vs k: adjacent
/// pair with b common neighbours when alpha <= k, non-adjacent pair with a
/// common neighbours when alpha > k. nullopt when a block width goes
/// negative (no graph has these parameters from the forced case).
std::optional<PartialMatrix> seed_prefix(const DezaParams& p);

/// Two-colored graph {filled} / {unfilled} carrying every determined
/// adjacency of the prefix.
ColoredGraph partial_colored_graph(const PartialMatrix& pm);

/// True iff an isomorphism of the determined structures maps the filled set
/// onto itself setwise; equivalent prefixes have isomorphic completion sets.
bool partial_equivalent(const PartialMatrix& p1, const PartialMatrix& p2);

/// All valid next rows enumerated block-by-block (1s packed to the front of
/// each block), constraints checked against every filled row; survivors
/// optionally deduplicated up to partial equivalence.
std::vector<PartialMatrix> extend_row_blockwise(const PartialMatrix& pm,
                                                bool prune_equivalent = true);

struct SearchOptions {
    int crossover_row = 5;        // rows filled by block enumeration
    bool prune_equivalent = true;
    int jobs = 1;
    long max_nodes = -1;          // per-tuple DFS node budget, -1 = unlimited
    double max_seconds = -1.0;    // per-tuple wall-clock budget
    std::string checkpoint_dir;   // empty = no checkpointing
};

struct SearchStats {
    long nodes = 0;
    long frontier_size = 0;
    long graphs_raw = 0;  // completions before isomorph rejection
    bool complete = true;
    double seconds = 0.0;
};

struct TupleResult {
    DezaParams params;
    std::vector<Graph> graphs;  // pairwise non-isomorphic, canonical order
    SearchStats stats;
};

/// Plain constrained DFS over the remaining rows; emits every completion
/// that is a strictly Deza graph with pm's parameters (k-regular, counts in
/// {a,b}, not strongly regular, diameter 2 enforced when a = 0).
std::vector<Graph> complete_exhaustive(const PartialMatrix& pm);

/// Full pipeline for one parameter tuple: seed, block rows, parallel DFS
/// over the frontier, validation, isomorph rejection.
TupleResult enumerate_tuple(const DezaParams& p, const SearchOptions& opt = {});

struct EnumerationResult {
    int v = 0;
    std::vector<TupleResult> tuples;
    std::vector<Graph> graphs;  // sorted by (k, b, a, canonical bytes)
    bool complete = true;
};

/// Every strictly Deza graph on v vertices up to isomorphism, via
/// feasible_params(v) in strict mode.
EnumerationResult enumerate_all(int v, const SearchOptions& opt = {});

/// All strongly regular graphs with the given parameters up to isomorphism
/// (same engine, pair targets tied to adjacency).
std::vector<Graph> enumerate_srg(int v, int k, int lambda, int mu,
                                 const SearchOptions& opt = {});

/// Cheap necessary conditions (handshake, counting identity, eigenvalue
/// integrality / conference restrictions) used to skip hopeless SRG
/// enumerations.
bool srg_feasible(int v, int k, int lambda, int mu);

}  // namespace deza
