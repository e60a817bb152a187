#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mtf/enumeration.hpp"
#include "mtf/graph.hpp"

namespace mtf {

/// Split X + Y with G[X] an induced perfect matching and Y independent.
struct StructureWitness {
    Bipartition partition;
    MatchingResult matching;
};

inline constexpr int kStructureLimit = 24;

/// Searches Y over independent sets (X = the rest) and returns the witness
/// with the smallest Y mask, or nothing. Y may be empty. n <= 24.
std::optional<StructureWitness> find_structure_partition(const Graph& g);

/// Direct check that w is a structure witness for g, independent of how it
/// was found.
bool is_valid_witness(const Graph& g, const StructureWitness& w);

/// Exactly one edge between every matching edge of X and every y in Y.
/// Throws InputError for an invalid witness.
bool check_one_cross_edge(const Graph& g, const StructureWitness& w);

struct GraphStats {
    Bipartition cut;
    int cut_size = 0;
    /// Max vertex-disjoint P3's in G[X].
    int s = 0;
    /// Matching number of G[Y].
    int t = 0;
    /// Isolated vertices of G[X].
    int r = 0;
    int max_inner_degree_x = 0;
    int max_inner_degree_y = 0;
};

/// s, t, r and inner degrees under the deterministic max-cut witness.
GraphStats graph_stats(const Graph& g);

/// The same statistics under a caller-chosen split.
GraphStats graph_stats(const Graph& g, const Bipartition& cut);

inline constexpr int kAllCutsLimit = 16;

/// Statistics for every max-cut (n <= 16), in increasing x_mask order.
std::vector<GraphStats> graph_stats_all_cuts(const Graph& g);

/// e(G) minus the max-cut value. n <= 28.
int closeness_to_bipartite(const Graph& g);

/// Per-graph record behind `mtf structure`.
struct StructureRecord {
    std::optional<StructureWitness> witness;
    GraphStats stats;
    int closeness = 0;
};

/// Records for a batch of graphs, in input order.
std::vector<StructureRecord> structure_records(std::span<const Graph> graphs, Execution exec = Execution::parallel);

/// Enumerates M3(n) and counts members with a structure witness.
EnumerationReport structure_fraction(int n, Execution exec = Execution::parallel);

}  // namespace mtf
