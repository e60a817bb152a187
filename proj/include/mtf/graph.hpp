#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mtf/parallel.hpp"

namespace mtf {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Thrown when an argument falls outside an operation's supported range
/// (vertex counts, capacities, exhaustive-search limits).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Thrown when an input violates a structural precondition (triangles
/// where none are allowed, overlapping edge sets, malformed text).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr int lowest(Mask m) { return std::countr_zero(m); }

struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    /// Stores the endpoints ordered so that u < v.
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, one adjacency word per vertex.
///
/// Graphs are immutable values: every operation returns a new graph.
class Graph {
public:
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Builds the graph with exactly the given edges; duplicates collapse.
    /// Throws RangeError for n outside [1, 64] or an endpoint >= n, and
    /// InputError for a loop.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    /// Builds a graph from a full adjacency table. Validates symmetry,
    /// absence of loops and that no row has bits at or above n.
    static Graph from_adjacency(int n, std::span<const Mask> rows);

    int order() const { return n_; }
    Mask vertices() const { return low_bits(n_); }
    Mask neighbors(int v) const { return adj_[v]; }
    /// Closed neighbourhood: N(v) together with v.
    Mask closed_neighbors(int v) const { return adj_[v] | bit(v); }
    int degree(int v) const { return popcount(adj_[v]); }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }

    int edge_count() const;
    /// Edges in lexicographic (u, v) order with u < v.
    std::vector<Edge> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    /// Induced subgraph on `keep`, relabelled to 0..|keep|-1 in increasing
    /// vertex order.
    Graph induced(Mask keep) const;

    /// Upper-triangle bit code: bit i is set iff the i-th pair in
    /// lexicographic (u, v) order is an edge. Defined for n <= 11.
    std::uint64_t edge_code() const;
    static Graph from_edge_code(int n, std::uint64_t code);

    friend bool operator==(const Graph& a, const Graph& b);

private:
    int n_;
    std::array<Mask, kMaxVertices> adj_{};
};

/// Lexicographic position of pair (u, v), u < v, among all pairs of [n].
constexpr int pair_index(int n, int u, int v) { return u * (2 * n - u - 1) / 2 + (v - u - 1); }

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// All pairs u < v of [n] in lexicographic order.
std::vector<Edge> all_pairs(int n);

// Standard families, used throughout tests and experiments.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph perfect_matching_graph(int edges);
Graph star_graph(int leaves);

/// Disjoint union; vertices of `b` are shifted by |a|.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Cartesian product G □ H. Vertex (u, u') maps to u * |H| + u'.
Graph cartesian_product(const Graph& g, const Graph& h);

std::int64_t triangle_count(const Graph& g);
bool is_triangle_free(const Graph& g);

/// Triangle-free and every non-edge has a common neighbour.
bool is_maximal_triangle_free(const Graph& g);

/// Size of a largest clique (exact, branch and bound).
int clique_number(const Graph& g);

bool is_bipartite(const Graph& g);

/// Connected components as vertex masks, ordered by lowest vertex.
std::vector<Mask> components(const Graph& g, Mask within);

/// Ordered vertex split; x and y are disjoint and cover the graph.
struct Bipartition {
    Mask x_mask = 0;
    Mask y_mask = 0;

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

int cut_size(const Graph& g, Mask x_mask);

struct MaxCut {
    int size = 0;
    Bipartition witness;
};

inline constexpr int kMaxCutLimit = 28;

/// Exact max-cut by exhaustive search over splits with 0 in X. The witness
/// is the maximizer with the smallest x_mask. Throws RangeError for n > 28.
MaxCut max_cut(const Graph& g, Execution exec = Execution::parallel);

/// Every maximizing split with 0 in X, in increasing x_mask order.
std::vector<Bipartition> all_max_cuts(const Graph& g);

struct MatchingResult {
    int size = 0;
    std::vector<Edge> edges;
};

/// Maximum-cardinality matching of G[within] (default: whole graph).
MatchingResult maximum_matching(const Graph& g);
MatchingResult maximum_matching(const Graph& g, Mask within);

/// Matching number only; cheaper than building the edge list.
int matching_number(const Graph& g, Mask within);

std::string to_string(const Graph& g);

}  // namespace mtf
