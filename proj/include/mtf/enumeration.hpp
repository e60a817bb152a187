#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mtf/graph.hpp"

namespace mtf {

/// True when a's edge code is smaller than b's (edge-set order used by every
/// enumeration output). Graphs of different order compare by order first.
bool edge_order_less(const Graph& a, const Graph& b);

inline constexpr int kBruteForceLimit = 6;
inline constexpr int kEnumerationLimit = 10;

/// Independent oracle: scans all 2^(n(n-1)/2) labelled graphs and keeps the
/// maximal triangle-free ones, in increasing edge-code order. n in [1, 6].
std::vector<Graph> brute_force_mtf(int n);

/// Every labelled maximal triangle-free graph on [n], as sorted edge codes.
///
/// Pairs are decided in lexicographic order. A pair whose endpoints already
/// share a neighbour is forced out; otherwise both branches are explored,
/// and an excluded pair stays viable only while some third vertex can still
/// become a common neighbour. Each labelled graph has exactly one decision
/// path, so the output is duplicate-free without a seen-set.
/// n in [1, 10].
std::vector<std::uint64_t> enumerate_mtf_codes(int n, Execution exec = Execution::parallel);

/// Same set, materialized as graphs (convenient for small n).
std::vector<Graph> enumerate_mtf(int n, Execution exec = Execution::parallel);

/// Streams the graphs in search order (not sorted) on the calling thread.
void enumerate_mtf(int n, const std::function<void(const Graph&)>& sink);

/// Adds non-edges greedily: first every pair in `order` (in that order),
/// then every remaining pair lexicographically, each one only if it closes
/// no triangle. Throws InputError when g has a triangle or `order` names a
/// pair outside [n].
Graph maximal_completion(const Graph& g, std::span<const Edge> order = {});

inline constexpr std::uint64_t kCompletionBudget = std::uint64_t{1} << 20;

/// All maximal triangle-free supergraphs of g on the same vertices, sorted
/// by edge_order_less. Throws InputError when g has a triangle and
/// RangeError once the search visits more than 2^20 nodes.
std::vector<Graph> all_completions(const Graph& g);

/// Canonical label for isomorphism classes: the smallest edge code over the
/// leaves of an individualization-refinement search. n <= 10.
std::uint64_t canonical_code(const Graph& g);

/// Number of isomorphism classes among sorted-or-not labelled codes. When
/// the set is closed under relabelling (a full enumeration), only labellings
/// with non-increasing degrees need canonical forms; pass `closed` to use that.
std::uint64_t count_isomorphism_classes(int n, std::span<const std::uint64_t> codes, bool closed = false);

struct EnumerationReport {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t by_structure = 0;
    double elapsed_ms = 0.0;
    std::optional<std::uint64_t> unlabeled;
};

}  // namespace mtf
