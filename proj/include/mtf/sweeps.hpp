#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"

#include "mtf/graph.hpp"
#include "mtf/mis.hpp"

namespace mtf {

// Batch verifiers behind `mtf verify`. Each sweep maps a pure check over
// independent instances; the parallel and serial paths produce identical
// results. Random instances are drawn from trial_seed(seed, index), so the
// outcome does not depend on the worker count.

struct SweepResult {
    std::string claim;
    std::uint64_t instances = 0;
    std::uint64_t violations = 0;
    /// Witnesses of the first violations in instance order (capped).
    std::vector<nlohmann::json> witnesses;
    /// Claim-specific aggregates (extremes, seeds, parameters).
    nlohmann::json summary = nlohmann::json::object();

    bool ok() const { return violations == 0; }
};

inline constexpr std::size_t kWitnessCap = 50;

/// Random graph where each pair is an edge with probability p.
Graph random_graph(int n, double p, std::mt19937_64& rng);

/// Random triangle-free graph: pairs in random order, each kept with a
/// random acceptance rate when it closes no triangle.
Graph random_triangle_free(int n, std::mt19937_64& rng);

/// JSON record {graph6, n, k, mis, slack, exact}.
nlohmann::json bound_record(const Graph& g, const BoundCheck& check);

/// MIS bound on every labelled triangle-free graph with 1 <= n <= max_n.
SweepResult sweep_mis_bound_exhaustive(int max_n, Execution exec = Execution::parallel);

/// MIS bound on seeded random triangle-free graphs with 1 <= n <= max_n.
SweepResult sweep_mis_bound_random(std::uint64_t trials, int max_n, std::uint64_t seed,
                                   Execution exec = Execution::parallel);

/// Link triangle-freeness over all edge-disjoint triangle-free (S, A) with
/// e(A) >= 1 on n <= max_n vertices.
SweepResult sweep_link_triangle_free_exhaustive(int max_n, Execution exec = Execution::parallel);
SweepResult sweep_link_triangle_free_random(std::uint64_t trials, int max_n, std::uint64_t seed,
                                            Execution exec = Execution::parallel);

/// Link/product identity over all S on X and T on Y with |X|, |Y| <= max_side.
SweepResult sweep_link_product_exhaustive(int max_side, Execution exec = Execution::parallel);
SweepResult sweep_link_product_random(std::uint64_t trials, int max_side, std::uint64_t seed,
                                      Execution exec = Execution::parallel);

/// Extension count <= MIS(link) over all hypothesis-satisfying (S, A) with
/// 1 <= e(A) <= max_edges on n <= max_n vertices.
SweepResult sweep_extension_count_exhaustive(int max_n, int max_edges, Execution exec = Execution::parallel);
SweepResult sweep_extension_count_random(std::uint64_t trials, int max_n, int max_edges, std::uint64_t seed,
                                         Execution exec = Execution::parallel);

/// Family constant for a C5 + b K2, cross-checked against exact MIS and
/// packing numbers of the actual graphs for small a, b.
SweepResult sweep_remark_constant(Execution exec = Execution::parallel);

nlohmann::json to_json(const SweepResult& r);

}  // namespace mtf
