#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtf/graph.hpp"
#include "mtf/mis.hpp"

namespace mtf {

/// L_S[A]: one vertex per edge of the host graph A, two host edges adjacent
/// when an edge of S closes a triangle with them.
struct LinkGraph {
    /// host_edges[i] is the A-edge behind link vertex i, in lexicographic order.
    std::vector<Edge> host_edges;
    Graph graph{1};
};

/// Three vertices that witness a triangle relevant to a hypothesis check.
struct TriangleWitness {
    std::array<int, 3> vertices{};
    std::string kind;
};

/// Hypothesis failure carrying the offending triangle (or edge).
class HypothesisError : public InputError {
public:
    HypothesisError(const std::string& what, TriangleWitness witness)
        : InputError(what), witness_(std::move(witness)) {}
    const TriangleWitness& witness() const { return witness_; }

private:
    TriangleWitness witness_;
};

/// Builds L_S[A]. S and A share a vertex set and must be edge-disjoint
/// (InputError otherwise); e(A) may be at most 64 and must be at least 1
/// (RangeError).
LinkGraph build_link(const Graph& s, const Graph& a);

/// True iff L_S[A] has no triangle. Throws HypothesisError if S or A has one.
bool verify_claim_triangle_free(const Graph& s, const Graph& a);

struct ProductIdentity {
    bool equal = false;
    Graph link{1};
    Graph product{1};
};

/// Builds A = K_{|X|,|Y|} with X = {0..|X|-1}, Y the rest, places S on X and
/// T on Y, and compares L_{S+T}[A] with S □ T as labelled graphs. Host edge
/// (x, y) is link vertex x * |Y| + (y - |X|), which is the product index of
/// (x, y - |X|).
ProductIdentity check_product_identity(const Graph& s, const Graph& t);
bool verify_product_identity(const Graph& s, const Graph& t);

inline constexpr int kExtensionEdgeLimit = 20;

struct ExtensionCount {
    std::uint64_t count = 0;
    MisCount link_mis;
    /// Every extension's A-part was a maximal independent set of the link.
    bool all_maximal_independent = true;
};

/// Counts maximal triangle-free subgraphs of S + A that contain S, by
/// exhausting subsets of E(A). Throws HypothesisError when S or A has a
/// triangle or some A-edge forms a triangle with two S-edges, InputError
/// when S and A share an edge, RangeError for e(A) > 20.
ExtensionCount count_maximal_extensions(const Graph& s, const Graph& a,
                                        Execution exec = Execution::parallel);

/// The hypothesis check used above, exposed for sweep drivers.
std::optional<TriangleWitness> extension_hypothesis_violation(const Graph& s, const Graph& a);

}  // namespace mtf
