#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mtf/graph.hpp"

namespace mtf {

// Classes are contiguous blocks of [n] with n/r vertices each: X_1, ...,
// X_{r-1}, then Y. Inside each X_i the matching pairs consecutive vertices
// (2j, 2j+1 relative to the class start).

struct ConstructionFamily {
    int n = 0;
    int r = 0;
    /// X_1 .. X_{r-1}, Y.
    std::vector<Mask> classes;
    /// Perfect matching of each X_i.
    std::vector<MatchingResult> matchings;
};

/// Throws RangeError unless r >= 2, n >= 2r and 2r divides n, n <= 64.
ConstructionFamily construction_family(int n, int r);

/// Choice vector for a seed graph.
///
/// omit[p] in {0,1,2,3} picks which of the four cross edges between a pair
/// of matching edges from different classes is left out; pairs are listed
/// by (class i, edge a, class j > i, edge b). For edges {a0,a1}, {b0,b1}
/// the cross edges are numbered a0b0, a0b1, a1b0, a1b1.
///
/// pick[q] selects the endpoint (0 = lower, 1 = upper) of a matching edge
/// that a Y-vertex attaches to; pairs are listed by (class, edge, y).
struct SeedChoice {
    std::vector<std::uint8_t> omit;
    std::vector<std::uint8_t> pick;

    friend bool operator==(const SeedChoice&, const SeedChoice&) = default;
};

struct ChoiceShape {
    std::size_t omit_slots = 0;
    std::size_t pick_slots = 0;
    /// log2 of the number of distinct choice vectors.
    std::size_t bits() const { return 2 * omit_slots + pick_slots; }
};

ChoiceShape choice_shape(int n, int r);

/// Lower-bound seed for r = 2: X = {0..n/2-1} matched as {2i, 2i+1}, Y the
/// rest, one edge between each matching edge and each y. `pick` has
/// (n/4)(n/2) entries. Throws RangeError unless 4 | n, InputError on a
/// wrong-length choice.
Graph seed_graph(int n, const std::vector<std::uint8_t>& pick);

/// General seed: exactly three edges between matching edges of different
/// classes, one edge between each matching edge and each Y-vertex.
Graph seed_graph_general(int n, int r, const SeedChoice& choice);

/// Adds pairs in lexicographic order whenever the result stays K_{r+1}-free.
/// For r = 2 this is maximal_completion. Throws InputError when g already
/// contains K_{r+1}, RangeError for r < 2.
Graph clique_free_completion(const Graph& g, int r);

/// Choice vectors as hex: the bit string (omit entries as two bits each,
/// low bit first, then pick bits) read as a little-endian integer,
/// printed most-significant digit first and zero-padded to the shape.
std::string choice_to_hex(int n, int r, const SeedChoice& choice);
SeedChoice choice_from_hex(int n, int r, std::string_view hex);

/// The index-th choice vector, bits taken from `index` as in choice_to_hex.
/// Only for shapes with at most 63 bits.
SeedChoice choice_from_index(int n, int r, std::uint64_t index);

SeedChoice random_choice(int n, int r, std::mt19937_64& rng);

/// [X, Y] edge set of g for a split, as one mask row per X-vertex.
std::vector<Mask> cross_edges(const Graph& g, Mask x_mask);

struct DistinctnessReport {
    bool ok = false;
    std::size_t seeds = 0;
    std::size_t distinct_completions = 0;
    bool all_maximal = true;
    bool cross_edges_preserved = true;
    bool no_cross_edge_addable = true;
    /// Choice indices of the first colliding pair, when one exists.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> collision;
};

/// Completes every r = 2 seed lexicographically and checks that completions
/// are pairwise distinct and maximal, that no [X, Y] non-edge is addable in
/// any seed, and that completions keep the seed's [X, Y] edges. n in {4, 8}.
DistinctnessReport verify_distinct_completions(int n, Execution exec = Execution::parallel);

}  // namespace mtf
