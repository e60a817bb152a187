#pragma once

#include <array>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mtf/graph.hpp"

namespace mtf {

/// Exact number of maximal independent sets. Always >= 1.
using MisCount = boost::multiprecision::cpp_int;

/// All maximal independent sets of G in increasing mask order.
std::vector<Mask> enumerate_mis(const Graph& g);

/// Exact MIS(G).
///
/// Every maximal independent set contains a vertex of N[u] for any vertex u,
/// so the search branches on which vertex of the smallest such closed
/// neighbourhood is the first one taken. Vertices skipped this way must be
/// dominated later; the state is (candidates, undominated-excluded) and is
/// memoized per call. Branches partition the solutions, so no filtering
/// step is needed.
MisCount count_mis(const Graph& g);

/// The unfiltered recursion R(G) = R(G - v) + R(G - N[v]) on a maximum
/// degree vertex, with R = 1 on edgeless graphs. An upper bound on MIS(G),
/// exact on some families, loose in general.
MisCount mis_branching_bound(const Graph& g);

/// Closed recurrences for paths and cycles, MIS(P_n) = MIS(P_{n-2}) +
/// MIS(P_{n-3}) and likewise for cycles. Paths need n >= 1, cycles n >= 3.
MisCount mis_path(int n);
MisCount mis_cycle(int n);

struct P3Packing {
    int k = 0;
    /// Each triple is {end, middle, end}; the middle vertex is adjacent to
    /// both ends.
    std::vector<std::array<int, 3>> triples;
};

inline constexpr int kP3PackingLimit = 30;

/// Maximum family of vertex-disjoint P3's in G[within]. Exact; throws
/// RangeError when more than 30 vertices are in play.
P3Packing max_p3_packing(const Graph& g);
P3Packing max_p3_packing(const Graph& g, Mask within);

struct BoundCheck {
    int n = 0;
    int k = 0;
    MisCount mis;
    /// n/2 - k/25, also kept exactly as (25n - 2k)/50.
    double bound_log2 = 0.0;
    int bound_times_50 = 0;
    /// bound_log2 - log2(mis).
    double slack = 0.0;
    /// MIS^50 <= 2^(25n - 2k), decided in integers.
    bool exact_holds = false;
};

/// Checks MIS(G) <= 2^(n/2 - k/25) with k the P3-packing number.
/// Throws InputError when G contains a triangle.
BoundCheck verify_mis_bound(const Graph& g);

/// MIS^50 <= 2^(25n - 2k) in exact arithmetic.
bool mis_bound_holds_exact(const MisCount& mis, int n, int k);

/// Smallest c with MIS(G) <= 2^(n/2 - k/c) for G = a C5 + b K2.
/// Throws InputError for a < 1 or b < 0.
double min_constant_for_family(int a, int b);

/// Smallest c for which MIS(G) <= 2^(n/2 - k/c) holds on this instance;
/// empty when k = 0 or when no positive constant works.
std::optional<double> implied_constant(const BoundCheck& check);

double log2_of(const MisCount& value);

}  // namespace mtf
