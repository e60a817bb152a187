#include <doctest.h>

#include <random>

#include "mtf/linkgraph.hpp"
#include "mtf/mis.hpp"
#include "mtf/sweeps.hpp"
#include "oracles.hpp"

using namespace mtf;

namespace {

// Link adjacency straight from the definition: two A-edges are adjacent when
// they and some S-edge span a triangle.
bool link_adjacent(const Graph& s, const Edge& e, const Edge& f) {
    for (int a = 0; a < s.order(); ++a)
        for (int b = a + 1; b < s.order(); ++b)
            for (int c = b + 1; c < s.order(); ++c) {
                const std::array<Edge, 3> sides{Edge(a, b), Edge(a, c), Edge(b, c)};
                int hit_e = -1;
                int hit_f = -1;
                for (int i = 0; i < 3; ++i) {
                    if (sides[i] == e) hit_e = i;
                    if (sides[i] == f) hit_f = i;
                }
                if (hit_e < 0 || hit_f < 0) continue;
                const Edge& rest = sides[3 - hit_e - hit_f];
                if (s.has_edge(rest.u, rest.v)) return true;
            }
    return false;
}

// Random edge-disjoint triangle-free pair.
std::pair<Graph, Graph> random_pair(int n, std::mt19937_64& rng) {
    const Graph s = random_triangle_free(n, rng);
    std::vector<Edge> a_edges;
    Graph a(n);
    for (const Edge& e : all_pairs(n)) {
        if (s.has_edge(e.u, e.v) || (rng() & 1)) continue;
        const Graph next = a.with_edge(e.u, e.v);
        if (is_triangle_free(next)) a = next;
    }
    return {s, a};
}

}  // namespace

TEST_CASE("build_link example") {
    // S = {02}, A = {01, 12}: the two A-edges and 02 form a triangle
    const Graph s = Graph::from_edges(3, {{0, 2}});
    const Graph a = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const LinkGraph link = build_link(s, a);
    CHECK(link.graph.order() == 2);
    CHECK(link.graph.has_edge(0, 1));
    CHECK(link.host_edges == std::vector<Edge>{{0, 1}, {1, 2}});

    CHECK_FALSE(build_link(Graph(3), a).graph.has_edge(0, 1));
}

TEST_CASE("build_link input validation") {
    const Graph s = Graph::from_edges(3, {{0, 1}});
    CHECK_THROWS_AS(build_link(s, s), InputError);
    CHECK_THROWS_AS(build_link(s, Graph(4)), InputError);
    CHECK_THROWS_AS(build_link(s, Graph(3)), RangeError);
    CHECK_THROWS_AS(build_link(Graph(12), complete_graph(12)), RangeError);
    CHECK_NOTHROW(build_link(Graph(16), complete_bipartite(8, 8)));
}

TEST_CASE("build_link matches the triangle definition") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> order(3, 8);
        const int n = order(rng);
        const Graph s = random_graph(n, 0.4, rng);
        Graph a(n);
        for (const Edge& e : all_pairs(n)) {
            if (!s.has_edge(e.u, e.v) && (rng() % 3 == 0)) a = a.with_edge(e.u, e.v);
        }
        if (a.edge_count() == 0) continue;
        const LinkGraph link = build_link(s, a);
        for (int i = 0; i < link.graph.order(); ++i)
            for (int j = i + 1; j < link.graph.order(); ++j)
                REQUIRE(link.graph.has_edge(i, j) == link_adjacent(s, link.host_edges[i], link.host_edges[j]));
    }
}

TEST_CASE("link of triangle-free pairs is triangle-free") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uniform_int_distribution<int> order(2, 12);
        auto [s, a] = random_pair(order(rng), rng);
        if (a.edge_count() == 0) continue;
        REQUIRE(verify_claim_triangle_free(s, a));
    }
}

TEST_CASE("verify_claim_triangle_free reports hypothesis failures") {
    const Graph k3 = complete_graph(3);
    try {
        verify_claim_triangle_free(Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}}), Graph::from_edges(4, {{0, 3}}));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.witness().vertices == std::array<int, 3>{0, 1, 2});
        CHECK(e.witness().kind == "S-triangle");
    }
    CHECK_THROWS_AS(verify_claim_triangle_free(Graph(3), k3), HypothesisError);
}

TEST_CASE("product identity examples") {
    const Graph p2 = path_graph(2);
    const ProductIdentity r = check_product_identity(p2, p2);
    CHECK(r.equal);
    CHECK(r.link == cartesian_product(p2, p2));
    CHECK(verify_product_identity(cycle_graph(5), path_graph(3)));
    CHECK(verify_product_identity(Graph(1), Graph(1)));
    CHECK_THROWS_AS(check_product_identity(Graph(9), Graph(8)), RangeError);
}

TEST_CASE("product identity on random graphs, triangles allowed") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        std::uniform_int_distribution<int> side(1, 7);
        const Graph s = random_graph(side(rng), 0.5, rng);
        const Graph t = random_graph(std::min(side(rng), 64 / s.order()), 0.5, rng);
        REQUIRE(verify_product_identity(s, t));
    }
}

TEST_CASE("count_maximal_extensions examples") {
    // S = {02}, A = {01, 12}: link is an edge, two extensions
    const Graph s = Graph::from_edges(3, {{0, 2}});
    const Graph a = Graph::from_edges(3, {{0, 1}, {1, 2}});
    const ExtensionCount c = count_maximal_extensions(s, a);
    CHECK(c.count == 2);
    CHECK(c.link_mis == 2);
    CHECK(c.all_maximal_independent);

    // empty A: S is the only extension
    CHECK(count_maximal_extensions(s, Graph(3)).count == 1);

    // A = C5 with S empty: one extension (all of A)
    const ExtensionCount c5 = count_maximal_extensions(Graph(5), cycle_graph(5));
    CHECK(c5.count == 1);
    CHECK(c5.link_mis == 1);
}

TEST_CASE("count_maximal_extensions hypothesis checks") {
    const Graph k3 = complete_graph(3);
    CHECK_THROWS_AS(count_maximal_extensions(k3, Graph(3)), HypothesisError);
    CHECK_THROWS_AS(count_maximal_extensions(Graph(3), k3), HypothesisError);
    // A-edge 02 with S-edges 01, 12
    try {
        count_maximal_extensions(path_graph(3), Graph::from_edges(3, {{0, 2}}));
        FAIL("expected HypothesisError");
    } catch (const HypothesisError& e) {
        CHECK(e.witness().vertices == std::array<int, 3>{0, 2, 1});
    }
    CHECK_THROWS_AS(count_maximal_extensions(path_graph(3), path_graph(3)), InputError);
    CHECK_THROWS_AS(count_maximal_extensions(Graph(14), complete_bipartite(7, 7)), RangeError);
}

TEST_CASE("extension count is bounded by MIS of the link") {
    std::mt19937_64 rng(45);
    int checked = 0;
    for (int trial = 0; trial < 600; ++trial) {
        std::uniform_int_distribution<int> order(2, 9);
        auto [s, a] = random_pair(order(rng), rng);
        if (a.edge_count() == 0 || a.edge_count() > 14 || extension_hypothesis_violation(s, a)) continue;
        const ExtensionCount serial = count_maximal_extensions(s, a, Execution::serial);
        const ExtensionCount parallel = count_maximal_extensions(s, a, Execution::parallel);
        REQUIRE(serial.count == parallel.count);
        REQUIRE(serial.all_maximal_independent == parallel.all_maximal_independent);
        REQUIRE(serial.all_maximal_independent);
        REQUIRE(MisCount(serial.count) <= serial.link_mis);
        REQUIRE(serial.link_mis == oracle::all_mis(build_link(s, a).graph).size());
        ++checked;
    }
    CHECK(checked > 100);
}
