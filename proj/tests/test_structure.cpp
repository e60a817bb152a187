#include <doctest.h>

#include <random>

#include "mtf/enumeration.hpp"
#include "mtf/mis.hpp"
#include "mtf/structure.hpp"
#include "mtf/sweeps.hpp"
#include "oracles.hpp"

using namespace mtf;

TEST_CASE("structure witness examples") {
    const auto p3 = find_structure_partition(path_graph(3));
    REQUIRE(p3.has_value());
    CHECK(p3->partition.y_mask == 0b001);
    CHECK(p3->partition.x_mask == 0b110);
    CHECK(p3->matching.edges == std::vector<Edge>{{1, 2}});
    CHECK(is_valid_witness(path_graph(3), *p3));

    CHECK_FALSE(find_structure_partition(cycle_graph(4)).has_value());
    CHECK_FALSE(find_structure_partition(cycle_graph(5)).has_value());
    CHECK_FALSE(oracle::structure_y(cycle_graph(4)).has_value());
    CHECK_FALSE(oracle::structure_y(cycle_graph(5)).has_value());

    // Y may be empty
    const auto pm = find_structure_partition(perfect_matching_graph(3));
    REQUIRE(pm.has_value());
    CHECK(pm->partition.y_mask == 0);
    CHECK(pm->matching.size == 3);

    CHECK_THROWS_AS(find_structure_partition(Graph(25)), RangeError);
}

TEST_CASE("structure search matches the subset oracle") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n)); ++code) {
            const Graph g = Graph::from_edge_code(n, code);
            const auto w = find_structure_partition(g);
            const auto y = oracle::structure_y(g);
            REQUIRE(w.has_value() == y.has_value());
            if (w) {
                REQUIRE(w->partition.y_mask == *y);
                REQUIRE(is_valid_witness(g, *w));
            }
        }
    }
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> order(6, 11);
        const Graph g = random_graph(order(rng), 0.3, rng);
        const auto w = find_structure_partition(g);
        const auto y = oracle::structure_y(g);
        REQUIRE(w.has_value() == y.has_value());
        if (w) REQUIRE(w->partition.y_mask == *y);
    }
}

TEST_CASE("is_valid_witness rejects bad witnesses") {
    const Graph p3 = path_graph(3);
    StructureWitness w = *find_structure_partition(p3);
    StructureWitness bad = w;
    bad.partition.y_mask = 0b011;
    bad.partition.x_mask = 0b100;
    CHECK_FALSE(is_valid_witness(p3, bad));
    bad = w;
    bad.matching.edges.clear();
    CHECK_FALSE(is_valid_witness(p3, bad));
    CHECK_THROWS_AS(check_one_cross_edge(p3, bad), InputError);
    CHECK(check_one_cross_edge(p3, w));
}

TEST_CASE("one cross edge fails when y misses a matching edge") {
    // y = 4 sees the matching edge 01 once and 23 not at all
    const Graph g = Graph::from_edges(5, {{0, 1}, {2, 3}, {0, 4}});
    const StructureWitness w{{0b01111, 0b10000}, {2, {{0, 1}, {2, 3}}}};
    REQUIRE(is_valid_witness(g, w));
    CHECK_FALSE(check_one_cross_edge(g, w));
}

TEST_CASE("closeness_to_bipartite") {
    CHECK(closeness_to_bipartite(cycle_graph(5)) == 1);
    CHECK(closeness_to_bipartite(complete_graph(4)) == 2);
    CHECK(closeness_to_bipartite(cycle_graph(6)) == 0);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> order(1, 10);
        const Graph g = random_graph(order(rng), 0.4, rng);
        REQUIRE((closeness_to_bipartite(g) == 0) == oracle::two_colorable(g));
    }
}

TEST_CASE("graph_stats example") {
    const GraphStats st = graph_stats(perfect_matching_graph(2));
    CHECK(st.cut.x_mask == 0b0101);
    CHECK(st.cut_size == 2);
    CHECK(st.s == 0);
    CHECK(st.t == 0);
    CHECK(st.r == 2);
    CHECK(st.max_inner_degree_x == 0);
    CHECK(st.max_inner_degree_y == 0);

    const GraphStats c5 = graph_stats(cycle_graph(5));
    CHECK(c5.cut_size == 4);
    CHECK(c5.s + c5.t == 1);
}

TEST_CASE("graph_stats against definitions") {
    std::mt19937_64 rng(27);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> order(2, 10);
        const Graph g = random_triangle_free(order(rng), rng);
        const GraphStats st = graph_stats(g);
        REQUIRE(st.cut_size == max_cut(g).size);
        // vertex 0 is always on the X side
        REQUIRE(st.s == oracle::p3_packing(g.induced(st.cut.x_mask)));
        if (st.cut.y_mask) REQUIRE(st.t == oracle::matching_number(g.induced(st.cut.y_mask)));
        else REQUIRE(st.t == 0);
    }
}

TEST_CASE("graph_stats_all_cuts") {
    const auto all = graph_stats_all_cuts(cycle_graph(5));
    REQUIRE(all.size() == 5);
    for (const auto& st : all) CHECK(st.cut_size == 4);
    CHECK_THROWS_AS(graph_stats_all_cuts(Graph(17)), RangeError);
}

TEST_CASE("structure_fraction") {
    for (int n = 1; n <= 7; ++n) {
        const EnumerationReport serial = structure_fraction(n, Execution::serial);
        const EnumerationReport parallel = structure_fraction(n, Execution::parallel);
        CHECK(serial.total == parallel.total);
        CHECK(serial.by_structure == parallel.by_structure);
        std::uint64_t expected = 0;
        for (const Graph& g : enumerate_mtf(n)) expected += oracle::structure_y(g).has_value();
        CHECK(serial.by_structure == expected);
    }
    CHECK(structure_fraction(5).total == 27);
}

TEST_CASE("maximal graphs with a witness have one cross edge per matching edge and y") {
    for (int n = 1; n <= 8; ++n) {
        for (std::uint64_t code : enumerate_mtf_codes(n)) {
            const Graph g = Graph::from_edge_code(n, code);
            if (const auto w = find_structure_partition(g)) REQUIRE(check_one_cross_edge(g, *w));
        }
    }
}

TEST_CASE("structure_records") {
    const std::vector<Graph> graphs{path_graph(3), cycle_graph(5), perfect_matching_graph(2)};
    const auto serial = structure_records(graphs, Execution::serial);
    const auto parallel = structure_records(graphs, Execution::parallel);
    REQUIRE(serial.size() == 3);
    CHECK(serial[0].witness->partition.y_mask == 1);
    CHECK_FALSE(serial[1].witness.has_value());
    CHECK(serial[1].closeness == 1);
    CHECK(serial[2].stats.r == 2);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        CHECK(serial[i].closeness == parallel[i].closeness);
        CHECK(serial[i].stats.cut == parallel[i].stats.cut);
    }
    const std::vector<Graph> big{Graph(25)};
    CHECK_THROWS_AS(structure_records(big), RangeError);
}
