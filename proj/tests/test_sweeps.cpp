#include <doctest.h>

#include <random>

#include "mtf/mis.hpp"
#include "mtf/parallel.hpp"
#include "mtf/sweeps.hpp"

using namespace mtf;

TEST_CASE("trial_seed is a pure function of seed and index") {
    CHECK(trial_seed(1, 0) == trial_seed(1, 0));
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
    CHECK(trial_seed(1, 0) != trial_seed(2, 0));
}

TEST_CASE("random generators") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_triangle_free(1 + trial % 30, rng);
        REQUIRE(is_triangle_free(g));
    }
    CHECK(random_graph(10, 0.0, rng).edge_count() == 0);
    CHECK(random_graph(10, 1.0, rng).edge_count() == 45);
}

TEST_CASE("mis bound sweeps") {
    const SweepResult ex = sweep_mis_bound_exhaustive(5, Execution::serial);
    CHECK(ex.ok());
    // triangle-free labelled graphs on 1..5 vertices: 1 + 2 + 7 + 41 + 388
    CHECK(ex.instances == 439);
    CHECK(to_json(ex) == to_json(sweep_mis_bound_exhaustive(5, Execution::parallel)));
    CHECK(ex.summary["min_slack"].get<double>() >= 0.0);

    const SweepResult r = sweep_mis_bound_random(3000, 14, 7);
    CHECK(r.ok());
    CHECK(r.instances == 3000);
    CHECK(to_json(r) == to_json(sweep_mis_bound_random(3000, 14, 7, Execution::serial)));
    CHECK(to_json(r) != to_json(sweep_mis_bound_random(3000, 14, 8)));
    CHECK_THROWS_AS(sweep_mis_bound_exhaustive(8), RangeError);
}

TEST_CASE("sweep output does not depend on the worker count") {
    const int before = worker_count();
    set_worker_count(1);
    const auto one = to_json(sweep_link_triangle_free_random(2000, 9, 3));
    set_worker_count(4);
    const auto four = to_json(sweep_link_triangle_free_random(2000, 9, 3));
    set_worker_count(before);
    CHECK(one == four);
}

TEST_CASE("link sweeps") {
    const SweepResult tf = sweep_link_triangle_free_exhaustive(4);
    CHECK(tf.ok());
    CHECK(tf.instances > 0);
    const SweepResult prod = sweep_link_product_exhaustive(2);
    CHECK(prod.ok());
    // graphs on sides 1..2 squared: (1 + 2)^2
    CHECK(prod.instances == 9);
    CHECK(sweep_link_product_random(500, 5, 1).ok());
}

TEST_CASE("extension sweeps") {
    const SweepResult ex = sweep_extension_count_exhaustive(4, 12);
    CHECK(ex.ok());
    CHECK(ex.instances > 0);
    CHECK(ex.summary["max_ratio"].get<double>() <= 1.0);
    CHECK(sweep_extension_count_random(300, 8, 12, 5).ok());
}

TEST_CASE("remark constant sweep") {
    const SweepResult r = sweep_remark_constant();
    CHECK(r.ok());
    CHECK(r.instances == 12);
    CHECK(r.summary["constant"].get<double>() == doctest::Approx(5.615709).epsilon(1e-6));
}

TEST_CASE("bound_record fields") {
    const BoundCheck c = verify_mis_bound(cycle_graph(5));
    const auto rec = bound_record(cycle_graph(5), c);
    CHECK(rec["graph6"] == "Dhc");
    CHECK(rec["mis"] == "5");
    CHECK(rec["k"] == 1);
}
