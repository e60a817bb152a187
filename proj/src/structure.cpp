#include "mtf/structure.hpp"

#include <algorithm>
#include <chrono>

#include "mtf/mis.hpp"

namespace mtf {

namespace {

// Assigns vertices from n-1 down to 0, trying X before Y, so the first
// complete assignment has the smallest Y mask.
class WitnessSearch {
public:
    explicit WitnessSearch(const Graph& g) : g_(g) {}

    std::optional<Mask> run() {
        if (assign(g_.order() - 1, 0, 0)) return found_;
        return std::nullopt;
    }

private:
    bool assign(int v, Mask x, Mask y) {
        if (v < 0) {
            found_ = y;
            return true;
        }
        const Mask nb = g_.neighbors(v);
        // v into X
        if (popcount(nb & x) <= 1) {
            const Mask nx = x | bit(v);
            if (consistent(nx, v) && assign(v - 1, nx, y)) return true;
        }
        // v into Y
        if ((nb & y) == 0) {
            if (consistent(x, v) && assign(v - 1, x, y | bit(v))) return true;
        }
        return false;
    }

    // Every X vertex has at most one X-neighbour; those whose neighbourhood
    // is fully decided (no neighbour below v) have exactly one.
    bool consistent(Mask x, int v) const {
        const Mask undecided = low_bits(v);
        for (Mask m = x; m; m &= m - 1) {
            const int u = lowest(m);
            const int inner = popcount(g_.neighbors(u) & x);
            if (inner > 1) return false;
            if (inner == 0 && (g_.neighbors(u) & undecided) == 0) return false;
        }
        return true;
    }

    const Graph& g_;
    Mask found_ = 0;
};

void check_structure_range(const Graph& g) {
    if (g.order() > kStructureLimit) {
        throw RangeError("structure search supports n <= 24, got " + std::to_string(g.order()));
    }
}

}  // namespace

std::optional<StructureWitness> find_structure_partition(const Graph& g) {
    check_structure_range(g);
    WitnessSearch search(g);
    const std::optional<Mask> y = search.run();
    if (!y) return std::nullopt;
    StructureWitness w;
    w.partition.y_mask = *y;
    w.partition.x_mask = g.vertices() & ~*y;
    for (Mask m = w.partition.x_mask; m; m &= m - 1) {
        const int u = lowest(m);
        const int v = lowest(g.neighbors(u) & w.partition.x_mask);
        if (u < v) w.matching.edges.emplace_back(u, v);
    }
    w.matching.size = static_cast<int>(w.matching.edges.size());
    return w;
}

bool is_valid_witness(const Graph& g, const StructureWitness& w) {
    const Mask x = w.partition.x_mask;
    const Mask y = w.partition.y_mask;
    if ((x & y) != 0 || (x | y) != g.vertices()) return false;
    for (Mask m = y; m; m &= m - 1) {
        if (g.neighbors(lowest(m)) & y) return false;
    }
    for (Mask m = x; m; m &= m - 1) {
        if (popcount(g.neighbors(lowest(m)) & x) != 1) return false;
    }
    Mask covered = 0;
    for (const Edge& e : w.matching.edges) {
        if (!g.has_edge(e.u, e.v) || !((x >> e.u) & 1) || !((x >> e.v) & 1)) return false;
        if (covered & (bit(e.u) | bit(e.v))) return false;
        covered |= bit(e.u) | bit(e.v);
    }
    return covered == x && w.matching.size == static_cast<int>(w.matching.edges.size());
}

bool check_one_cross_edge(const Graph& g, const StructureWitness& w) {
    if (!is_valid_witness(g, w)) throw InputError("invalid structure witness for " + to_string(g));
    for (const Edge& e : w.matching.edges) {
        const Mask pair = bit(e.u) | bit(e.v);
        for (Mask m = w.partition.y_mask; m; m &= m - 1) {
            if (popcount(g.neighbors(lowest(m)) & pair) != 1) return false;
        }
    }
    return true;
}

GraphStats graph_stats(const Graph& g) {
    check_structure_range(g);
    const MaxCut cut = max_cut(g);
    return graph_stats(g, cut.witness);
}

GraphStats graph_stats(const Graph& g, const Bipartition& cut) {
    GraphStats st;
    st.cut = cut;
    st.cut_size = cut_size(g, cut.x_mask);
    st.s = max_p3_packing(g, cut.x_mask).k;
    st.t = matching_number(g, cut.y_mask);
    for (Mask m = cut.x_mask; m; m &= m - 1) {
        const int inner = popcount(g.neighbors(lowest(m)) & cut.x_mask);
        if (inner == 0) ++st.r;
        st.max_inner_degree_x = std::max(st.max_inner_degree_x, inner);
    }
    for (Mask m = cut.y_mask; m; m &= m - 1) {
        st.max_inner_degree_y = std::max(st.max_inner_degree_y, popcount(g.neighbors(lowest(m)) & cut.y_mask));
    }
    return st;
}

std::vector<GraphStats> graph_stats_all_cuts(const Graph& g) {
    if (g.order() > kAllCutsLimit) throw RangeError("all-max-cut statistics support n <= 16");
    std::vector<GraphStats> out;
    for (const Bipartition& b : all_max_cuts(g)) out.push_back(graph_stats(g, b));
    return out;
}

std::vector<StructureRecord> structure_records(std::span<const Graph> graphs, Execution exec) {
    std::vector<StructureRecord> out(graphs.size());
    auto fill = [&](std::size_t i) {
        const Graph& g = graphs[i];
        out[i].witness = find_structure_partition(g);
        out[i].stats = graph_stats(g);
        out[i].closeness = g.edge_count() - out[i].stats.cut_size;
    };
    for (const Graph& g : graphs) check_structure_range(g);
    const auto total = static_cast<std::int64_t>(graphs.size());
    if (exec == Execution::serial) {
        for (std::int64_t i = 0; i < total; ++i) fill(static_cast<std::size_t>(i));
    } else {
#pragma omp parallel for schedule(dynamic, 16) num_threads(worker_count())
        for (std::int64_t i = 0; i < total; ++i) fill(static_cast<std::size_t>(i));
    }
    return out;
}

int closeness_to_bipartite(const Graph& g) { return g.edge_count() - max_cut(g).size; }

EnumerationReport structure_fraction(int n, Execution exec) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::uint64_t> codes = enumerate_mtf_codes(n, exec);
    std::uint64_t structured = 0;
    const auto total = static_cast<std::int64_t>(codes.size());
    if (exec == Execution::serial) {
        for (std::int64_t i = 0; i < total; ++i) {
            if (find_structure_partition(Graph::from_edge_code(n, codes[i]))) ++structured;
        }
    } else {
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : structured) num_threads(worker_count())
        for (std::int64_t i = 0; i < total; ++i) {
            if (find_structure_partition(Graph::from_edge_code(n, codes[i]))) ++structured;
        }
    }
    EnumerationReport rep;
    rep.n = n;
    rep.total = codes.size();
    rep.by_structure = structured;
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

}  // namespace mtf
