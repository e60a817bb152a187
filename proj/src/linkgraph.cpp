#include "mtf/linkgraph.hpp"

#include <algorithm>

namespace mtf {

namespace {

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        for (Mask m = g.neighbors(u) & ~low_bits(u + 1); m; m &= m - 1) {
            const int v = lowest(m);
            if (Mask common = g.neighbors(u) & g.neighbors(v)) return std::array<int, 3>{u, v, lowest(common)};
        }
    }
    return std::nullopt;
}

void require_same_order(const Graph& s, const Graph& a) {
    if (s.order() != a.order()) throw InputError("S and A must live on the same vertex set");
}

void require_edge_disjoint(const Graph& s, const Graph& a) {
    for (int u = 0; u < s.order(); ++u) {
        if (Mask both = s.neighbors(u) & a.neighbors(u)) {
            throw InputError("S and A share the edge " + std::to_string(u) + "-" + std::to_string(lowest(both)));
        }
    }
}

void require_triangle_free(const Graph& g, const char* name) {
    if (auto t = find_triangle(g)) {
        throw HypothesisError(std::string(name) + " contains a triangle", {*t, std::string(name) + "-triangle"});
    }
}

}  // namespace

LinkGraph build_link(const Graph& s, const Graph& a) {
    require_same_order(s, a);
    require_edge_disjoint(s, a);
    LinkGraph link;
    link.host_edges = a.edges();
    const int m = static_cast<int>(link.host_edges.size());
    if (m == 0) throw RangeError("link graph of an edgeless host has no vertices");
    if (m > kMaxVertices) throw RangeError("link graph would have " + std::to_string(m) + " vertices (max 64)");

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        const Edge& e = link.host_edges[i];
        for (int j = i + 1; j < m; ++j) {
            const Edge& f = link.host_edges[j];
            // Two A-edges close a triangle with an S-edge exactly when they
            // share an endpoint and their free endpoints are S-adjacent.
            int p = -1;
            int q = -1;
            if (e.u == f.u) { p = e.v; q = f.v; }
            else if (e.u == f.v) { p = e.v; q = f.u; }
            else if (e.v == f.u) { p = e.u; q = f.v; }
            else if (e.v == f.v) { p = e.u; q = f.u; }
            if (p >= 0 && s.has_edge(p, q)) edges.emplace_back(i, j);
        }
    }
    link.graph = Graph::from_edges(m, edges);
    return link;
}

bool verify_claim_triangle_free(const Graph& s, const Graph& a) {
    require_triangle_free(s, "S");
    require_triangle_free(a, "A");
    return triangle_count(build_link(s, a).graph) == 0;
}

ProductIdentity check_product_identity(const Graph& s, const Graph& t) {
    const int nx = s.order();
    const int ny = t.order();
    if (nx * ny > kMaxVertices) throw RangeError("|X||Y| exceeds 64");
    const int n = nx + ny;
    if (n > kMaxVertices) throw RangeError("|X|+|Y| exceeds 64");

    std::vector<Edge> host;
    for (const Edge& e : s.edges()) host.push_back(e);
    for (const Edge& e : t.edges()) host.emplace_back(e.u + nx, e.v + nx);
    const Graph s_union_t = Graph::from_edges(n, host);
    const Graph a = complete_bipartite(nx, ny);

    ProductIdentity r;
    r.link = build_link(s_union_t, a).graph;
    r.product = cartesian_product(s, t);
    r.equal = r.link == r.product;
    return r;
}

bool verify_product_identity(const Graph& s, const Graph& t) { return check_product_identity(s, t).equal; }

std::optional<TriangleWitness> extension_hypothesis_violation(const Graph& s, const Graph& a) {
    if (auto t = find_triangle(s)) return TriangleWitness{*t, "S-triangle"};
    if (auto t = find_triangle(a)) return TriangleWitness{*t, "A-triangle"};
    // an A-edge uv with a common S-neighbour w gives the triangle {uv, uw, vw}
    for (const Edge& e : a.edges()) {
        if (Mask w = s.neighbors(e.u) & s.neighbors(e.v)) {
            return TriangleWitness{{e.u, e.v, lowest(w)}, "A-edge with two S-edges"};
        }
    }
    return std::nullopt;
}

ExtensionCount count_maximal_extensions(const Graph& s, const Graph& a, Execution exec) {
    require_same_order(s, a);
    require_edge_disjoint(s, a);
    if (auto bad = extension_hypothesis_violation(s, a)) {
        throw HypothesisError("extension hypothesis violated (" + bad->kind + ")", *bad);
    }
    const std::vector<Edge> host = a.edges();
    const int m = static_cast<int>(host.size());
    if (m > kExtensionEdgeLimit) throw RangeError("exhaustive extension count needs e(A) <= 20");

    ExtensionCount out;
    if (m == 0) {
        // S itself is the only candidate and it is trivially maximal in S + A
        out.count = 1;
        out.link_mis = 1;
        return out;
    }
    const LinkGraph link = build_link(s, a);
    out.link_mis = count_mis(link.graph);

    const int n = s.order();
    const std::int64_t subsets = std::int64_t{1} << m;
    std::uint64_t count = 0;
    bool all_mis = true;

    auto visit = [&](std::int64_t chosen, std::uint64_t& local_count, bool& local_ok) {
        std::array<Mask, kMaxVertices> rows{};
        for (int v = 0; v < n; ++v) rows[v] = s.neighbors(v);
        for (int i = 0; i < m; ++i) {
            if ((chosen >> i) & 1) {
                rows[host[i].u] |= bit(host[i].v);
                rows[host[i].v] |= bit(host[i].u);
            }
        }
        for (int i = 0; i < m; ++i) {
            const bool in = (chosen >> i) & 1;
            const bool closes = (rows[host[i].u] & rows[host[i].v]) != 0;
            // present edges must not sit in a triangle; absent ones must close one
            if (in == closes) return;
        }
        ++local_count;
        const Mask set = static_cast<Mask>(chosen);
        bool independent = true;
        bool dominating = true;
        for (int i = 0; i < m; ++i) {
            const Mask nb = link.graph.neighbors(i);
            if ((set >> i) & 1) independent = independent && (nb & set) == 0;
            else dominating = dominating && (nb & set) != 0;
        }
        if (!independent || !dominating) local_ok = false;
    };

    if (exec == Execution::serial) {
        for (std::int64_t c = 0; c < subsets; ++c) visit(c, count, all_mis);
    } else {
#pragma omp parallel num_threads(worker_count()) reduction(+ : count) reduction(&& : all_mis)
        {
            std::uint64_t local_count = 0;
            bool local_ok = true;
#pragma omp for schedule(static)
            for (std::int64_t c = 0; c < subsets; ++c) visit(c, local_count, local_ok);
            count += local_count;
            all_mis = all_mis && local_ok;
        }
    }
    out.count = count;
    out.all_maximal_independent = all_mis;
    return out;
}

}  // namespace mtf
