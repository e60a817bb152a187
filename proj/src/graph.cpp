#include "mtf/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mtf {

namespace {

void check_order(int n) {
    if (n < 1 || n > kMaxVertices) {
        throw RangeError("vertex count " + std::to_string(n) + " outside [1, 64]");
    }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v >= n) {
            throw RangeError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " has an endpoint outside [0, " + std::to_string(n) + ")");
        }
        if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
        g.adj_[e.u] |= bit(e.v);
        g.adj_[e.v] |= bit(e.u);
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency(int n, std::span<const Mask> rows) {
    Graph g(n);
    if (static_cast<int>(rows.size()) != n) throw InputError("adjacency table has the wrong number of rows");
    for (int u = 0; u < n; ++u) {
        if (rows[u] & ~low_bits(n)) throw InputError("adjacency row " + std::to_string(u) + " has bits >= n");
        if (rows[u] & bit(u)) throw InputError("loop at vertex " + std::to_string(u));
        g.adj_[u] = rows[u];
    }
    for (int u = 0; u < n; ++u) {
        for (Mask m = rows[u]; m; m &= m - 1) {
            if (!(rows[lowest(m)] & bit(u))) throw InputError("adjacency table is not symmetric");
        }
    }
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for (Mask m = adj_[u] & ~low_bits(u + 1); m; m &= m - 1) out.emplace_back(u, lowest(m));
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw RangeError("invalid edge");
    Graph g = *this;
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw RangeError("invalid edge");
    Graph g = *this;
    g.adj_[u] &= ~bit(v);
    g.adj_[v] &= ~bit(u);
    return g;
}

Graph Graph::induced(Mask keep) const {
    keep &= vertices();
    if (keep == 0) throw RangeError("induced subgraph on an empty vertex set");
    std::array<int, kMaxVertices> index{};
    int k = 0;
    for (Mask m = keep; m; m &= m - 1) index[lowest(m)] = k++;
    Graph g(k);
    for (Mask m = keep; m; m &= m - 1) {
        int u = lowest(m);
        for (Mask nb = adj_[u] & keep; nb; nb &= nb - 1) g.adj_[index[u]] |= bit(index[lowest(nb)]);
    }
    return g;
}

std::uint64_t Graph::edge_code() const {
    if (n_ > 11) throw RangeError("edge code needs n <= 11");
    std::uint64_t code = 0;
    int i = 0;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v, ++i) {
            if (has_edge(u, v)) code |= std::uint64_t{1} << i;
        }
    }
    return code;
}

Graph Graph::from_edge_code(int n, std::uint64_t code) {
    if (n > 11) throw RangeError("edge code needs n <= 11");
    Graph g(n);
    int i = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++i) {
            if ((code >> i) & 1U) {
                g.adj_[u] |= bit(v);
                g.adj_[v] |= bit(u);
            }
        }
    }
    if (i < 64 && (code >> i) != 0) throw InputError("edge code has bits beyond the pair count");
    return g;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    out.reserve(pair_count(n));
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) out.emplace_back(u, v);
    }
    return out;
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw RangeError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_graph(int n) { return Graph::from_edges(n, all_pairs(n)); }

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int x = 0; x < a; ++x) {
        for (int y = a; y < a + b; ++y) e.emplace_back(x, y);
    }
    return Graph::from_edges(a + b, e);
}

Graph perfect_matching_graph(int edges) {
    std::vector<Edge> e;
    for (int i = 0; i < edges; ++i) e.emplace_back(2 * i, 2 * i + 1);
    return Graph::from_edges(2 * edges, e);
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    int n = a.order() + b.order();
    check_order(n);
    std::vector<Edge> e = a.edges();
    for (const Edge& f : b.edges()) e.emplace_back(f.u + a.order(), f.v + a.order());
    return Graph::from_edges(n, e);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int gn = g.order();
    const int hn = h.order();
    if (gn * hn > kMaxVertices) {
        throw RangeError("product of " + std::to_string(gn) + " and " + std::to_string(hn) +
                         " vertices exceeds 64");
    }
    std::vector<Edge> e;
    for (int u = 0; u < gn; ++u) {
        for (const Edge& f : h.edges()) e.emplace_back(u * hn + f.u, u * hn + f.v);
    }
    for (const Edge& f : g.edges()) {
        for (int w = 0; w < hn; ++w) e.emplace_back(f.u * hn + w, f.v * hn + w);
    }
    return Graph::from_edges(gn * hn, e);
}

std::int64_t triangle_count(const Graph& g) {
    std::int64_t count = 0;
    for (int u = 0; u < g.order(); ++u) {
        Mask up = g.neighbors(u) & ~low_bits(u + 1);
        for (Mask m = up; m; m &= m - 1) {
            int v = lowest(m);
            count += popcount(g.neighbors(v) & up & ~low_bits(v + 1));
        }
    }
    return count;
}

bool is_triangle_free(const Graph& g) {
    for (int u = 0; u < g.order(); ++u) {
        for (Mask m = g.neighbors(u); m; m &= m - 1) {
            if (g.neighbors(u) & g.neighbors(lowest(m))) return false;
        }
    }
    return true;
}

bool is_maximal_triangle_free(const Graph& g) {
    if (!is_triangle_free(g)) return false;
    for (int u = 0; u < g.order(); ++u) {
        Mask non = ~g.closed_neighbors(u) & g.vertices() & ~low_bits(u + 1);
        for (; non; non &= non - 1) {
            if ((g.neighbors(u) & g.neighbors(lowest(non))) == 0) return false;
        }
    }
    return true;
}

namespace {

void grow_clique(const Graph& g, Mask candidates, int size, int& best) {
    if (candidates == 0) {
        best = std::max(best, size);
        return;
    }
    while (candidates) {
        if (size + popcount(candidates) <= best) return;
        int v = lowest(candidates);
        candidates &= candidates - 1;
        grow_clique(g, candidates & g.neighbors(v), size + 1, best);
    }
}

}  // namespace

int clique_number(const Graph& g) {
    int best = 0;
    grow_clique(g, g.vertices(), 0, best);
    return best;
}

bool is_bipartite(const Graph& g) {
    Mask side = 0;
    Mask seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (seen & bit(s)) continue;
        std::vector<int> queue{s};
        seen |= bit(s);
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int u = queue[i];
            for (Mask m = g.neighbors(u); m; m &= m - 1) {
                int v = lowest(m);
                if (!(seen & bit(v))) {
                    seen |= bit(v);
                    if (!(side & bit(u))) side |= bit(v);
                    queue.push_back(v);
                } else if (((side >> u) & 1U) == ((side >> v) & 1U)) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<Mask> components(const Graph& g, Mask within) {
    std::vector<Mask> out;
    Mask left = within & g.vertices();
    while (left) {
        Mask comp = bit(lowest(left));
        Mask frontier = comp;
        while (frontier) {
            int v = lowest(frontier);
            frontier &= frontier - 1;
            Mask fresh = g.neighbors(v) & left & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

int cut_size(const Graph& g, Mask x_mask) {
    int c = 0;
    Mask y_mask = g.vertices() & ~x_mask;
    for (Mask m = x_mask & g.vertices(); m; m &= m - 1) c += popcount(g.neighbors(lowest(m)) & y_mask);
    return c;
}

namespace {

// Split codes c in [0, 2^(n-1)) map to x_mask = 1 | (c << 1). A Gray-code
// walk keeps the cut value current with one popcount pair per step.
struct CutScan {
    int best = -1;
    Mask best_x = 0;

    void offer(int value, Mask x) {
        if (value > best || (value == best && x < best_x)) {
            best = value;
            best_x = x;
        }
    }
};

CutScan scan_cut_range(const Graph& g, std::uint64_t begin, std::uint64_t end) {
    CutScan scan;
    if (begin >= end) return scan;
    const Mask all = g.vertices();
    std::uint64_t gray = begin ^ (begin >> 1);
    Mask x = 1 | (gray << 1);
    int value = cut_size(g, x);
    scan.offer(value, x);
    for (std::uint64_t k = begin + 1; k < end; ++k) {
        int v = std::countr_zero(k) + 1;
        Mask nb = g.neighbors(v);
        Mask same = (x & bit(v)) ? x : (all & ~x);
        value += popcount(nb & same) - popcount(nb & ~same & all);
        x ^= bit(v);
        scan.offer(value, x);
    }
    return scan;
}

}  // namespace

MaxCut max_cut(const Graph& g, Execution exec) {
    const int n = g.order();
    if (n > kMaxCutLimit) {
        throw RangeError("exact max-cut supports n <= 28, got " + std::to_string(n));
    }
    const std::uint64_t total = std::uint64_t{1} << (n - 1);
    CutScan result;
    if (exec == Execution::serial || total < (1U << 12)) {
        result = scan_cut_range(g, 0, total);
    } else {
        const std::int64_t chunks = 256;
        const std::uint64_t step = total / chunks;
        std::vector<CutScan> partial(chunks);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
        for (std::int64_t c = 0; c < chunks; ++c) {
            partial[c] = scan_cut_range(g, c * step, c + 1 == chunks ? total : (c + 1) * step);
        }
        for (const CutScan& p : partial) result.offer(p.best, p.best_x);
    }
    return {result.best, {result.best_x, g.vertices() & ~result.best_x}};
}

std::vector<Bipartition> all_max_cuts(const Graph& g) {
    const int best = max_cut(g).size;
    std::vector<Bipartition> out;
    const std::uint64_t total = std::uint64_t{1} << (g.order() - 1);
    for (std::uint64_t c = 0; c < total; ++c) {
        Mask x = 1 | (c << 1);
        if (cut_size(g, x) == best) out.push_back({x, g.vertices() & ~x});
    }
    return out;
}

namespace {

class MatchingSearch {
public:
    explicit MatchingSearch(const Graph& g) : g_(g) {}

    int solve(Mask mask) {
        mask = strip_isolated(mask);
        if (mask == 0) return 0;
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        const int v = lowest(mask);
        const Mask nb = g_.neighbors(v) & mask;
        int best;
        if (popcount(nb) == 1) {
            // a pendant vertex can always be matched to its only neighbour
            best = 1 + solve(mask & ~bit(v) & ~nb);
        } else {
            best = solve(mask & ~bit(v));
            const int cap = popcount(mask) / 2;
            for (Mask m = nb; m && best < cap; m &= m - 1) {
                best = std::max(best, 1 + solve(mask & ~bit(v) & ~bit(lowest(m))));
            }
        }
        memo_.emplace(mask, best);
        return best;
    }

    std::vector<Edge> reconstruct(Mask mask) {
        std::vector<Edge> out;
        for (mask = strip_isolated(mask); mask; mask = strip_isolated(mask)) {
            const int target = solve(mask);
            const int v = lowest(mask);
            const Mask nb = g_.neighbors(v) & mask;
            bool matched = false;
            for (Mask m = nb; m; m &= m - 1) {
                int u = lowest(m);
                Mask rest = mask & ~bit(v) & ~bit(u);
                if (1 + solve(rest) == target) {
                    out.emplace_back(v, u);
                    mask = rest;
                    matched = true;
                    break;
                }
            }
            if (!matched) mask &= ~bit(v);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    Mask strip_isolated(Mask mask) const {
        for (Mask m = mask; m; m &= m - 1) {
            int v = lowest(m);
            if ((g_.neighbors(v) & mask) == 0) mask &= ~bit(v);
        }
        return mask;
    }

    const Graph& g_;
    std::unordered_map<Mask, int> memo_;
};

}  // namespace

MatchingResult maximum_matching(const Graph& g) { return maximum_matching(g, g.vertices()); }

MatchingResult maximum_matching(const Graph& g, Mask within) {
    MatchingSearch search(g);
    MatchingResult r;
    r.size = search.solve(within & g.vertices());
    r.edges = search.reconstruct(within & g.vertices());
    return r;
}

int matching_number(const Graph& g, Mask within) {
    MatchingSearch search(g);
    return search.solve(within & g.vertices());
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << " edges=[";
    bool first = true;
    for (const Edge& e : g.edges()) {
        os << (first ? "" : ",") << e.u << "-" << e.v;
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace mtf
