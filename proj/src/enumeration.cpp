#include "mtf/enumeration.hpp"

#include <algorithm>
#include <numeric>

namespace mtf {

bool edge_order_less(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    for (int u = a.order() - 2; u >= 0; --u) {
        Mask ra = a.neighbors(u) >> (u + 1);
        Mask rb = b.neighbors(u) >> (u + 1);
        if (ra != rb) return ra < rb;
    }
    return false;
}

std::vector<Graph> brute_force_mtf(int n) {
    if (n < 1 || n > kBruteForceLimit) throw RangeError("brute-force oracle supports 1 <= n <= 6");
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t code = 0; code < total; ++code) {
        Graph g = Graph::from_edge_code(n, code);
        if (is_maximal_triangle_free(g)) out.push_back(g);
    }
    return out;
}

namespace {

using Rows = std::array<Mask, kMaxVertices>;

// Decision tree over the non-edges of a triangle-free base graph. Every leaf
// is a distinct maximal triangle-free supergraph of the base.
class CompletionSearch {
public:
    struct State {
        Rows rows{};
        int next = 0;
        std::vector<Edge> pending;
    };

    explicit CompletionSearch(const Graph& base) : n_(base.order()), decision_pos_(pair_count(n_), -1) {
        for (const Edge& e : all_pairs(n_)) {
            if (!base.has_edge(e.u, e.v)) {
                decision_pos_[pair_index(n_, e.u, e.v)] = static_cast<int>(decisions_.size());
                decisions_.push_back(e);
            }
        }
        for (int v = 0; v < n_; ++v) root_.rows[v] = base.neighbors(v);
    }

    const State& root() const { return root_; }
    int decision_count() const { return static_cast<int>(decisions_.size()); }

    // Advances the state through forced exclusions. Returns false when the
    // state can no longer reach a maximal graph.
    bool settle(State& s) const {
        while (s.next < decision_count()) {
            const Edge& e = decisions_[s.next];
            if ((s.rows[e.u] & s.rows[e.v]) == 0) break;
            ++s.next;
        }
        return viable(s);
    }

    // Children of an unsettled-free state whose next decision is open.
    // Returns how many were written (0, 1 or 2).
    int expand(const State& s, State& include, State& exclude) const {
        const Edge& e = decisions_[s.next];
        int written = 0;
        include = s;
        include.rows[e.u] |= bit(e.v);
        include.rows[e.v] |= bit(e.u);
        ++include.next;
        if (settle(include)) ++written;
        State& slot = written == 1 ? exclude : include;
        slot = s;
        slot.pending.push_back(e);
        ++slot.next;
        if (settle(slot)) ++written;
        return written;
    }

    bool is_leaf(const State& s) const { return s.next >= decision_count(); }

    // Depth-first walk; `leaf` receives the adjacency rows of each result.
    // Returns the number of nodes visited, stopping early past `budget`.
    template <typename Leaf>
    std::uint64_t walk(State s, Leaf&& leaf, std::uint64_t budget = ~std::uint64_t{0}) const {
        std::uint64_t visited = 0;
        std::vector<State> stack;
        if (settle(s)) stack.push_back(std::move(s));
        State a;
        State b;
        while (!stack.empty()) {
            if (++visited > budget) return visited;
            State cur = std::move(stack.back());
            stack.pop_back();
            if (is_leaf(cur)) {
                leaf(cur.rows);
                continue;
            }
            const int k = expand(cur, a, b);
            if (k >= 2) stack.push_back(b);
            if (k >= 1) stack.push_back(a);
        }
        return visited;
    }

    int order() const { return n_; }

private:
    bool open_or_present(const State& s, int a, int w) const {
        if (s.rows[a] & bit(w)) return true;
        const int pos = decision_pos_[pair_index(n_, std::min(a, w), std::max(a, w))];
        return pos >= s.next && (s.rows[a] & s.rows[w]) == 0;
    }

    bool viable(const State& s) const {
        for (const Edge& p : s.pending) {
            if (s.rows[p.u] & s.rows[p.v]) continue;
            bool possible = false;
            for (int w = 0; w < n_ && !possible; ++w) {
                if (w == p.u || w == p.v) continue;
                possible = open_or_present(s, p.u, w) && open_or_present(s, p.v, w);
            }
            if (!possible) return false;
        }
        return true;
    }

    int n_;
    std::vector<Edge> decisions_;
    std::vector<int> decision_pos_;
    State root_;
};

std::uint64_t rows_code(int n, const Rows& rows) {
    std::uint64_t code = 0;
    int i = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++i) {
            if ((rows[u] >> v) & 1U) code |= std::uint64_t{1} << i;
        }
    }
    return code;
}

Graph rows_graph(int n, const Rows& rows) { return Graph::from_adjacency(n, std::span<const Mask>(rows.data(), n)); }

void check_enumeration_range(int n) {
    if (n < 1 || n > kEnumerationLimit) {
        throw RangeError("enumeration supports 1 <= n <= 10, got " + std::to_string(n));
    }
}

}  // namespace

std::vector<std::uint64_t> enumerate_mtf_codes(int n, Execution exec) {
    check_enumeration_range(n);
    const CompletionSearch search{Graph(n)};
    std::vector<std::uint64_t> codes;

    if (exec == Execution::serial) {
        search.walk(search.root(), [&](const Rows& rows) { codes.push_back(rows_code(n, rows)); });
    } else {
        // Breadth-first split into independent subtrees, then one task each.
        std::vector<CompletionSearch::State> frontier;
        {
            CompletionSearch::State root = search.root();
            if (search.settle(root)) frontier.push_back(root);
        }
        const std::size_t target = static_cast<std::size_t>(worker_count()) * 64;
        std::vector<std::uint64_t> early;
        for (int depth = 0; depth < 24 && !frontier.empty() && frontier.size() < target; ++depth) {
            std::vector<CompletionSearch::State> next;
            CompletionSearch::State a;
            CompletionSearch::State b;
            for (const auto& s : frontier) {
                if (search.is_leaf(s)) {
                    early.push_back(rows_code(n, s.rows));
                    continue;
                }
                const int k = search.expand(s, a, b);
                if (k >= 1) next.push_back(a);
                if (k >= 2) next.push_back(b);
            }
            frontier = std::move(next);
        }
        std::vector<std::vector<std::uint64_t>> parts(frontier.size());
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(frontier.size()); ++i) {
            auto& out = parts[i];
            search.walk(frontier[i], [&](const Rows& rows) { out.push_back(rows_code(n, rows)); });
        }
        codes = std::move(early);
        for (auto& p : parts) codes.insert(codes.end(), p.begin(), p.end());
    }
    std::sort(codes.begin(), codes.end());
    return codes;
}

std::vector<Graph> enumerate_mtf(int n, Execution exec) {
    std::vector<Graph> out;
    for (std::uint64_t code : enumerate_mtf_codes(n, exec)) out.push_back(Graph::from_edge_code(n, code));
    return out;
}

void enumerate_mtf(int n, const std::function<void(const Graph&)>& sink) {
    check_enumeration_range(n);
    const CompletionSearch search{Graph(n)};
    search.walk(search.root(), [&](const Rows& rows) { sink(rows_graph(n, rows)); });
}

Graph maximal_completion(const Graph& g, std::span<const Edge> order) {
    if (!is_triangle_free(g)) throw InputError("completion needs a triangle-free graph");
    const int n = g.order();
    Rows rows{};
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v);
    auto try_add = [&](const Edge& e) {
        if (e.u == e.v || e.u < 0 || e.v >= n) throw InputError("completion order names an invalid pair");
        if ((rows[e.u] & bit(e.v)) == 0 && (rows[e.u] & rows[e.v]) == 0) {
            rows[e.u] |= bit(e.v);
            rows[e.v] |= bit(e.u);
        }
    };
    // addability only shrinks as edges are added, so one pass suffices
    for (const Edge& e : order) try_add(e);
    for (const Edge& e : all_pairs(n)) try_add(e);
    return rows_graph(n, rows);
}

std::vector<Graph> all_completions(const Graph& g) {
    if (!is_triangle_free(g)) throw InputError("completions need a triangle-free graph");
    const CompletionSearch search(g);
    std::vector<Graph> out;
    const int n = g.order();
    std::uint64_t visited =
        search.walk(search.root(), [&](const Rows& rows) { out.push_back(rows_graph(n, rows)); }, kCompletionBudget);
    if (visited > kCompletionBudget) throw RangeError("completion search exceeded 2^20 nodes");
    std::sort(out.begin(), out.end(), edge_order_less);
    return out;
}

namespace {

using Colouring = std::array<int, kEnumerationLimit>;

// Colour refinement to a stable ordered partition. A vertex's signature is
// its colour followed by its neighbour count in every colour class (base 11
// digits, exact for n <= 10); colours are re-ranked by sorted signature, so
// the result only depends on the isomorphism type of (g, initial colouring).
Colouring refine(const Graph& g, Colouring colour) {
    const int n = g.order();
    {
        // ranks in 0..n-1 so colours index the count table
        Colouring sorted = colour;
        std::sort(sorted.begin(), sorted.begin() + n);
        const auto end = std::unique(sorted.begin(), sorted.begin() + n);
        for (int v = 0; v < n; ++v) colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), end, colour[v]) - sorted.begin());
    }
    int classes = -1;
    while (true) {
        std::array<std::uint64_t, kEnumerationLimit> sig{};
        for (int v = 0; v < n; ++v) {
            std::array<int, kEnumerationLimit> counts{};
            for (Mask m = g.neighbors(v); m; m &= m - 1) ++counts[colour[lowest(m)]];
            std::uint64_t s = static_cast<std::uint64_t>(colour[v]);
            for (int c = 0; c < n; ++c) s = s * 11 + static_cast<std::uint64_t>(counts[c]);
            sig[v] = s;
        }
        std::array<std::uint64_t, kEnumerationLimit> distinct = sig;
        std::sort(distinct.begin(), distinct.begin() + n);
        const auto end = std::unique(distinct.begin(), distinct.begin() + n);
        for (int v = 0; v < n; ++v) colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), end, sig[v]) - distinct.begin());
        const int now = static_cast<int>(end - distinct.begin());
        if (now == classes) return colour;
        classes = now;
    }
}

void canonical_search(const Graph& g, const Colouring& colour, std::uint64_t& best) {
    const int n = g.order();
    std::array<int, kEnumerationLimit> count{};
    for (int v = 0; v < n; ++v) ++count[colour[v]];
    // branch on the smallest non-singleton cell
    int target = -1;
    for (int c = 0; c < n; ++c) {
        if (count[c] > 1 && (target < 0 || count[c] < count[target])) target = c;
    }
    if (target < 0) {
        std::uint64_t code = 0;
        for (int u = 0; u < n; ++u) {
            for (Mask m = g.neighbors(u) & ~low_bits(u + 1); m; m &= m - 1) {
                const int v = lowest(m);
                code |= std::uint64_t{1} << pair_index(n, std::min(colour[u], colour[v]), std::max(colour[u], colour[v]));
            }
        }
        best = std::min(best, code);
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (colour[v] != target) continue;
        Colouring split{};
        for (int w = 0; w < n; ++w) split[w] = 2 * colour[w] + (colour[w] == target && w != v ? 1 : 0);
        canonical_search(g, refine(g, split), best);
    }
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.order() > kEnumerationLimit) throw RangeError("canonical_code supports n <= 10");
    std::uint64_t best = ~std::uint64_t{0};
    canonical_search(g, refine(g, Colouring{}), best);
    return best;
}

std::uint64_t count_isomorphism_classes(int n, std::span<const std::uint64_t> codes, bool closed) {
    constexpr std::uint64_t kSkipped = ~std::uint64_t{0};
    std::vector<std::uint64_t> canon(codes.size(), kSkipped);
    auto degree_sorted = [n](const Graph& g) {
        for (int v = 1; v < n; ++v) {
            if (g.degree(v) > g.degree(v - 1)) return false;
        }
        return true;
    };
#pragma omp parallel for schedule(dynamic, 256) num_threads(worker_count())
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(codes.size()); ++i) {
        const Graph g = Graph::from_edge_code(n, codes[i]);
        if (!closed || degree_sorted(g)) canon[i] = canonical_code(g);
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    if (!canon.empty() && canon.back() == kSkipped) canon.pop_back();
    return canon.size();
}

}  // namespace mtf
