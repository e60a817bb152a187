#include "mtf/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mtf/graph6.hpp"
#include "mtf/linkgraph.hpp"

namespace mtf {

namespace {

struct Outcome {
    bool applicable = false;
    std::optional<nlohmann::json> violation;
    double low = std::numeric_limits<double>::quiet_NaN();
    double high = std::numeric_limits<double>::quiet_NaN();
};

struct Tally {
    std::uint64_t applicable = 0;
    std::uint64_t violations = 0;
    std::vector<nlohmann::json> witnesses;
    double low = std::numeric_limits<double>::infinity();
    double high = -std::numeric_limits<double>::infinity();

    void add(std::uint64_t index, Outcome&& o) {
        if (!o.applicable) return;
        ++applicable;
        if (!std::isnan(o.low)) low = std::min(low, o.low);
        if (!std::isnan(o.high)) high = std::max(high, o.high);
        if (o.violation) {
            ++violations;
            if (witnesses.size() < kWitnessCap) {
                (*o.violation)["instance"] = index;
                witnesses.push_back(std::move(*o.violation));
            }
        }
    }

    void merge(Tally&& other) {
        applicable += other.applicable;
        violations += other.violations;
        low = std::min(low, other.low);
        high = std::max(high, other.high);
        for (auto& w : other.witnesses) {
            if (witnesses.size() < kWitnessCap) witnesses.push_back(std::move(w));
        }
    }
};

// Chunks are merged in index order, so the tally (including which
// witnesses survive the cap) is the same for every worker count.
template <typename Check>
Tally run_indexed(std::uint64_t count, Execution exec, Check&& check) {
    constexpr std::uint64_t kChunk = 1024;
    const std::uint64_t chunks = (count + kChunk - 1) / kChunk;
    std::vector<Tally> parts(chunks);
    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t end = std::min(count, (c + 1) * kChunk);
        for (std::uint64_t i = c * kChunk; i < end; ++i) parts[c].add(i, check(i));
    };
    if (exec == Execution::serial) {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
        for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) run_chunk(static_cast<std::uint64_t>(c));
    }
    Tally total;
    for (auto& p : parts) total.merge(std::move(p));
    return total;
}

SweepResult finish(std::string claim, Tally&& t) {
    SweepResult r;
    r.claim = std::move(claim);
    r.instances = t.applicable;
    r.violations = t.violations;
    r.witnesses = std::move(t.witnesses);
    return r;
}

// Flattened index over graphs on 1..max_n vertices: offsets[n] is the
// first index belonging to order n.
struct OrderedCodes {
    std::vector<std::uint64_t> offsets;

    OrderedCodes(int max_n, std::uint64_t per_pair_radix) {
        offsets.assign(max_n + 2, 0);
        for (int n = 1; n <= max_n; ++n) {
            std::uint64_t size = 1;
            for (int p = 0; p < pair_count(n); ++p) size *= per_pair_radix;
            offsets[n + 1] = offsets[n] + size;
        }
    }

    std::uint64_t total() const { return offsets.back(); }

    std::pair<int, std::uint64_t> locate(std::uint64_t index) const {
        int n = 1;
        while (index >= offsets[n + 1]) ++n;
        return {n, index - offsets[n]};
    }
};

// Decodes a base-3 pair assignment: digit 1 puts the pair in S, 2 in A.
std::pair<Graph, Graph> ternary_pair(int n, std::uint64_t code) {
    std::vector<Edge> s;
    std::vector<Edge> a;
    for (const Edge& e : all_pairs(n)) {
        const auto digit = code % 3;
        code /= 3;
        if (digit == 1) s.push_back(e);
        if (digit == 2) a.push_back(e);
    }
    return {Graph::from_edges(n, s), Graph::from_edges(n, a)};
}

// Always returns e(A) >= 1 so every draw is a usable instance.
std::pair<Graph, Graph> random_edge_disjoint_triangle_free(int n, std::mt19937_64& rng) {
    Graph s(n);
    std::vector<Edge> free;
    do {
        s = random_triangle_free(n, rng);
        // A is drawn inside the complement of S
        free.clear();
        for (const Edge& e : all_pairs(n)) {
            if (!s.has_edge(e.u, e.v)) free.push_back(e);
        }
    } while (free.empty());
    std::shuffle(free.begin(), free.end(), rng);
    std::uniform_real_distribution<double> rate(0.2, 1.0);
    const double keep = rate(rng);
    std::bernoulli_distribution coin(keep);
    Graph a(n);
    for (const Edge& e : free) {
        if ((a.neighbors(e.u) & a.neighbors(e.v)) == 0 && coin(rng)) a = a.with_edge(e.u, e.v);
    }
    if (a.edge_count() == 0) a = a.with_edge(free.front().u, free.front().v);
    return {s, a};
}

nlohmann::json pair_witness(const Graph& s, const Graph& a) {
    return {{"n", s.order()}, {"S", graph6_encode(s)}, {"A", graph6_encode(a)}};
}

}  // namespace

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (const Edge& e : all_pairs(n)) {
        if (coin(rng)) edges.push_back(e);
    }
    return Graph::from_edges(n, edges);
}

Graph random_triangle_free(int n, std::mt19937_64& rng) {
    std::vector<Edge> pairs = all_pairs(n);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::uniform_real_distribution<double> rate(0.1, 1.0);
    std::bernoulli_distribution coin(rate(rng));
    std::array<Mask, kMaxVertices> rows{};
    std::vector<Edge> kept;
    for (const Edge& e : pairs) {
        if ((rows[e.u] & rows[e.v]) == 0 && coin(rng)) {
            rows[e.u] |= bit(e.v);
            rows[e.v] |= bit(e.u);
            kept.push_back(e);
        }
    }
    return Graph::from_edges(n, kept);
}

nlohmann::json bound_record(const Graph& g, const BoundCheck& check) {
    return {{"graph6", graph6_encode(g)}, {"n", check.n},         {"k", check.k},
            {"mis", check.mis.str()},     {"slack", check.slack}, {"exact", check.exact_holds}};
}

namespace {

Outcome mis_bound_outcome(const Graph& g) {
    Outcome o;
    o.applicable = true;
    const BoundCheck c = verify_mis_bound(g);
    o.low = c.slack;
    if (auto k = implied_constant(c)) o.high = *k;
    if (!c.exact_holds || c.slack < -1e-9) o.violation = bound_record(g, c);
    return o;
}

void add_bound_summary(SweepResult& r, double low, double high) {
    if (std::isfinite(low)) r.summary["min_slack"] = low;
    // largest c any instance forces in MIS <= 2^(n/2 - k/c); 25 must dominate it
    if (std::isfinite(high)) r.summary["max_implied_constant"] = high;
}

}  // namespace

SweepResult sweep_mis_bound_exhaustive(int max_n, Execution exec) {
    if (max_n < 1 || max_n > 7) throw RangeError("exhaustive MIS-bound sweep supports 1 <= max_n <= 7");
    const OrderedCodes space(max_n, 2);
    Tally t = run_indexed(space.total(), exec, [&](std::uint64_t i) {
        auto [n, code] = space.locate(i);
        const Graph g = Graph::from_edge_code(n, code);
        if (!is_triangle_free(g)) return Outcome{};
        return mis_bound_outcome(g);
    });
    const double low = t.low;
    const double high = t.high;
    SweepResult r = finish("lemma-mis-bound", std::move(t));
    add_bound_summary(r, low, high);
    r.summary["max_n"] = max_n;
    r.summary["mode"] = "exhaustive";
    return r;
}

SweepResult sweep_mis_bound_random(std::uint64_t trials, int max_n, std::uint64_t seed, Execution exec) {
    if (max_n < 1 || max_n > kP3PackingLimit) throw RangeError("random MIS-bound sweep supports 1 <= max_n <= 30");
    Tally t = run_indexed(trials, exec, [&](std::uint64_t i) {
        std::mt19937_64 rng(trial_seed(seed, i));
        std::uniform_int_distribution<int> order(1, max_n);
        return mis_bound_outcome(random_triangle_free(order(rng), rng));
    });
    const double low = t.low;
    const double high = t.high;
    SweepResult r = finish("lemma-mis-bound", std::move(t));
    add_bound_summary(r, low, high);
    r.summary["max_n"] = max_n;
    r.summary["mode"] = "random";
    r.summary["seed"] = seed;
    r.summary["trials"] = trials;
    return r;
}

namespace {

Outcome link_triangle_free_outcome(const Graph& s, const Graph& a) {
    Outcome o;
    if (a.edge_count() == 0 || !is_triangle_free(s) || !is_triangle_free(a)) return o;
    o.applicable = true;
    const LinkGraph link = build_link(s, a);
    if (triangle_count(link.graph) != 0) {
        nlohmann::json w = pair_witness(s, a);
        w["link"] = graph6_encode(link.graph);
        o.violation = std::move(w);
    }
    return o;
}

}  // namespace

SweepResult sweep_link_triangle_free_exhaustive(int max_n, Execution exec) {
    if (max_n < 1 || max_n > 6) throw RangeError("exhaustive link sweep supports 1 <= max_n <= 6");
    const OrderedCodes space(max_n, 3);
    Tally t = run_indexed(space.total(), exec, [&](std::uint64_t i) {
        auto [n, code] = space.locate(i);
        auto [s, a] = ternary_pair(n, code);
        return link_triangle_free_outcome(s, a);
    });
    SweepResult r = finish("link-triangle-free", std::move(t));
    r.summary["max_n"] = max_n;
    r.summary["mode"] = "exhaustive";
    return r;
}

SweepResult sweep_link_triangle_free_random(std::uint64_t trials, int max_n, std::uint64_t seed, Execution exec) {
    if (max_n < 2) throw RangeError("random link sweep needs max_n >= 2");
    Tally t = run_indexed(trials, exec, [&](std::uint64_t i) {
        std::mt19937_64 rng(trial_seed(seed, i));
        std::uniform_int_distribution<int> order(2, max_n);
        auto [s, a] = random_edge_disjoint_triangle_free(order(rng), rng);
        if (a.edge_count() > kMaxVertices) return Outcome{};
        return link_triangle_free_outcome(s, a);
    });
    SweepResult r = finish("link-triangle-free", std::move(t));
    r.summary["max_n"] = max_n;
    r.summary["mode"] = "random";
    r.summary["seed"] = seed;
    r.summary["trials"] = trials;
    return r;
}

namespace {

Outcome product_outcome(const Graph& s, const Graph& t) {
    Outcome o;
    o.applicable = true;
    const ProductIdentity id = check_product_identity(s, t);
    if (!id.equal) {
        o.violation = nlohmann::json{{"S", graph6_encode(s)},
                                     {"T", graph6_encode(t)},
                                     {"link", graph6_encode(id.link)},
                                     {"product", graph6_encode(id.product)}};
    }
    return o;
}

}  // namespace

SweepResult sweep_link_product_exhaustive(int max_side, Execution exec) {
    if (max_side < 1 || max_side > 4) throw RangeError("exhaustive product sweep supports 1 <= max_side <= 4");
    // one block per (|X|, |Y|), each holding every (S, T) code pair
    std::vector<std::array<std::uint64_t, 4>> blocks;  // nx, ny, start, size
    std::uint64_t total = 0;
    for (int nx = 1; nx <= max_side; ++nx) {
        for (int ny = 1; ny <= max_side; ++ny) {
            const std::uint64_t size = std::uint64_t{1} << (pair_count(nx) + pair_count(ny));
            blocks.push_back({static_cast<std::uint64_t>(nx), static_cast<std::uint64_t>(ny), total, size});
            total += size;
        }
    }
    Tally t = run_indexed(total, exec, [&](std::uint64_t i) {
        const auto& b = *std::find_if(blocks.begin(), blocks.end(), [&](const auto& blk) { return i < blk[2] + blk[3]; });
        const int nx = static_cast<int>(b[0]);
        const int ny = static_cast<int>(b[1]);
        const std::uint64_t local = i - b[2];
        const Graph s = Graph::from_edge_code(nx, local & low_bits(pair_count(nx)));
        const Graph tt = Graph::from_edge_code(ny, local >> pair_count(nx));
        return product_outcome(s, tt);
    });
    SweepResult r = finish("link-product", std::move(t));
    r.summary["max_side"] = max_side;
    r.summary["mode"] = "exhaustive";
    return r;
}

SweepResult sweep_link_product_random(std::uint64_t trials, int max_side, std::uint64_t seed, Execution exec) {
    if (max_side < 1 || max_side > 8) throw RangeError("random product sweep supports 1 <= max_side <= 8");
    Tally t = run_indexed(trials, exec, [&](std::uint64_t i) {
        std::mt19937_64 rng(trial_seed(seed, i));
        std::uniform_int_distribution<int> side(1, max_side);
        const int nx = side(rng);
        int ny = side(rng);
        while (nx * ny > kMaxVertices) ny = side(rng);
        std::uniform_real_distribution<double> density(0.0, 1.0);
        const Graph s = random_graph(nx, density(rng), rng);
        const Graph tt = random_graph(ny, density(rng), rng);
        return product_outcome(s, tt);
    });
    SweepResult r = finish("link-product", std::move(t));
    r.summary["max_side"] = max_side;
    r.summary["mode"] = "random";
    r.summary["seed"] = seed;
    r.summary["trials"] = trials;
    return r;
}

namespace {

Outcome extension_outcome(const Graph& s, const Graph& a, int max_edges) {
    Outcome o;
    const int ea = a.edge_count();
    if (ea == 0 || ea > max_edges || extension_hypothesis_violation(s, a)) return o;
    o.applicable = true;
    const ExtensionCount c = count_maximal_extensions(s, a, Execution::serial);
    const double ratio = static_cast<double>(c.count) / c.link_mis.convert_to<double>();
    o.high = ratio;
    if (MisCount(c.count) > c.link_mis || !c.all_maximal_independent) {
        nlohmann::json w = pair_witness(s, a);
        w["extensions"] = c.count;
        w["link_mis"] = c.link_mis.str();
        w["maximal_independent"] = c.all_maximal_independent;
        o.violation = std::move(w);
    }
    return o;
}

}  // namespace

SweepResult sweep_extension_count_exhaustive(int max_n, int max_edges, Execution exec) {
    if (max_n < 1 || max_n > 5) throw RangeError("exhaustive extension sweep supports 1 <= max_n <= 5");
    if (max_edges < 1 || max_edges > kExtensionEdgeLimit) throw RangeError("max_edges must lie in [1, 20]");
    const OrderedCodes space(max_n, 3);
    Tally t = run_indexed(space.total(), exec, [&](std::uint64_t i) {
        auto [n, code] = space.locate(i);
        auto [s, a] = ternary_pair(n, code);
        return extension_outcome(s, a, max_edges);
    });
    const double high = t.high;
    SweepResult r = finish("extension-count", std::move(t));
    if (std::isfinite(high)) r.summary["max_ratio"] = high;
    r.summary["max_n"] = max_n;
    r.summary["max_edges"] = max_edges;
    r.summary["mode"] = "exhaustive";
    return r;
}

SweepResult sweep_extension_count_random(std::uint64_t trials, int max_n, int max_edges, std::uint64_t seed,
                                         Execution exec) {
    if (max_n < 2 || max_n > kMaxVertices) throw RangeError("random extension sweep needs 2 <= max_n <= 64");
    if (max_edges < 1 || max_edges > kExtensionEdgeLimit) throw RangeError("max_edges must lie in [1, 20]");
    Tally t = run_indexed(trials, exec, [&](std::uint64_t i) {
        std::mt19937_64 rng(trial_seed(seed, i));
        std::uniform_int_distribution<int> order(2, max_n);
        const int n = order(rng);
        const Graph s = random_triangle_free(n, rng);
        // A: random edges outside S that keep the hypothesis, up to max_edges
        std::vector<Edge> free;
        for (const Edge& e : all_pairs(n)) {
            if (!s.has_edge(e.u, e.v) && (s.neighbors(e.u) & s.neighbors(e.v)) == 0) free.push_back(e);
        }
        std::shuffle(free.begin(), free.end(), rng);
        Graph a(n);
        int added = 0;
        for (const Edge& e : free) {
            if (added == max_edges) break;
            if ((a.neighbors(e.u) & a.neighbors(e.v)) == 0) {
                a = a.with_edge(e.u, e.v);
                ++added;
            }
        }
        return extension_outcome(s, a, max_edges);
    });
    const double high = t.high;
    SweepResult r = finish("extension-count", std::move(t));
    if (std::isfinite(high)) r.summary["max_ratio"] = high;
    r.summary["max_n"] = max_n;
    r.summary["max_edges"] = max_edges;
    r.summary["mode"] = "random";
    r.summary["seed"] = seed;
    r.summary["trials"] = trials;
    return r;
}

SweepResult sweep_remark_constant(Execution exec) {
    const double closed_form = 1.0 / (2.5 - std::log2(5.0));
    constexpr int kMaxA = 3;
    constexpr int kMaxB = 3;
    Tally t = run_indexed(kMaxA * (kMaxB + 1), exec, [&](std::uint64_t i) {
        const int a = 1 + static_cast<int>(i) / (kMaxB + 1);
        const int b = static_cast<int>(i) % (kMaxB + 1);
        Graph g = cycle_graph(5);
        for (int j = 1; j < a; ++j) g = disjoint_union(g, cycle_graph(5));
        if (b > 0) g = disjoint_union(g, perfect_matching_graph(b));
        const BoundCheck check = verify_mis_bound(g);
        const double c = min_constant_for_family(a, b);
        const std::optional<double> implied = implied_constant(check);
        MisCount expected = boost::multiprecision::pow(MisCount(5), a) << b;

        Outcome o;
        o.applicable = true;
        o.low = c;
        o.high = c;
        const bool good = check.k == a && check.mis == expected && implied && std::abs(*implied - c) < 1e-9 &&
                          std::abs(c - closed_form) < 1e-9 && c >= 5.6;
        if (!good) {
            o.violation = nlohmann::json{{"a", a}, {"b", b}, {"constant", c}, {"k", check.k}, {"mis", check.mis.str()}};
        }
        return o;
    });
    SweepResult r = finish("remark-constant", std::move(t));
    r.summary["constant"] = closed_form;
    r.summary["lower_anchor"] = 5.6;
    return r;
}

nlohmann::json to_json(const SweepResult& r) {
    return {{"claim", r.claim},           {"instances", r.instances}, {"violations", r.violations},
            {"ok", r.ok()},               {"witnesses", r.witnesses}, {"summary", r.summary}};
}

}  // namespace mtf
