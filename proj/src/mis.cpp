#include "mtf/mis.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace mtf {

namespace {

struct MaskPair {
    Mask a;
    Mask b;
    bool operator==(const MaskPair&) const = default;
};

struct MaskPairHash {
    std::size_t operator()(const MaskPair& p) const noexcept {
        std::uint64_t h = p.a * 0x9e3779b97f4a7c15ULL;
        h ^= p.b + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Shared branching step for counting and enumeration. `candidates` may still
// join the set; `pending` are excluded vertices that still need a neighbour
// in the set. Returns the branch set, or 0 when the state is dead.
Mask branch_set(const Graph& g, Mask candidates, Mask pending) {
    Mask best = 0;
    int best_size = kMaxVertices + 1;
    for (Mask m = pending; m; m &= m - 1) {
        Mask opts = g.neighbors(lowest(m)) & candidates;
        if (opts == 0) return 0;
        if (popcount(opts) < best_size) {
            best = opts;
            best_size = popcount(opts);
        }
    }
    for (Mask m = candidates; m && best_size > 1; m &= m - 1) {
        int v = lowest(m);
        Mask opts = (g.neighbors(v) & candidates) | bit(v);
        if (popcount(opts) < best_size) {
            best = opts;
            best_size = popcount(opts);
        }
    }
    return best;
}

class MisCounter {
public:
    explicit MisCounter(const Graph& g) : g_(g) {}

    // MIS(G) < 3^(64/3) < 2^35, so 64-bit accumulators are exact here.
    std::uint64_t count(Mask candidates, Mask pending) {
        if (candidates == 0) return pending == 0 ? 1 : 0;
        MaskPair key{candidates, pending};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::uint64_t total = 0;
        Mask skipped = 0;
        for (Mask m = branch_set(g_, candidates, pending); m; m &= m - 1) {
            const int w = lowest(m);
            total += count(candidates & ~g_.closed_neighbors(w) & ~skipped,
                           (pending | skipped) & ~g_.neighbors(w));
            skipped |= bit(w);
        }
        memo_.emplace(key, total);
        return total;
    }

private:
    const Graph& g_;
    std::unordered_map<MaskPair, std::uint64_t, MaskPairHash> memo_;
};

void collect_mis(const Graph& g, Mask candidates, Mask pending, Mask chosen, std::vector<Mask>& out) {
    if (candidates == 0) {
        if (pending == 0) out.push_back(chosen);
        return;
    }
    Mask skipped = 0;
    for (Mask m = branch_set(g, candidates, pending); m; m &= m - 1) {
        const int w = lowest(m);
        collect_mis(g, candidates & ~g.closed_neighbors(w) & ~skipped, (pending | skipped) & ~g.neighbors(w),
                    chosen | bit(w), out);
        skipped |= bit(w);
    }
}

class BranchingBound {
public:
    explicit BranchingBound(const Graph& g) : g_(g) {}

    MisCount eval(Mask mask) {
        int best_v = -1;
        int best_deg = 0;
        for (Mask m = mask; m; m &= m - 1) {
            int v = lowest(m);
            int d = popcount(g_.neighbors(v) & mask);
            if (d > best_deg) {
                best_deg = d;
                best_v = v;
            }
        }
        if (best_v < 0) return 1;
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        MisCount r = eval(mask & ~bit(best_v)) + eval(mask & ~g_.closed_neighbors(best_v));
        memo_.emplace(mask, r);
        return r;
    }

private:
    const Graph& g_;
    std::unordered_map<Mask, MisCount> memo_;
};

}  // namespace

std::vector<Mask> enumerate_mis(const Graph& g) {
    std::vector<Mask> out;
    collect_mis(g, g.vertices(), 0, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

MisCount count_mis(const Graph& g) {
    MisCounter counter(g);
    return MisCount(counter.count(g.vertices(), 0));
}

MisCount mis_branching_bound(const Graph& g) {
    BranchingBound bound(g);
    return bound.eval(g.vertices());
}

MisCount mis_path(int n) {
    if (n < 1) throw RangeError("mis_path needs n >= 1");
    std::vector<MisCount> p{0, 1, 2, 2};
    for (int i = 4; i <= n; ++i) p.push_back(p[i - 2] + p[i - 3]);
    return p[n];
}

MisCount mis_cycle(int n) {
    if (n < 3) throw RangeError("mis_cycle needs n >= 3");
    std::vector<MisCount> c{0, 0, 0, 3, 2, 5};
    for (int i = 6; i <= n; ++i) c.push_back(c[i - 2] + c[i - 3]);
    return c[n];
}

namespace {

class P3Search {
public:
    explicit P3Search(const Graph& g) : g_(g) {}

    int solve(Mask mask) {
        mask = prune(mask);
        if (mask == 0) return 0;
        if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
        const int cap = popcount(mask) / 3;
        const int v = lowest(mask);
        int best = solve(mask & ~bit(v));
        for_each_triple(mask, v, [&](const std::array<int, 3>& t) {
            if (best < cap) best = std::max(best, 1 + solve(mask & ~triple_mask(t)));
        });
        memo_.emplace(mask, best);
        return best;
    }

    std::vector<std::array<int, 3>> reconstruct(Mask mask) {
        std::vector<std::array<int, 3>> out;
        for (mask = prune(mask); mask; mask = prune(mask)) {
            const int target = solve(mask);
            const int v = lowest(mask);
            bool used = false;
            for_each_triple(mask, v, [&](const std::array<int, 3>& t) {
                if (!used && 1 + solve(mask & ~triple_mask(t)) == target) {
                    out.push_back(t);
                    mask &= ~triple_mask(t);
                    used = true;
                }
            });
            if (!used) mask &= ~bit(v);
        }
        return out;
    }

private:
    static Mask triple_mask(const std::array<int, 3>& t) { return bit(t[0]) | bit(t[1]) | bit(t[2]); }

    // Drops vertices that cannot lie on any P3 inside `mask`: those in
    // components with fewer than three vertices.
    Mask prune(Mask mask) const {
        Mask keep = 0;
        for (Mask comp : components(g_, mask)) {
            if (popcount(comp) >= 3) keep |= comp;
        }
        return keep;
    }

    template <typename F>
    void for_each_triple(Mask mask, int v, F&& visit) const {
        const Mask nb = g_.neighbors(v) & mask;
        // v in the middle
        for (Mask a = nb; a; a &= a - 1) {
            for (Mask b = a & (a - 1); b; b &= b - 1) visit({lowest(a), v, lowest(b)});
        }
        // v at an end
        for (Mask a = nb; a; a &= a - 1) {
            const int mid = lowest(a);
            for (Mask b = g_.neighbors(mid) & mask & ~bit(v); b; b &= b - 1) visit({v, mid, lowest(b)});
        }
    }

    const Graph& g_;
    std::unordered_map<Mask, int> memo_;
};

}  // namespace

P3Packing max_p3_packing(const Graph& g) { return max_p3_packing(g, g.vertices()); }

P3Packing max_p3_packing(const Graph& g, Mask within) {
    within &= g.vertices();
    if (popcount(within) > kP3PackingLimit) {
        throw RangeError("exact P3 packing supports at most 30 vertices, got " + std::to_string(popcount(within)));
    }
    P3Search search(g);
    P3Packing out;
    out.k = search.solve(within);
    out.triples = search.reconstruct(within);
    return out;
}

double log2_of(const MisCount& value) {
    if (value <= 0) return -INFINITY;
    return static_cast<double>(std::log2(value.convert_to<long double>()));
}

bool mis_bound_holds_exact(const MisCount& mis, int n, int k) {
    const int exponent = 25 * n - 2 * k;
    if (exponent < 0) return false;
    MisCount lhs = boost::multiprecision::pow(mis, 50);
    MisCount rhs = MisCount(1) << exponent;
    return lhs <= rhs;
}

BoundCheck verify_mis_bound(const Graph& g) {
    if (!is_triangle_free(g)) throw InputError("MIS bound needs a triangle-free graph: " + to_string(g));
    BoundCheck c;
    c.n = g.order();
    c.k = max_p3_packing(g).k;
    c.mis = count_mis(g);
    c.bound_times_50 = 25 * c.n - 2 * c.k;
    c.bound_log2 = c.bound_times_50 / 50.0;
    c.slack = c.bound_log2 - log2_of(c.mis);
    c.exact_holds = mis_bound_holds_exact(c.mis, c.n, c.k);
    return c;
}

double min_constant_for_family(int a, int b) {
    if (a < 1) throw InputError("family constant needs at least one C5 (k = 0 leaves it undefined)");
    if (b < 0) throw InputError("negative K2 count");
    const double n = 5.0 * a + 2.0 * b;
    const double mis_log2 = a * std::log2(5.0) + b;
    return a / (n / 2.0 - mis_log2);
}

std::optional<double> implied_constant(const BoundCheck& check) {
    if (check.k == 0) return std::nullopt;
    const double room = check.n / 2.0 - log2_of(check.mis);
    if (room <= 0.0) return std::nullopt;
    return check.k / room;
}

}  // namespace mtf
