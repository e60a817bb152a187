#include "mtf/constructions.hpp"

#include <algorithm>
#include <map>

#include "mtf/enumeration.hpp"

namespace mtf {

namespace {

void check_shape(int n, int r) {
    if (r < 2) throw RangeError("construction needs r >= 2");
    if (n < 2 * r || n % (2 * r) != 0) {
        throw RangeError("construction needs n divisible by 2r (n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                         ")");
    }
    if (n > kMaxVertices) throw RangeError("construction needs n <= 64");
}

void check_choice(int n, int r, const SeedChoice& choice) {
    const ChoiceShape shape = choice_shape(n, r);
    if (choice.omit.size() != shape.omit_slots || choice.pick.size() != shape.pick_slots) {
        throw InputError("choice vector has " + std::to_string(choice.omit.size()) + "+" +
                         std::to_string(choice.pick.size()) + " entries, expected " +
                         std::to_string(shape.omit_slots) + "+" + std::to_string(shape.pick_slots));
    }
    for (auto o : choice.omit) {
        if (o > 3) throw InputError("omit entries must lie in 0..3");
    }
    for (auto p : choice.pick) {
        if (p > 1) throw InputError("pick entries must be 0 or 1");
    }
}

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

ConstructionFamily construction_family(int n, int r) {
    check_shape(n, r);
    ConstructionFamily f;
    f.n = n;
    f.r = r;
    const int size = n / r;
    for (int i = 0; i < r; ++i) f.classes.push_back(low_bits(size) << (i * size));
    for (int i = 0; i + 1 < r; ++i) {
        MatchingResult m;
        for (int j = 0; j < size / 2; ++j) m.edges.emplace_back(i * size + 2 * j, i * size + 2 * j + 1);
        m.size = static_cast<int>(m.edges.size());
        f.matchings.push_back(std::move(m));
    }
    return f;
}

ChoiceShape choice_shape(int n, int r) {
    check_shape(n, r);
    const std::size_t size = n / r;
    const std::size_t edges_per_class = size / 2;
    const std::size_t x_classes = r - 1;
    ChoiceShape s;
    s.omit_slots = x_classes * (x_classes - 1) / 2 * edges_per_class * edges_per_class;
    s.pick_slots = x_classes * edges_per_class * size;
    return s;
}

Graph seed_graph_general(int n, int r, const SeedChoice& choice) {
    check_choice(n, r, choice);
    const ConstructionFamily f = construction_family(n, r);
    std::vector<Edge> edges;
    for (const auto& m : f.matchings) edges.insert(edges.end(), m.edges.begin(), m.edges.end());

    std::size_t slot = 0;
    for (int i = 0; i + 1 < r; ++i) {
        for (const Edge& a : f.matchings[i].edges) {
            for (int j = i + 1; j + 1 < r; ++j) {
                for (const Edge& b : f.matchings[j].edges) {
                    const std::array<Edge, 4> cross{Edge(a.u, b.u), Edge(a.u, b.v), Edge(a.v, b.u), Edge(a.v, b.v)};
                    for (int c = 0; c < 4; ++c) {
                        if (c != choice.omit[slot]) edges.push_back(cross[c]);
                    }
                    ++slot;
                }
            }
        }
    }
    slot = 0;
    const Mask y_class = f.classes.back();
    for (int i = 0; i + 1 < r; ++i) {
        for (const Edge& a : f.matchings[i].edges) {
            for (Mask m = y_class; m; m &= m - 1) {
                edges.emplace_back(choice.pick[slot] ? a.v : a.u, lowest(m));
                ++slot;
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph seed_graph(int n, const std::vector<std::uint8_t>& pick) {
    if (n < 4 || n % 4 != 0) throw RangeError("seed_graph needs n divisible by 4, got " + std::to_string(n));
    return seed_graph_general(n, 2, SeedChoice{{}, pick});
}

Graph clique_free_completion(const Graph& g, int r) {
    if (r < 2) throw RangeError("clique-free completion needs r >= 2");
    if (clique_number(g) > r) throw InputError("graph already contains K_" + std::to_string(r + 1));
    Graph out = g;
    for (const Edge& e : all_pairs(g.order())) {
        if (out.has_edge(e.u, e.v)) continue;
        // uv closes a K_{r+1} iff the common neighbourhood holds a K_{r-1}
        const Mask common = out.neighbors(e.u) & out.neighbors(e.v);
        const int inside = common ? clique_number(out.induced(common)) : 0;
        if (inside < r - 1) out = out.with_edge(e.u, e.v);
    }
    return out;
}

std::string choice_to_hex(int n, int r, const SeedChoice& choice) {
    check_choice(n, r, choice);
    const std::size_t bits = choice_shape(n, r).bits();
    std::vector<int> raw;
    raw.reserve(bits);
    for (auto o : choice.omit) {
        raw.push_back(o & 1);
        raw.push_back((o >> 1) & 1);
    }
    for (auto p : choice.pick) raw.push_back(p);
    const std::size_t digits = std::max<std::size_t>(1, (bits + 3) / 4);
    std::string hex(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
        int value = 0;
        for (int b = 0; b < 4; ++b) {
            std::size_t idx = 4 * d + b;
            if (idx < raw.size() && raw[idx]) value |= 1 << b;
        }
        hex[digits - 1 - d] = "0123456789abcdef"[value];
    }
    return hex;
}

SeedChoice choice_from_hex(int n, int r, std::string_view hex) {
    const ChoiceShape shape = choice_shape(n, r);
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.empty()) throw InputError("empty choice hex");
    std::vector<int> raw(hex.size() * 4, 0);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        int value = hex_digit(hex[hex.size() - 1 - d]);
        if (value < 0) throw InputError("invalid hex digit in choice: " + std::string(hex));
        for (int b = 0; b < 4; ++b) raw[4 * d + b] = (value >> b) & 1;
    }
    for (std::size_t i = shape.bits(); i < raw.size(); ++i) {
        if (raw[i]) throw InputError("choice hex has bits beyond the " + std::to_string(shape.bits()) + "-bit shape");
    }
    raw.resize(std::max(raw.size(), shape.bits()), 0);
    SeedChoice c;
    std::size_t i = 0;
    for (std::size_t s = 0; s < shape.omit_slots; ++s, i += 2) c.omit.push_back(static_cast<std::uint8_t>(raw[i] | (raw[i + 1] << 1)));
    for (std::size_t s = 0; s < shape.pick_slots; ++s, ++i) c.pick.push_back(static_cast<std::uint8_t>(raw[i]));
    return c;
}

SeedChoice choice_from_index(int n, int r, std::uint64_t index) {
    const ChoiceShape shape = choice_shape(n, r);
    if (shape.bits() > 63) throw RangeError("choice space too large to index with 64 bits");
    if (index >> shape.bits()) throw RangeError("choice index beyond the choice space");
    SeedChoice c;
    int i = 0;
    for (std::size_t s = 0; s < shape.omit_slots; ++s, i += 2) c.omit.push_back(static_cast<std::uint8_t>((index >> i) & 3));
    for (std::size_t s = 0; s < shape.pick_slots; ++s, ++i) c.pick.push_back(static_cast<std::uint8_t>((index >> i) & 1));
    return c;
}

SeedChoice random_choice(int n, int r, std::mt19937_64& rng) {
    const ChoiceShape shape = choice_shape(n, r);
    SeedChoice c;
    for (std::size_t s = 0; s < shape.omit_slots; ++s) c.omit.push_back(static_cast<std::uint8_t>(rng() & 3));
    for (std::size_t s = 0; s < shape.pick_slots; ++s) c.pick.push_back(static_cast<std::uint8_t>(rng() & 1));
    return c;
}

std::vector<Mask> cross_edges(const Graph& g, Mask x_mask) {
    std::vector<Mask> out;
    const Mask y_mask = g.vertices() & ~x_mask;
    for (Mask m = x_mask & g.vertices(); m; m &= m - 1) out.push_back(g.neighbors(lowest(m)) & y_mask);
    return out;
}

DistinctnessReport verify_distinct_completions(int n, Execution exec) {
    if (n != 4 && n != 8) throw RangeError("distinctness check supports n in {4, 8}");
    const ConstructionFamily family = construction_family(n, 2);
    const Mask x_mask = family.classes[0];
    const Mask y_mask = family.classes[1];
    const std::uint64_t seeds = std::uint64_t{1} << choice_shape(n, 2).bits();

    std::vector<std::uint64_t> codes(seeds);
    std::vector<char> maximal(seeds, 1);
    std::vector<char> preserved(seeds, 1);
    std::vector<char> blocked(seeds, 1);

    auto check = [&](std::int64_t idx) {
        const Graph seed = seed_graph(n, choice_from_index(n, 2, idx).pick);
        for (Mask xs = x_mask; xs; xs &= xs - 1) {
            const int x = lowest(xs);
            for (Mask ys = y_mask & ~seed.neighbors(x); ys; ys &= ys - 1) {
                if ((seed.neighbors(x) & seed.neighbors(lowest(ys))) == 0) blocked[idx] = 0;
            }
        }
        const Graph done = maximal_completion(seed);
        maximal[idx] = is_maximal_triangle_free(done) ? 1 : 0;
        preserved[idx] = cross_edges(done, x_mask) == cross_edges(seed, x_mask) ? 1 : 0;
        codes[idx] = done.edge_code();
    };

    if (exec == Execution::serial) {
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(seeds); ++i) check(i);
    } else {
#pragma omp parallel for schedule(static) num_threads(worker_count())
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(seeds); ++i) check(i);
    }

    DistinctnessReport rep;
    rep.seeds = seeds;
    std::map<std::uint64_t, std::uint64_t> first_seen;
    for (std::uint64_t i = 0; i < seeds; ++i) {
        auto [it, fresh] = first_seen.emplace(codes[i], i);
        if (!fresh && !rep.collision) rep.collision = std::make_pair(it->second, i);
        rep.all_maximal = rep.all_maximal && maximal[i];
        rep.cross_edges_preserved = rep.cross_edges_preserved && preserved[i];
        rep.no_cross_edge_addable = rep.no_cross_edge_addable && blocked[i];
    }
    rep.distinct_completions = first_seen.size();
    rep.ok = !rep.collision && rep.all_maximal && rep.cross_edges_preserved && rep.no_cross_edge_addable;
    return rep;
}

}  // namespace mtf
