#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <set>

#include "mtf/constructions.hpp"
#include "mtf/enumeration.hpp"
#include "mtf/graph6.hpp"
#include "mtf/mis.hpp"
#include "mtf/parallel.hpp"
#include "mtf/structure.hpp"
#include "mtf/sweeps.hpp"

namespace {

using json = nlohmann::ordered_json;
using mtf::Graph;

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kConfigError = 2;

// Thrown for flag combinations the parser cannot catch on its own.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Stopwatch {
public:
    explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
    json elapsed() const {
        if (!enabled_) return nullptr;
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    bool enabled_;
    std::chrono::steady_clock::time_point start_;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// Graph stream sink: a file when a path is given, stdout otherwise.
class GraphSink {
public:
    explicit GraphSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw ConfigError("cannot open " + path + " for writing");
        }
    }
    void write(const Graph& g) { out() << mtf::graph6_encode(g) << '\n'; }

private:
    std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    std::ofstream file_;
};

std::vector<Graph> read_graphs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    return mtf::read_graph6_stream(in);
}

// ---------------------------------------------------------------- enumerate

struct EnumerateOptions {
    int n = 0;
    std::string out;
    bool oracle_check = false;
    bool unlabeled = false;
    bool timing = false;
};

int run_enumerate(const EnumerateOptions& o) {
    const Stopwatch clock(o.timing);
    const std::vector<std::uint64_t> codes = mtf::enumerate_mtf_codes(o.n);

    json report;
    report["command"] = "enumerate";
    report["n"] = o.n;
    report["total"] = codes.size();
    report["unlabeled"] = nullptr;
    report["oracle_check"] = nullptr;

    int rc = kOk;
    if (o.oracle_check) {
        std::vector<std::uint64_t> oracle;
        for (const Graph& g : mtf::brute_force_mtf(o.n)) oracle.push_back(g.edge_code());
        std::vector<std::uint64_t> missing;
        std::vector<std::uint64_t> extra;
        std::set_difference(oracle.begin(), oracle.end(), codes.begin(), codes.end(), std::back_inserter(missing));
        std::set_difference(codes.begin(), codes.end(), oracle.begin(), oracle.end(), std::back_inserter(extra));
        report["oracle_check"] = missing.empty() && extra.empty();
        if (!missing.empty() || !extra.empty()) {
            json w;
            w["missing"] = json::array();
            w["extra"] = json::array();
            for (auto c : missing) w["missing"].push_back(mtf::graph6_encode(Graph::from_edge_code(o.n, c)));
            for (auto c : extra) w["extra"].push_back(mtf::graph6_encode(Graph::from_edge_code(o.n, c)));
            report["witness"] = w;
            rc = kFalsified;
        }
    }
    if (o.unlabeled) report["unlabeled"] = mtf::count_isomorphism_classes(o.n, codes, true);

    GraphSink sink(o.out);
    for (std::uint64_t c : codes) sink.write(Graph::from_edge_code(o.n, c));
    report["out"] = o.out.empty() ? json(nullptr) : json(o.out);
    report["elapsed_ms"] = clock.elapsed();
    emit(report);
    return rc;
}

// ------------------------------------------------------------------- verify

struct VerifyOptions {
    std::string target;
    std::optional<int> max_n;
    std::optional<int> max_side;
    int max_edges = 12;
    bool exhaustive = false;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    std::string in;
};

int verify_from_file(const VerifyOptions& o) {
    if (o.target != "lemma-mis-bound") throw ConfigError("--in is only supported for lemma-mis-bound");
    std::uint64_t violations = 0;
    std::uint64_t count = 0;
    for (const Graph& g : read_graphs(o.in)) {
        const mtf::BoundCheck check = mtf::verify_mis_bound(g);
        emit(json::parse(mtf::bound_record(g, check).dump()));
        ++count;
        if (!check.exact_holds) ++violations;
    }
    json report;
    report["command"] = "verify";
    report["claim"] = o.target;
    report["in"] = o.in;
    report["instances"] = count;
    report["violations"] = violations;
    report["ok"] = violations == 0;
    emit(report);
    return violations == 0 ? kOk : kFalsified;
}

int run_verify(const VerifyOptions& o) {
    if (!o.in.empty()) return verify_from_file(o);
    mtf::SweepResult r;
    const std::string& t = o.target;
    if (t == "lemma-mis-bound") {
        r = o.exhaustive ? mtf::sweep_mis_bound_exhaustive(o.max_n.value_or(7))
                         : mtf::sweep_mis_bound_random(o.trials, o.max_n.value_or(20), o.seed);
    } else if (t == "link-triangle-free") {
        r = o.exhaustive ? mtf::sweep_link_triangle_free_exhaustive(o.max_n.value_or(5))
                         : mtf::sweep_link_triangle_free_random(o.trials, o.max_n.value_or(12), o.seed);
    } else if (t == "link-product") {
        r = o.exhaustive ? mtf::sweep_link_product_exhaustive(o.max_side.value_or(3))
                         : mtf::sweep_link_product_random(o.trials, o.max_side.value_or(6), o.seed);
    } else if (t == "extension-count") {
        r = o.exhaustive ? mtf::sweep_extension_count_exhaustive(o.max_n.value_or(5), o.max_edges)
                         : mtf::sweep_extension_count_random(o.trials, o.max_n.value_or(8), o.max_edges, o.seed);
    } else {
        r = mtf::sweep_remark_constant();
    }
    json report;
    report["command"] = "verify";
    const json body = json::parse(mtf::to_json(r).dump());
    for (const auto& [key, value] : body.items()) report[key] = value;
    emit(report);
    return r.ok() ? kOk : kFalsified;
}

// ---------------------------------------------------------------- construct

struct ConstructOptions {
    int n = 0;
    int r = 2;
    std::string choice;
    bool all = false;
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = 0;
    bool complete = false;
    bool verify_distinct = false;
    std::string out;
};

constexpr std::size_t kMaxEnumeratedBits = 20;

int run_construct(const ConstructOptions& o) {
    const mtf::ChoiceShape shape = mtf::choice_shape(o.n, o.r);
    const int modes = static_cast<int>(!o.choice.empty()) + static_cast<int>(o.all) + static_cast<int>(o.samples.has_value());
    if (modes > 1) throw ConfigError("use at most one of --choice, --all, --samples");

    std::vector<mtf::SeedChoice> choices;
    std::string mode;
    if (!o.choice.empty()) {
        mode = "choice";
        choices.push_back(mtf::choice_from_hex(o.n, o.r, o.choice));
    } else if (o.samples) {
        mode = "samples";
        for (std::uint64_t i = 0; i < *o.samples; ++i) {
            std::mt19937_64 rng(mtf::trial_seed(o.seed, i));
            choices.push_back(mtf::random_choice(o.n, o.r, rng));
        }
    } else if (o.all || !o.verify_distinct) {
        mode = "all";
        if (shape.bits() > kMaxEnumeratedBits) {
            throw ConfigError("choice space has 2^" + std::to_string(shape.bits()) +
                              " members; use --choice or --samples");
        }
        for (std::uint64_t i = 0; i < (std::uint64_t{1} << shape.bits()); ++i) {
            choices.push_back(mtf::choice_from_index(o.n, o.r, i));
        }
    }

    json report;
    report["command"] = "construct";
    report["n"] = o.n;
    report["r"] = o.r;
    report["mode"] = mode.empty() ? json(nullptr) : json(mode);
    report["seed"] = o.samples ? json(o.seed) : json(nullptr);
    report["complete"] = o.complete;

    GraphSink sink(o.out);
    std::set<std::string> distinct;
    json violations = json::array();
    for (std::size_t i = 0; i < choices.size(); ++i) {
        const Graph seed = mtf::seed_graph_general(o.n, o.r, choices[i]);
        if (mtf::clique_number(seed) > o.r) {
            violations.push_back({{"choice", mtf::choice_to_hex(o.n, o.r, choices[i])},
                                  {"graph6", mtf::graph6_encode(seed)},
                                  {"clique_number", mtf::clique_number(seed)}});
            continue;
        }
        const Graph g = !o.complete ? seed : o.r == 2 ? mtf::maximal_completion(seed) : mtf::clique_free_completion(seed, o.r);
        distinct.insert(mtf::graph6_encode(g));
        sink.write(g);
    }
    report["graphs"] = choices.size();
    report["distinct"] = distinct.size();
    report["clique_free"] = violations.empty();

    int rc = violations.empty() ? kOk : kFalsified;
    if (!violations.empty()) report["witnesses"] = violations;

    if (o.verify_distinct) {
        if (o.r != 2) throw ConfigError("--verify-distinct applies to r = 2");
        const mtf::DistinctnessReport d = mtf::verify_distinct_completions(o.n);
        json v;
        v["ok"] = d.ok;
        v["seeds"] = d.seeds;
        v["distinct_completions"] = d.distinct_completions;
        v["all_maximal"] = d.all_maximal;
        v["cross_edges_preserved"] = d.cross_edges_preserved;
        v["no_cross_edge_addable"] = d.no_cross_edge_addable;
        v["collision"] = nullptr;
        if (d.collision) {
            v["collision"] = {mtf::choice_to_hex(o.n, 2, mtf::choice_from_index(o.n, 2, d.collision->first)),
                              mtf::choice_to_hex(o.n, 2, mtf::choice_from_index(o.n, 2, d.collision->second))};
        }
        report["verify_distinct"] = v;
        if (!d.ok) rc = kFalsified;
    }
    report["out"] = o.out.empty() ? json(nullptr) : json(o.out);
    emit(report);
    return rc;
}

// ---------------------------------------------------------------- structure

struct StructureOptions {
    std::optional<int> n;
    std::string in;
    bool summary_only = false;
    bool all_cuts = false;
    bool timing = false;
};

json stats_json(const mtf::GraphStats& st) {
    return {{"x_mask", st.cut.x_mask}, {"cut", st.cut_size}, {"s", st.s}, {"t", st.t}, {"r", st.r}};
}

int run_structure(const StructureOptions& o) {
    if (o.n.has_value() == !o.in.empty()) throw ConfigError("give exactly one of --n or --in");
    const Stopwatch clock(o.timing);
    std::vector<Graph> graphs;
    if (o.n) {
        for (std::uint64_t c : mtf::enumerate_mtf_codes(*o.n)) graphs.push_back(Graph::from_edge_code(*o.n, c));
    } else {
        graphs = read_graphs(o.in);
    }
    const std::vector<mtf::StructureRecord> records = mtf::structure_records(graphs);

    std::uint64_t structured = 0;
    std::uint64_t cross_failures = 0;
    json witnesses = json::array();
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        const auto& rec = records[i];
        const bool has = rec.witness.has_value();
        structured += has;
        // exactly one cross edge is only claimed for maximal graphs
        std::optional<bool> one_cross;
        if (has && mtf::is_maximal_triangle_free(graphs[i])) {
            one_cross = mtf::check_one_cross_edge(graphs[i], *rec.witness);
            if (!*one_cross) {
                ++cross_failures;
                witnesses.push_back({{"graph6", mtf::graph6_encode(graphs[i])},
                                     {"witness_x_mask", rec.witness->partition.x_mask}});
            }
        }
        if (o.summary_only) continue;
        json line;
        line["graph6"] = mtf::graph6_encode(graphs[i]);
        line["structured"] = has;
        line["witness_x_mask"] = has ? json(rec.witness->partition.x_mask) : json(nullptr);
        line["one_cross_edge"] = one_cross ? json(*one_cross) : json(nullptr);
        line["s"] = rec.stats.s;
        line["t"] = rec.stats.t;
        line["r"] = rec.stats.r;
        line["closeness"] = rec.closeness;
        if (o.all_cuts) {
            line["all_cuts"] = json::array();
            for (const auto& st : mtf::graph_stats_all_cuts(graphs[i])) line["all_cuts"].push_back(stats_json(st));
        }
        emit(line);
    }
    json report;
    report["command"] = "structure";
    report["n"] = o.n ? json(*o.n) : json(nullptr);
    report["in"] = o.in.empty() ? json(nullptr) : json(o.in);
    report["total"] = graphs.size();
    report["by_structure"] = structured;
    report["fraction"] = graphs.empty() ? json(nullptr) : json(static_cast<double>(structured) / graphs.size());
    report["one_cross_edge_failures"] = cross_failures;
    if (cross_failures) report["witnesses"] = witnesses;
    report["elapsed_ms"] = clock.elapsed();
    emit(report);
    return cross_failures == 0 ? kOk : kFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal triangle-free graphs: enumeration, constructions and claim checks.\n"
                 "Worker count comes from MTF_WORKERS (default: all cores)."};
    app.require_subcommand(1);

    EnumerateOptions eo;
    auto* enumerate = app.add_subcommand("enumerate", "List every labelled maximal triangle-free graph on [n]");
    enumerate->add_option("--n", eo.n, "Vertex count (1..10)")->required();
    enumerate->add_option("--out", eo.out, "graph6 output file (default: stdout)");
    enumerate->add_flag("--oracle-check", eo.oracle_check, "Compare with the brute-force oracle (n <= 6)");
    enumerate->add_flag("--unlabeled", eo.unlabeled, "Also count isomorphism classes");
    enumerate->add_flag("--timing", eo.timing, "Report elapsed_ms (otherwise null)");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Check a claim over exhaustive or seeded random instances");
    verify->add_option("target", vo.target)
        ->required()
        ->check(CLI::IsMember(
            {"lemma-mis-bound", "link-triangle-free", "link-product", "extension-count", "remark-constant"}));
    verify->add_option("--max-n", vo.max_n, "Largest vertex count");
    verify->add_option("--max-side", vo.max_side, "Largest |X| and |Y| for link-product");
    verify->add_option("--max-edges", vo.max_edges, "Largest e(A) for extension-count")->capture_default_str();
    verify->add_flag("--exhaustive", vo.exhaustive, "All instances up to the size limit");
    verify->add_option("--trials", vo.trials, "Random instances")->capture_default_str();
    verify->add_option("--seed", vo.seed, "Random seed")->capture_default_str();
    verify->add_option("--in", vo.in, "graph6 file of graphs to check (lemma-mis-bound)");

    ConstructOptions co;
    auto* construct = app.add_subcommand("construct", "Lower-bound construction seeds and completions");
    construct->add_option("--n", co.n, "Vertex count")->required();
    construct->add_option("--r", co.r, "Number of classes (K_{r+1}-free)")->capture_default_str();
    construct->add_option("--choice", co.choice, "Choice vector as hex");
    construct->add_flag("--all", co.all, "Every choice vector (at most 2^20)");
    construct->add_option("--samples", co.samples, "Seeded random choice vectors");
    construct->add_option("--seed", co.seed, "Random seed for --samples")->capture_default_str();
    construct->add_flag("--complete", co.complete, "Emit lexicographic maximal completions");
    construct->add_flag("--verify-distinct", co.verify_distinct, "Check completions are distinct (r = 2, n in {4, 8})");
    construct->add_option("--out", co.out, "graph6 output file (default: stdout)");

    StructureOptions so;
    auto* structure = app.add_subcommand("structure", "Matching-plus-independent-set split and max-cut statistics");
    structure->add_option("--n", so.n, "Enumerate all maximal triangle-free graphs on [n]");
    structure->add_option("--in", so.in, "graph6 input file");
    structure->add_flag("--summary-only", so.summary_only, "Skip per-graph lines");
    structure->add_flag("--all-cuts", so.all_cuts, "Statistics for every max-cut (n <= 16)");
    structure->add_flag("--timing", so.timing, "Report elapsed_ms (otherwise null)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kConfigError;
    }

    try {
        if (*enumerate) return run_enumerate(eo);
        if (*verify) return run_verify(vo);
        if (*construct) return run_construct(co);
        return run_structure(so);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    }
}
