// Acceptance gate: one PASS/FAIL line per criterion, exit 0 only if all pass.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mtf/constructions.hpp"
#include "mtf/enumeration.hpp"
#include "mtf/mis.hpp"
#include "mtf/parallel.hpp"
#include "mtf/structure.hpp"
#include "mtf/sweeps.hpp"

using namespace mtf;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

// Structure witness by scanning all 2^n subsets as Y.
bool has_witness_by_subsets(const Graph& g) {
    for (Mask y = 0; y < (Mask{1} << g.order()); ++y) {
        bool ok = true;
        for (int v = 0; v < g.order() && ok; ++v) {
            const bool in_y = (y >> v) & 1;
            const int same_side = popcount(g.neighbors(v) & (in_y ? y : ~y & g.vertices()));
            ok = in_y ? same_side == 0 : same_side == 1;
        }
        if (ok) return true;
    }
    return false;
}

std::string sweep_detail(const SweepResult& r) {
    return std::to_string(r.instances) + " instances, " + std::to_string(r.violations) + " violations";
}

Verdict mis_base_values() {
    const bool base = count_mis(path_graph(2)) == 2 && count_mis(path_graph(3)) == 2 &&
                      count_mis(cycle_graph(4)) == 2 && count_mis(cycle_graph(5)) == 5;
    int agree = 0;
    for (int n = 3; n <= 15; ++n) {
        agree += mis_path(n) == count_mis(path_graph(n));
        agree += mis_cycle(n) == count_mis(cycle_graph(n));
    }
    return {base && agree == 26, "base values " + std::string(base ? "match" : "differ") + ", recurrences agree on " +
                                     std::to_string(agree) + "/26"};
}

Verdict mis_bound() {
    const SweepResult ex = sweep_mis_bound_exhaustive(7);
    const SweepResult rnd = sweep_mis_bound_random(100000, 20, 2024);
    const bool pass = ex.ok() && rnd.ok() && ex.instances == 139729 && rnd.instances == 100000;
    return {pass, "exhaustive n<=7: " + sweep_detail(ex) + "; random n<=20: " + sweep_detail(rnd)};
}

Verdict remark_constant() {
    const double c = min_constant_for_family(1, 0);
    const bool same = std::abs(min_constant_for_family(2, 0) - c) < 1e-12 && std::abs(min_constant_for_family(1, 3) - c) < 1e-12;
    const bool pass = std::abs(c - 1.0 / (2.5 - std::log2(5.0))) < 1e-12 && std::abs(c - 5.6164) < 1e-3 && c >= 5.6 &&
                      same && sweep_remark_constant().ok();
    std::ostringstream s;
    s.precision(10);
    s << "c = " << c << ", |c - 5.6164| = " << std::abs(c - 5.6164);
    return {pass, s.str()};
}

Verdict link_triangle_free() {
    const SweepResult ex = sweep_link_triangle_free_exhaustive(5);
    const SweepResult rnd = sweep_link_triangle_free_random(10000, 12, 2025);
    return {ex.ok() && rnd.ok() && ex.instances > 0 && rnd.instances > 0,
            "exhaustive n<=5: " + sweep_detail(ex) + "; random n<=12: " + sweep_detail(rnd)};
}

Verdict link_product() {
    const SweepResult ex = sweep_link_product_exhaustive(3);
    const SweepResult rnd = sweep_link_product_random(10000, 6, 2026);
    return {ex.ok() && rnd.ok() && rnd.instances == 10000,
            "exhaustive |X|,|Y|<=3: " + sweep_detail(ex) + "; random |X|,|Y|<=6: " + sweep_detail(rnd)};
}

Verdict extension_count() {
    const SweepResult ex = sweep_extension_count_exhaustive(5, 12);
    return {ex.ok() && ex.instances > 0, "exhaustive n<=5, e(A)<=12: " + sweep_detail(ex)};
}

Verdict enumeration_oracle() {
    const std::array<std::size_t, 5> pinned{1, 3, 7, 27, 211};
    bool pass = true;
    std::string counts;
    for (int n = 2; n <= 6; ++n) {
        std::vector<std::uint64_t> oracle;
        for (const Graph& g : brute_force_mtf(n)) oracle.push_back(g.edge_code());
        const auto codes = enumerate_mtf_codes(n);
        pass = pass && codes == oracle && codes.size() == pinned[n - 2];
        counts += (n == 2 ? "" : ", ") + std::to_string(n) + ":" + std::to_string(codes.size());
    }
    return {pass, "labelled counts " + counts};
}

Verdict lower_bound_construction() {
    bool pass = true;
    std::string detail;
    for (int n : {4, 8}) {
        const std::uint64_t seeds = std::uint64_t{1} << choice_shape(n, 2).bits();
        bool triangle_free = true;
        for (std::uint64_t i = 0; i < seeds; ++i) {
            triangle_free = triangle_free && is_triangle_free(seed_graph(n, choice_from_index(n, 2, i).pick));
        }
        const DistinctnessReport d = verify_distinct_completions(n);
        const std::uint64_t expected = std::uint64_t{1} << (n * n / 8);
        pass = pass && seeds == expected && d.seeds == expected && triangle_free && d.ok;
        detail += (n == 4 ? "" : "; ") + std::string("n=") + std::to_string(n) + ": " + std::to_string(seeds) +
                  " seeds, " + std::to_string(d.distinct_completions) + " distinct maximal completions";
    }
    return {pass, detail};
}

Verdict structure_predicate() {
    const auto p3 = find_structure_partition(path_graph(3));
    const bool examples = p3 && has_witness_by_subsets(path_graph(3)) && !find_structure_partition(cycle_graph(4)) &&
                          !has_witness_by_subsets(cycle_graph(4)) && !find_structure_partition(cycle_graph(5)) &&
                          !has_witness_by_subsets(cycle_graph(5));
    bool completions = true;
    std::string detail = std::string("examples ") + (examples ? "ok" : "wrong");
    for (int n : {4, 8}) {
        const std::uint64_t seeds = std::uint64_t{1} << choice_shape(n, 2).bits();
        std::uint64_t good = 0;
        for (std::uint64_t i = 0; i < seeds; ++i) {
            const Graph g = maximal_completion(seed_graph(n, choice_from_index(n, 2, i).pick));
            const auto w = find_structure_partition(g);
            good += w && check_one_cross_edge(g, *w);
        }
        completions = completions && good == seeds;
        detail += "; n=" + std::to_string(n) + " completions with witness and one cross edge: " + std::to_string(good) +
                  "/" + std::to_string(seeds);
    }
    return {examples && completions, detail};
}

Verdict general_construction() {
    int clique_free = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        std::mt19937_64 rng(trial_seed(2027, i));
        clique_free += clique_number(seed_graph_general(12, 3, random_choice(12, 3, rng))) <= 3;
    }
    return {clique_free == 100, std::to_string(clique_free) + "/100 sampled r=3, n=12 seeds are K4-free"};
}

std::string run_cli(const std::string& workers, const std::string& args) {
    const std::string command = "MTF_WORKERS=" + workers + " " MTF_CLI_PATH " " + args + " 2>&1";
    std::string out;
    if (FILE* pipe = popen(command.c_str(), "r")) {
        std::array<char, 4096> buf{};
        std::size_t got;
        while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
        out += "exit=" + std::to_string(pclose(pipe));
    }
    return out;
}

Verdict determinism() {
    const std::vector<std::string> commands{
        "verify lemma-mis-bound --trials 20000 --max-n 16 --seed 7",
        "verify link-triangle-free --trials 5000 --seed 11",
        "verify link-product --trials 5000 --seed 42",
        "verify extension-count --trials 2000 --seed 9",
        "enumerate --n 7 --unlabeled",
        "structure --n 7",
        "construct --n 12 --r 3 --samples 50 --seed 3 --complete",
        "construct --n 8 --all --complete --verify-distinct",
    };
    int identical = 0;
    for (const auto& c : commands) {
        const std::string a = run_cli("1", c);
        const std::string b = run_cli("4", c);
        const std::string again = run_cli("4", c);
        identical += !a.empty() && a == b && b == again && a.ends_with("exit=0");
    }
    return {identical == static_cast<int>(commands.size()),
            std::to_string(identical) + "/" + std::to_string(commands.size()) +
                " commands byte-identical across MTF_WORKERS=1,4,4"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"MIS base values and path/cycle recurrences", mis_base_values},
        {"MIS bound in exact integer form", mis_bound},
        {"family constant for C5 + matching", remark_constant},
        {"link graph is triangle-free", link_triangle_free},
        {"link graph equals the Cartesian product", link_product},
        {"extension count at most MIS of the link", extension_count},
        {"enumeration equals the brute-force oracle", enumeration_oracle},
        {"lower-bound construction", lower_bound_construction},
        {"structure predicate", structure_predicate},
        {"general construction is K_{r+1}-free", general_construction},
        {"deterministic output", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !v.pass;
        std::printf("criterion %2zu: %s  %s (%s) [%.2fs]\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    v.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
