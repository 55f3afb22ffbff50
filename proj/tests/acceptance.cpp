// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Usage: acceptance [--seed N]

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "brush/cleaning.hpp"
#include "brush/constructions.hpp"
#include "brush/error.hpp"
#include "brush/graph.hpp"
#include "brush/report.hpp"
#include "brush/solver.hpp"
#include "oracles.hpp"

using namespace brush;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void fail(const std::string& why) {
        pass = false;
        details.push_back(why);
    }
    void info(const std::string& what) { details.push_back(what); }
};

bool cleans_with(const Graph& g, const BrushConfig& w0, const CleaningSequence& seq) {
    try {
        simulate(g, w0, seq);
        return true;
    } catch (const InfeasibleStep&) {
        return false;
    }
}

std::string pair_label(char a, int m, char b, int n) {
    std::ostringstream os;
    os << a << m << 'x' << b << n;
    return os.str();
}

Outcome torus_values() {
    Outcome out;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 4}, {4, 5}}) {
        const long got = brush_number_dp(make_torus(m, n).graph).value;
        const long want = 2L * (m + n - 2);
        if (got != want) {
            out.fail(pair_label('C', m, 'C', n) + " dp=" + std::to_string(got) + " want=" + std::to_string(want));
        }
    }
    out.info("6 tori, all equal to 2(m+n-2)");
    return out;
}

Outcome clique_path_values() {
    Outcome out;
    const std::vector<std::pair<int, int>> cases{{2, 2}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3},
                                                 {4, 4}, {5, 2}, {6, 2}, {5, 3}, {4, 5}, {6, 3}};
    ReportOptions opts;
    int incomplete = 0;
    for (auto [m, n] : cases) {
        const auto want = km_pn_brush_number(m, n);
        const auto row = solve_row(pair_label('K', m, 'P', n), make_clique_path(m, n).graph, want, opts);
        if (row.status == RowStatus::Incomplete) {
            ++incomplete;
            out.info(row.label + " incomplete " + row.note);
        } else if (row.status != RowStatus::Match) {
            out.fail(row.label + " solver=" + (row.solver_value ? std::to_string(*row.solver_value) : "none") +
                     " want=" + std::to_string(want));
        }
    }
    out.info(std::to_string(cases.size()) + " instances, " + std::to_string(incomplete) + " incomplete");
    return out;
}

Outcome configs_clean() {
    Outcome out;
    int checked = 0;
    for (int m = 3; m <= 12; ++m) {
        for (int n = 3; n <= 12; ++n) {
            const auto c = torus_config(m, n);
            ++checked;
            if (c.config.total() != torus_brush_number(m, n) ||
                !cleans_with(make_torus(m, n).graph, c.config, c.sequence)) {
                out.fail(pair_label('C', m, 'C', n));
            }
        }
    }
    for (int m = 2; m <= 8; ++m) {
        for (int n = 2; n <= 6; ++n) {
            const auto c = m % 2 == 0 ? km_pn_config(m, n) : km_pn_config_odd(m, n);
            ++checked;
            if (c.config.total() != km_pn_brush_number(m, n) ||
                !cleans_with(make_clique_path(m, n).graph, c.config, c.sequence)) {
                out.fail(pair_label('K', m, 'P', n));
            }
            if (c.from_solver) {
                out.info(pair_label('K', m, 'P', n) + " used a solver witness");
            }
        }
    }
    out.info(std::to_string(checked) + " configurations simulated with their canonical sequences");
    return out;
}

Outcome endpoints() {
    Outcome out;
    for (int k = 2; k <= 20; ++k) {
        const long got = brush_number_dp(make_path(k)).value;
        if (got != 1) out.fail("P" + std::to_string(k) + " dp=" + std::to_string(got));
    }
    for (int m = 1; m <= 16; ++m) {
        const long got = brush_number_dp(make_clique(m)).value;
        if (got != static_cast<long>(m) * m / 4) out.fail("K" + std::to_string(m) + " dp=" + std::to_string(got));
    }
    out.info("P_k for 2 <= k <= 20 and K_m for m <= 16; P_1 has no edges and b(P_1)=" +
             std::to_string(brush_number_dp(make_path(1)).value));
    return out;
}

Outcome reductions() {
    Outcome out;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 4}, {4, 3}}) {
        const auto torus = make_torus(m, n);
        const long b = brush_number_dp(torus.graph).value;
        const auto r = reduce_optimal_torus(torus);
        const auto& red = r.reduction;
        const auto& small = red.merged.torus;
        const long target = brush_number_dp(small.graph).value;
        const bool ok = r.config.total() == b && red.total_after == b - 2 && red.total_after == target &&
                        cleans_with(small.graph, red.merged.config, red.merged.sequence);
        const std::string label = pair_label('C', m, 'C', n);
        const std::string what = label + " b=" + std::to_string(b) + " -> " +
                                 pair_label('C', small.labeling.m, 'C', small.labeling.n) + " total=" +
                                 std::to_string(red.total_after) + " b=" + std::to_string(target) +
                                 " (optimal cleaning #" + std::to_string(r.witnesses_tried) + ", " +
                                 to_string(red.rows.axis) + ")";
        if (ok) out.info(what);
        else out.fail(what);
    }
    return out;
}

Outcome layer_deletion() {
    Outcome out;
    const auto kp = make_clique_path(4, 3);
    const auto r = brush_number_dp(kp.graph);
    const auto w0 = minimal_config_for_sequence(kp.graph, r.witness);
    const auto d = delete_clique_layer(kp, w0, r.witness);
    const long target = brush_number_dp(d.reduced.graph).value;
    const std::string what = "K4xP3 total=" + std::to_string(d.input_total) + " -> K4xP2 total=" +
                             std::to_string(d.output_total) + " b(K4xP2)=" + std::to_string(target);
    if (d.input_total == 12 && d.output_total <= 8 && d.output_total == target && d.cleans &&
        can_clean(d.reduced.graph, d.config).cleanable) {
        out.info(what);
    } else {
        out.fail(what + (d.cleans ? "" : " does not clean"));
    }
    return out;
}

Outcome oracles(std::uint64_t seed) {
    Outcome out;
    std::mt19937_64 rng(seed);
    int dp_bad = 0, parity_bad = 0, greedy_bad = 0;
    for (int round = 0; round < 200; ++round) {
        const int n = 4 + static_cast<int>(rng() % 5);
        const auto g = make_random(n, 0.5, rng());
        const long dp = brush_number_dp(g).value;
        dp_bad += dp != oracle::brush_number(g) || dp != brute_force_permutations(g).value;
        parity_bad += parity_lower_bound(g) > dp;
    }
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto g = make_random(n, 0.5, rng());
        std::vector<int> w(n);
        for (int v = 0; v < n; ++v) w[v] = static_cast<int>(rng() % (g.degree(v) + 1)) / 2;
        greedy_bad += can_clean(g, BrushConfig(w)).cleanable != oracle::cleanable(g, w);
    }
    if (dp_bad) out.fail(std::to_string(dp_bad) + " dp/brute disagreements");
    if (parity_bad) out.fail(std::to_string(parity_bad) + " parity bound violations");
    if (greedy_bad) out.fail(std::to_string(greedy_bad) + " greedy/exhaustive disagreements");
    out.info("seed " + std::to_string(seed) + ": 200 graphs, 200 (graph, config) pairs");
    return out;
}

std::string edges_text(const std::vector<Edge>& es) {
    if (es.empty()) return "{}";
    std::string s = "{";
    for (std::size_t k = 0; k < es.size(); ++k) {
        s += (k ? "," : "") + std::to_string(es[k].first) + "-" + std::to_string(es[k].second);
    }
    return s + "}";
}

Outcome box(BoxFilter filter) {
    Outcome out;
    const std::vector<std::tuple<int, std::string, Graph>> cases{
        {3, "P2", make_path(2)}, {3, "P3", make_path(3)}, {3, "C3", make_cycle(3)}, {4, "P2", make_path(2)}};
    for (const auto& [m, name, h] : cases) {
        const auto r = check_box_conjecture(h, m, name, {}, filter);
        std::ostringstream os;
        os << "m=" << m << " H=" << name << ": " << r.graphs_checked << " graphs, range [" << r.min.value
           << ", " << r.max.value << "] vs [" << r.path_value << ", " << r.clique_value << "]";
        if (r.holds()) {
            out.info(os.str());
        } else {
            os << ", " << r.violations.size() << " violation(s), e.g. G=" << edges_text(r.violations.front().edges)
               << " gives " << r.violations.front().value;
            out.fail(os.str());
        }
    }
    return out;
}

Outcome clique_cycle() {
    Outcome out;
    const auto r = report_clique_cycle({{3, 3}, {3, 4}, {4, 3}});
    std::istringstream text(r.to_text());
    for (std::string line; std::getline(text, line);) out.info(line);
    if (r.rows.size() != 3) out.fail("report incomplete");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 20240601;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
            seed = std::strtoull(argv[++i], nullptr, 10);
        } else {
            std::cerr << "usage: acceptance [--seed N]\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"torus exact values", torus_values},
        {"clique-path exact values", clique_path_values},
        {"closed-form configs clean", configs_clean},
        {"path and clique endpoint values", endpoints},
        {"torus reduction saves two brushes", reductions},
        {"clique layer deletion", layer_deletion},
        {"oracle cross-validation", [seed] { return oracles(seed); }},
        {"box cleaning spot-check over all labeled G", [] { return box(BoxFilter::AllGraphs); }},
        {"K_m x C_n formula readings reported", clique_cycle},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::cout << "criterion " << k + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  "
                  << criteria[k].first << "  [" << ms << " ms]\n";
        for (const auto& d : o.details) std::cout << "    " << d << '\n';

        if (k + 1 == 8) {
            // Context for the failure above; does not count toward the result.
            const auto conn = box(BoxFilter::ConnectedOnly);
            std::cout << "    supplementary, connected G only: " << (conn.pass ? "no violations" : "violations")
                      << '\n';
            for (const auto& d : conn.details) std::cout << "      " << d << '\n';
        }
    }
    std::cout << "summary: " << criteria.size() - failed << " of " << criteria.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
