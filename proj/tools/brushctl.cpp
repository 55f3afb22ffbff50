#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "brush/cleaning.hpp"
#include "brush/constructions.hpp"
#include "brush/error.hpp"
#include "brush/graph.hpp"
#include "brush/report.hpp"
#include "brush/solver.hpp"

using namespace brush;

namespace {

enum Exit : int {
    kOk = 0,
    kInfeasible = 1,
    kBadInput = 2,
    kOverCap = 3,
    kIncomplete = 4,
    kVerifyFailed = 5,
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidInput("cannot write " + path);
    }
    out << text << '\n';
}

std::string join(std::span<const int> xs, char sep = ' ') {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

// "v:c" for every vertex holding brushes.
std::string config_line(const BrushConfig& w0) {
    std::string s;
    for (Vertex v = 0; v < w0.vertex_count(); ++v) {
        if (w0[v] > 0) {
            if (!s.empty()) s += ' ';
            s += std::to_string(v) + ':' + std::to_string(w0[v]);
        }
    }
    return s;
}

int to_int(const std::string& s, const char* what) {
    int value = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || p != s.data() + s.size()) {
        throw InvalidParameter(std::string("bad ") + what + ": '" + s + "'");
    }
    return value;
}

// "4", "3..6" or "2,3,5".
std::vector<int> parse_range(const std::string& s) {
    std::vector<int> out;
    if (auto dots = s.find(".."); dots != std::string::npos) {
        const int lo = to_int(s.substr(0, dots), "range");
        const int hi = to_int(s.substr(dots + 2), "range");
        if (lo > hi) {
            throw InvalidParameter("empty range " + s);
        }
        for (int k = lo; k <= hi; ++k) out.push_back(k);
        return out;
    }
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, ',');) {
        out.push_back(to_int(part, "list entry"));
    }
    if (out.empty()) {
        throw InvalidParameter("empty list");
    }
    return out;
}

void need_params(const std::vector<std::string>& p, std::size_t k, const std::string& family) {
    if (p.size() != k) {
        throw InvalidParameter(family + " takes " + std::to_string(k) + " parameter(s)");
    }
}

// Small named graphs: P<k>, C<k>, K<k>, E<k>.
Graph named_graph(const std::string& name) {
    if (name.size() < 2) {
        throw InvalidParameter("unknown graph name '" + name + "'");
    }
    const int k = to_int(name.substr(1), "graph order");
    switch (name[0]) {
        case 'P': return make_path(k);
        case 'C': return make_cycle(k);
        case 'K': return make_clique(k);
        case 'E': return make_empty(k);
        default: throw InvalidParameter("unknown graph name '" + name + "'");
    }
}

// The labelled shape (m, n) with make(m, n) == g, trying m ascending.
std::optional<ProductGraph> infer_shape(const Graph& g,
                                        const std::function<ProductGraph(int, int)>& make,
                                        int min_m, int min_n) {
    const int total = g.vertex_count();
    for (int m = min_m; m <= total; ++m) {
        if (total % m != 0 || total / m < min_n) continue;
        auto p = make(m, total / m);
        if (p.graph == g) return p;
    }
    return std::nullopt;
}

struct Common {
    int max_dp = 22;
    double timeout_s = 60.0;

    DpOptions dp() const {
        DpOptions o;
        o.max_vertices = max_dp;
        return o;
    }
    BnbOptions bnb() const {
        BnbOptions o;
        o.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));
        return o;
    }
};

// --- gen -----------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::vector<std::string> params;
    std::string out;
    double p = 0.5;
    std::uint64_t seed = 1;
};

int cmd_gen(const GenArgs& a) {
    const auto& p = a.params;
    Graph g;
    const auto& f = a.family;
    if (f == "path" || f == "cycle" || f == "clique" || f == "empty") {
        need_params(p, 1, f);
        const int k = to_int(p[0], "order");
        g = f == "path" ? make_path(k) : f == "cycle" ? make_cycle(k)
            : f == "clique" ? make_clique(k) : make_empty(k);
    } else if (f == "torus" || f == "km-pn" || f == "km-cn") {
        need_params(p, 2, f);
        const int m = to_int(p[0], "m");
        const int n = to_int(p[1], "n");
        g = (f == "torus" ? make_torus(m, n) : f == "km-pn" ? make_clique_path(m, n)
                                                           : make_clique_cycle(m, n)).graph;
    } else if (f == "product") {
        need_params(p, 2, f);
        g = cartesian_product(parse_edge_list(read_file(p[0])), parse_edge_list(read_file(p[1]))).graph;
    } else if (f == "random") {
        need_params(p, 1, f);
        g = make_random(to_int(p[0], "order"), a.p, a.seed);
    } else {
        throw InvalidParameter("unknown family '" + f + "'");
    }
    const auto text = serialize_edge_list(g);
    if (a.out.empty()) {
        std::cout << text << '\n';
        std::cerr << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
    } else {
        write_file(a.out, text);
        std::cout << "vertices=" << g.vertex_count() << " edges=" << g.edge_count() << '\n';
    }
    return kOk;
}

// --- solve ---------------------------------------------------------------

struct SolveArgs {
    std::string graph;
    std::string method = "dp";
    std::optional<long> upper_hint;
    std::string config_out;
    std::string seq_out;
    bool timing = false;
};

int cmd_solve(const SolveArgs& a, const Common& c) {
    const auto g = parse_edge_list(read_file(a.graph));
    SolveResult r;
    if (a.method == "dp") {
        r = brush_number_dp(g, c.dp());
    } else if (a.method == "bnb") {
        auto o = c.bnb();
        o.upper_hint = a.upper_hint;
        r = brush_number_bnb(g, o);
    } else if (a.method == "brute") {
        r = brute_force_permutations(g);
    } else {
        throw InvalidParameter("unknown method '" + a.method + "'");
    }
    const auto w0 = minimal_config_for_sequence(g, r.witness);
    std::cout << "brush_number=" << r.value << '\n'
              << "method=" << a.method << '\n'
              << "complete=" << (r.complete ? "yes" : "no") << '\n'
              << "lower_bound=" << r.lower_bound << '\n'
              << "sequence=" << join(r.witness.order()) << '\n'
              << "config=" << config_line(w0) << '\n'
              << "states=" << r.stats.states << '\n';
    if (a.timing) {
        std::cout << "elapsed_us=" << r.stats.elapsed.count() << '\n';
    }
    if (!a.config_out.empty()) write_file(a.config_out, serialize_config(w0));
    if (!a.seq_out.empty()) write_file(a.seq_out, serialize_sequence(r.witness));
    return r.complete ? kOk : kIncomplete;
}

// --- config --------------------------------------------------------------

struct ConfigArgs {
    std::string family;
    std::vector<std::string> params;
    std::string graph_out;
    std::string config_out;
    std::string seq_out;
};

int cmd_config(const ConfigArgs& a, const Common& c) {
    const auto& p = a.params;
    const auto& f = a.family;
    Graph g;
    Construction built;
    long expected = 0;
    if (f == "torus") {
        need_params(p, 2, f);
        const int m = to_int(p[0], "m"), n = to_int(p[1], "n");
        g = make_torus(m, n).graph;
        built = torus_config(m, n);
        expected = torus_brush_number(m, n);
    } else if (f == "km-pn") {
        need_params(p, 2, f);
        const int m = to_int(p[0], "m"), n = to_int(p[1], "n");
        g = make_clique_path(m, n).graph;
        built = m % 2 == 0 ? km_pn_config(m, n) : km_pn_config_odd(m, n, c.dp());
        expected = km_pn_brush_number(m, n);
    } else if (f == "clique" || f == "path" || f == "cycle") {
        need_params(p, 1, f);
        const int k = to_int(p[0], "order");
        if (f == "clique") {
            g = make_clique(k);
            built = clique_config(k);
            expected = static_cast<long>(k) * k / 4;
        } else if (f == "path") {
            g = make_path(k);
            built = path_config(k);
            expected = k > 1 ? 1 : 0;
        } else {
            g = make_cycle(k);
            built = cycle_config(k);
            expected = 2;
        }
    } else {
        throw InvalidParameter("unknown family '" + f + "'");
    }

    std::cout << "family=" << f << '\n' << "total=" << built.config.total() << '\n'
              << "expected=" << expected << '\n';
    try {
        simulate(g, built.config, built.sequence);
    } catch (const InfeasibleStep& e) {
        std::cout << "verified=no\n";
        std::cerr << "refusing to print an unverified configuration: " << e.what() << '\n';
        return kVerifyFailed;
    }
    if (built.config.total() != expected) {
        std::cout << "verified=no\n";
        std::cerr << "configuration total differs from the closed-form value\n";
        return kVerifyFailed;
    }
    std::cout << "verified=yes\n"
              << "source=" << (built.from_solver ? "solver" : "closed-form") << '\n'
              << "config=" << config_line(built.config) << '\n'
              << "sequence=" << join(built.sequence.order()) << '\n';
    if (!a.graph_out.empty()) write_file(a.graph_out, serialize_edge_list(g));
    if (!a.config_out.empty()) write_file(a.config_out, serialize_config(built.config));
    if (!a.seq_out.empty()) write_file(a.seq_out, serialize_sequence(built.sequence));
    return kOk;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
    std::string graph;
    std::string config;
    std::string seq;
};

int cmd_verify(const VerifyArgs& a) {
    const auto g = parse_edge_list(read_file(a.graph));
    const auto w0 = parse_config(read_file(a.config));
    if (w0.vertex_count() != g.vertex_count()) {
        throw InvalidInput("config has " + std::to_string(w0.vertex_count()) +
                           " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    std::cout << "total=" << w0.total() << '\n';
    if (!a.seq.empty()) {
        const auto seq = parse_sequence(read_file(a.seq));
        if (seq.vertex_count() != g.vertex_count()) {
            throw InvalidInput("sequence has " + std::to_string(seq.vertex_count()) +
                               " vertices, graph has " + std::to_string(g.vertex_count()));
        }
        try {
            const auto trace = simulate(g, w0, seq);
            for (std::size_t k = 0; k < trace.steps.size(); ++k) {
                const auto& s = trace.steps[k];
                std::cout << "step=" << k << " vertex=" << s.vertex << " brushes=" << s.brushes_before
                          << " sent_to=" << (s.cleaned_to.empty() ? "-" : join(s.cleaned_to, ','))
                          << " left=" << s.brushes_left << '\n';
            }
            std::cout << "feasible=yes\n";
            return kOk;
        } catch (const InfeasibleStep& e) {
            std::cout << "feasible=no\n"
                      << "failed_step=" << e.step() << " vertex=" << e.vertex()
                      << " have=" << e.have() << " need=" << e.need() << '\n';
            return kInfeasible;
        }
    }
    const auto r = can_clean(g, w0);
    if (r.cleanable) {
        std::cout << "cleanable=yes\n" << "sequence=" << join(r.sequence.order()) << '\n';
        return kOk;
    }
    std::cout << "cleanable=no\n" << "blocking=" << join(r.blocking) << '\n';
    return kInfeasible;
}

// --- reduce --------------------------------------------------------------

struct ReduceArgs {
    std::string kind;
    std::string graph;
    std::string config;
    std::string seq;
    std::optional<int> line;
    std::string axis = "rows";
    std::string mode = "auto";
    std::string out_prefix;
};

void write_outputs(const std::string& prefix, const Graph& g, const BrushConfig& w0,
                   const CleaningSequence& seq) {
    if (prefix.empty()) return;
    write_file(prefix + ".graph", serialize_edge_list(g));
    write_file(prefix + ".config", serialize_config(w0));
    write_file(prefix + ".seq", serialize_sequence(seq));
}

std::pair<BrushConfig, CleaningSequence> load_cleaning(const ReduceArgs& a, const Graph& g) {
    auto w0 = parse_config(read_file(a.config));
    auto seq = parse_sequence(read_file(a.seq));
    if (w0.vertex_count() != g.vertex_count() || seq.vertex_count() != g.vertex_count()) {
        throw InvalidInput("config or sequence size does not match the graph");
    }
    return {std::move(w0), std::move(seq)};
}

std::string shape(char a, int m, char b, int n) {
    return std::string(1, a) + std::to_string(m) + "x" + b + std::to_string(n);
}

int reduce_torus_rows(const ReduceArgs& a, const Common& c) {
    const auto g = parse_edge_list(read_file(a.graph));
    const auto torus = infer_shape(g, make_torus, 3, 3);
    if (!torus) {
        throw InvalidInput("graph is not a labelled C_m x C_n");
    }
    const auto [m, n] = torus->labeling;
    std::cout << "input=" << shape('C', m, 'C', n) << '\n';

    if (a.line) {
        // Plain merge without the saving step.
        if (a.config.empty() || a.seq.empty()) {
            throw InvalidInput("--line needs --config and --seq");
        }
        const auto [w0, seq] = load_cleaning(a, g);
        if (a.axis != "rows" && a.axis != "columns") {
            throw InvalidParameter("axis must be rows or columns");
        }
        const auto merged = combine_torus(*torus, w0, seq, a.axis == "rows" ? Axis::Rows : Axis::Columns, *a.line);
        const auto [rm, rn] = merged.torus.labeling;
        std::cout << "reduced=" << shape('C', rm, 'C', rn) << '\n'
                  << "total_before=" << w0.total() << '\n'
                  << "total_after=" << merged.config.total() << '\n'
                  << "savings=" << w0.total() - merged.config.total() << '\n'
                  << "config=" << config_line(merged.config) << '\n'
                  << "sequence=" << join(merged.sequence.order()) << '\n';
        write_outputs(a.out_prefix, merged.torus.graph, merged.config, merged.sequence);
        return kOk;
    }

    TorusReduction red;
    if (a.config.empty() && a.seq.empty()) {
        auto opt = reduce_optimal_torus(*torus, 256, c.dp());
        std::cout << "source=dp\n" << "witnesses_tried=" << opt.witnesses_tried << '\n';
        red = std::move(opt.reduction);
    } else {
        if (a.config.empty() || a.seq.empty()) {
            throw InvalidInput("give both --config and --seq, or neither");
        }
        const auto [w0, seq] = load_cleaning(a, g);
        std::cout << "source=input\n";
        red = reduce_torus(*torus, w0, seq);
    }
    const auto [rm, rn] = red.merged.torus.labeling;
    const long target = torus_brush_number(rm, rn);
    std::cout << "axis=" << to_string(red.rows.axis) << '\n'
              << "lines=" << red.rows.first << ',' << red.rows.second << '\n'
              << "pivot=" << red.rows.pivot << '\n'
              << "trimmed=" << red.trimmed << '\n'
              << "reduced=" << shape('C', rm, 'C', rn) << '\n'
              << "total_before=" << red.total_before << '\n'
              << "total_after=" << red.total_after << '\n'
              << "savings=" << red.total_before - red.total_after << '\n'
              << "reduced_closed_form=" << target << '\n'
              << "config=" << config_line(red.merged.config) << '\n'
              << "sequence=" << join(red.merged.sequence.order()) << '\n';
    write_outputs(a.out_prefix, red.merged.torus.graph, red.merged.config, red.merged.sequence);
    return kOk;
}

int reduce_clique_layer(const ReduceArgs& a, const Common& c) {
    const auto g = parse_edge_list(read_file(a.graph));
    const auto kp = infer_shape(g, make_clique_path, 2, 2);
    if (!kp) {
        throw InvalidInput("graph is not a labelled K_m x P_n");
    }
    const auto [m, n] = kp->labeling;
    BrushConfig w0;
    CleaningSequence seq;
    if (a.config.empty() && a.seq.empty()) {
        const auto r = brush_number_dp(g, c.dp());
        seq = r.witness;
        w0 = minimal_config_for_sequence(g, seq);
        std::cout << "source=dp\n";
    } else if (a.config.empty() || a.seq.empty()) {
        throw InvalidInput("give both --config and --seq, or neither");
    } else {
        std::tie(w0, seq) = load_cleaning(a, g);
        std::cout << "source=input\n";
    }
    LayerMode mode = LayerMode::Auto;
    if (a.mode == "inductive") mode = LayerMode::Inductive;
    else if (a.mode == "base") mode = LayerMode::Base;
    else if (a.mode != "auto") throw InvalidParameter("mode must be auto, inductive or base");

    const auto d = delete_clique_layer(*kp, w0, seq, mode);
    const auto& k = d.classes.counts;
    std::string classes;
    for (auto cls : d.classes.pair_class) classes += to_char(cls);
    std::cout << "input=" << shape('K', m, 'P', n) << '\n'
              << "reduced=" << shape('K', m, 'P', n - 1) << '\n'
              << "classes=" << classes << '\n'
              << "counts=A:" << k.a << " B:" << k.b << " C:" << k.c << " D:" << k.d
              << " E:" << k.e << " F:" << k.f << " G:" << k.g << " H:" << k.h << '\n'
              << "extra_middle_brush=" << (d.extra_middle_brush ? "yes" : "no") << '\n'
              << "total_before=" << d.input_total << '\n'
              << "total_after=" << d.output_total << '\n'
              << "savings=" << d.input_total - d.output_total << '\n';
    if (d.class_bound) std::cout << "class_bound=" << *d.class_bound << '\n';
    for (const auto& diag : d.classes.diagnostics) std::cout << "diagnostic=" << diag << '\n';
    std::cout << "cleans=" << (d.cleans ? "yes" : "no") << '\n'
              << "config=" << config_line(d.config) << '\n'
              << "sequence=" << join(d.sequence.order()) << '\n';
    if (!d.cleans) {
        return kVerifyFailed;
    }
    write_outputs(a.out_prefix, d.reduced.graph, d.config, d.sequence);
    return kOk;
}

// --- report --------------------------------------------------------------

struct ReportArgs {
    std::string suite;
    std::string m;
    std::string n;
    std::string h = "P2";
    int jobs = 1;
    bool timing = false;
    bool connected_only = false;
    bool no_bnb = false;
};

int cmd_report(const ReportArgs& a, const Common& c) {
    ReportOptions opts;
    opts.dp = c.dp();
    opts.bnb = c.bnb();
    opts.jobs = a.jobs;
    opts.bnb_over_cap = !a.no_bnb;
    opts.box_filter = a.connected_only ? BoxFilter::ConnectedOnly : BoxFilter::AllGraphs;

    if (a.suite == "km-cn") {
        const auto ms = parse_range(a.m.empty() ? "3" : a.m);
        const auto ns = parse_range(a.n.empty() ? "3,4" : a.n);
        std::vector<std::pair<int, int>> inst;
        for (int m : ms) for (int n : ns) inst.emplace_back(m, n);
        if (a.m.empty() && a.n.empty()) inst.emplace_back(4, 3);
        const auto r = report_clique_cycle(inst, opts.dp);
        std::cout << r.to_text() << r.to_machine();
        return kOk;
    }

    RunReport r;
    if (a.suite == "torus") {
        const auto ms = parse_range(a.m.empty() ? "3..4" : a.m);
        const auto ns = parse_range(a.n.empty() ? "3..5" : a.n);
        r = report_torus(ms.front(), ms.back(), ns.front(), ns.back(), opts);
    } else if (a.suite == "km-pn") {
        r = report_km_pn(parse_range(a.m.empty() ? "2,3,4" : a.m),
                         parse_range(a.n.empty() ? "2,3" : a.n), opts);
    } else if (a.suite == "box") {
        std::vector<std::pair<std::string, Graph>> hs;
        std::stringstream ss(a.h);
        for (std::string name; std::getline(ss, name, ',');) {
            hs.emplace_back(name, named_graph(name));
        }
        const auto ms = parse_range(a.m.empty() ? "3" : a.m);
        if (ms.size() != 1) {
            throw InvalidParameter("box takes a single m");
        }
        r = report_box(ms.front(), hs, opts);
    } else {
        throw InvalidParameter("unknown suite '" + a.suite + "'");
    }
    std::cout << r.to_text() << r.to_machine(a.timing);
    return r.any_mismatch() ? kInfeasible : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"brushctl: brush numbers, constructions and reductions"};
    app.require_subcommand(1);
    Common common;
    std::function<int()> run;

    auto add_caps = [&](CLI::App* sub) {
        sub->add_option("--max-dp-vertices", common.max_dp, "DP vertex cap")->capture_default_str();
        sub->add_option("--timeout", common.timeout_s, "branch-and-bound budget in seconds")
            ->capture_default_str();
    };

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "write a graph as an edge list");
    g->add_option("family", gen.family, "path|cycle|clique|empty|torus|km-pn|km-cn|product|random")
        ->required();
    g->add_option("params", gen.params, "family parameters (files for product)");
    g->add_option("-o,--out", gen.out, "output file (stdout if omitted)");
    g->add_option("--p", gen.p, "edge probability for random")->capture_default_str();
    g->add_option("--seed", gen.seed, "seed for random")->capture_default_str();
    g->callback([&] { run = [&] { return cmd_gen(gen); }; });

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "compute the brush number of a graph file");
    s->add_option("graph", solve.graph)->required();
    s->add_option("--method", solve.method, "dp|bnb|brute")->capture_default_str();
    s->add_option("--upper-hint", solve.upper_hint, "initial upper bound for bnb");
    s->add_option("--config-out", solve.config_out);
    s->add_option("--seq-out", solve.seq_out);
    s->add_flag("--timing", solve.timing, "print elapsed time");
    add_caps(s);
    s->callback([&] { run = [&] { return cmd_solve(solve, common); }; });

    ConfigArgs cfg;
    auto* c = app.add_subcommand("config", "print a closed-form configuration after verifying it");
    c->add_option("family", cfg.family, "torus|km-pn|clique|path|cycle")->required();
    c->add_option("params", cfg.params);
    c->add_option("--graph-out", cfg.graph_out);
    c->add_option("--config-out", cfg.config_out);
    c->add_option("--seq-out", cfg.seq_out);
    add_caps(c);
    c->callback([&] { run = [&] { return cmd_config(cfg, common); }; });

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "check that a configuration cleans a graph");
    v->add_option("graph", ver.graph)->required();
    v->add_option("config", ver.config)->required();
    v->add_option("--seq", ver.seq, "sequence file; greedy search if omitted");
    v->callback([&] { run = [&] { return cmd_verify(ver); }; });

    ReduceArgs red;
    auto* r = app.add_subcommand("reduce", "run a reduction step on a cleaning");
    r->add_option("kind", red.kind, "torus-rows|clique-layer")->required();
    r->add_option("--graph", red.graph)->required();
    r->add_option("--config", red.config, "defaults to a DP-optimal cleaning");
    r->add_option("--seq", red.seq);
    r->add_option("--line", red.line, "torus-rows: merge this line with the next, no saving");
    r->add_option("--axis", red.axis, "rows|columns, with --line")->capture_default_str();
    r->add_option("--mode", red.mode, "clique-layer: auto|inductive|base")->capture_default_str();
    r->add_option("--out-prefix", red.out_prefix, "write <prefix>.graph/.config/.seq");
    add_caps(r);
    r->callback([&] {
        run = [&] {
            if (red.kind == "torus-rows") return reduce_torus_rows(red, common);
            if (red.kind == "clique-layer") return reduce_clique_layer(red, common);
            throw InvalidParameter("unknown reduction '" + red.kind + "'");
        };
    });

    ReportArgs rep;
    auto* p = app.add_subcommand("report", "compare closed forms against exact values");
    p->add_option("suite", rep.suite, "torus|km-pn|box|km-cn")->required();
    p->add_option("--m", rep.m, "m values: 4, 3..6 or 2,3,4");
    p->add_option("--n", rep.n, "n values, same syntax");
    p->add_option("--factor", rep.h, "box: comma-separated names of H (P2,P3,C3,K2,...)")->capture_default_str();
    p->add_option("--jobs", rep.jobs)->capture_default_str();
    p->add_flag("--timing", rep.timing);
    p->add_flag("--connected-only", rep.connected_only, "box: only connected G");
    p->add_flag("--no-bnb", rep.no_bnb, "skip rows above the DP cap instead of branch-and-bound");
    add_caps(p);
    p->callback([&] { run = [&] { return cmd_report(rep, common); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        return run();
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kOverCap;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kOverCap;
    } catch (const InternalError& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const InvalidClassification& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const InfeasibleStep& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kInfeasible;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBadInput;
    }
}
