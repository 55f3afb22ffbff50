#include "brush/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "brush/error.hpp"

namespace brush {

namespace {

CleaningSequence identity_order(int n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    return CleaningSequence(n, std::move(order));
}

void require_valid_cleaning(const Graph& g, const BrushConfig& w0, const CleaningSequence& seq) {
    try {
        simulate(g, w0, seq);
    } catch (const InfeasibleStep& e) {
        throw InvalidInput(std::string("input cleaning is infeasible: ") + e.what());
    } catch (const InvalidSequence& e) {
        throw InvalidInput(std::string("input sequence is invalid: ") + e.what());
    }
}

bool cleans_with(const Graph& g, const BrushConfig& w0, const CleaningSequence& seq) {
    try {
        simulate(g, w0, seq);
        return true;
    } catch (const InfeasibleStep&) {
        return false;
    }
}

void require_torus(const ProductGraph& torus) {
    const auto [m, n] = torus.labeling;
    if (m < 3 || n < 3 || torus.graph != make_torus(m, n).graph) {
        throw InvalidInput("graph is not the torus C_" + std::to_string(m) + " x C_" +
                           std::to_string(n));
    }
}

void require_clique_path(const ProductGraph& km_pn) {
    const auto [m, n] = km_pn.labeling;
    if (m < 1 || n < 2 || km_pn.graph != make_clique_path(m, n).graph) {
        throw InvalidInput("graph is not K_" + std::to_string(m) + " x P_" + std::to_string(n));
    }
}

// Column formulas shared by the even and odd clique-path constructions.
Construction clique_path_columns(int m, int n) {
    const ProductLabeling lab{m, n};
    BrushConfig w0(m * n);
    std::vector<Vertex> order;
    order.reserve(m * n);
    for (int j = 0; j < n; ++j) {
        const int top = j == 0 ? m : (j == n - 1 ? m - 2 : m - 1);
        for (int i = 0; i < m; ++i) {
            w0.set(lab.flat(i, j), std::max(top - 2 * i, 0));
            order.push_back(lab.flat(i, j));
        }
    }
    return {std::move(w0), CleaningSequence(m * n, std::move(order)), false};
}

}  // namespace

Construction torus_config(int m, int n) {
    if (m < 3 || n < 3) {
        throw InvalidParameter("torus needs m, n >= 3");
    }
    const ProductLabeling lab{m, n};
    BrushConfig w0(m * n);
    w0.set(lab.flat(0, 0), 4);
    for (int j = 1; j <= n - 2; ++j) {
        w0.set(lab.flat(0, j), 2);
    }
    for (int i = 1; i <= m - 2; ++i) {
        w0.set(lab.flat(i, 0), 2);
    }
    return {std::move(w0), identity_order(m * n), false};
}

long torus_brush_number(int m, int n) {
    if (m < 3 || n < 3) {
        throw InvalidParameter("torus needs m, n >= 3");
    }
    return 2L * (m + n - 2);
}

Construction km_pn_config(int m, int n) {
    if (m < 2 || n < 2) {
        throw InvalidParameter("K_m x P_n construction needs m, n >= 2");
    }
    if (m % 2 != 0) {
        throw InvalidParameter("m is odd; use km_pn_config_odd");
    }
    return clique_path_columns(m, n);
}

Construction km_pn_config_odd(int m, int n, const DpOptions& opts) {
    if (m < 3 || n < 2 || m % 2 == 0) {
        throw InvalidParameter("odd construction needs odd m >= 3 and n >= 2");
    }
    auto built = clique_path_columns(m, n);
    const auto graph = make_clique_path(m, n).graph;
    if (built.config.total() == km_pn_brush_number(m, n) &&
        can_clean(graph, built.config).cleanable && cleans_with(graph, built.config, built.sequence)) {
        return built;
    }
    if (m * n > opts.max_vertices) {
        throw InternalError("odd-m column formulas failed validation for K_" + std::to_string(m) +
                            " x P_" + std::to_string(n) + " and the instance is above the DP cap");
    }
    auto solved = brush_number_dp(graph, opts);
    return {minimal_config_for_sequence(graph, solved.witness), solved.witness, true};
}

long km_pn_brush_number(int m, int n) {
    if (m < 2 || n < 2) {
        throw InvalidParameter("K_m x P_n value needs m, n >= 2");
    }
    const long quarter = static_cast<long>(m) * m / 4;
    return m % 2 == 0 ? n * quarter : n * quarter + 1;
}

Construction clique_config(int m) {
    if (m < 1) {
        throw InvalidParameter("clique needs at least 1 vertex");
    }
    BrushConfig w0(m);
    for (int i = 0; i < m; ++i) {
        w0.set(i, std::max(0, m - 1 - 2 * i));
    }
    return {std::move(w0), identity_order(m), false};
}

Construction path_config(int k) {
    if (k < 1) {
        throw InvalidParameter("path needs at least 1 vertex");
    }
    BrushConfig w0(k);
    if (k > 1) {
        w0.set(0, 1);
    }
    return {std::move(w0), identity_order(k), false};
}

Construction cycle_config(int k) {
    if (k < 3) {
        throw InvalidParameter("cycle needs at least 3 vertices");
    }
    BrushConfig w0(k);
    w0.set(0, 2);
    return {std::move(w0), identity_order(k), false};
}

std::string to_string(Axis axis) {
    return axis == Axis::Rows ? "rows" : "columns";
}

CombinedTorus combine_torus(const ProductGraph& torus, const BrushConfig& w0,
                            const CleaningSequence& seq, Axis axis, int index) {
    require_torus(torus);
    const auto [m, n] = torus.labeling;
    const int lines = axis == Axis::Rows ? m : n;
    if (lines <= 3) {
        throw InvalidParameter("cannot merge " + to_string(axis) + " of a torus with only " +
                               std::to_string(lines) + " of them");
    }
    if (index < 0 || index >= lines) {
        throw InvalidParameter("line index " + std::to_string(index) + " out of range");
    }
    require_valid_cleaning(torus.graph, w0, seq);

    const int removed = (index + 1) % lines;
    const int kept = index < removed ? index : index - 1;
    auto remap = [&](int line) {
        if (line == removed) {
            return kept;
        }
        return line < removed ? line : line - 1;
    };

    CombinedTorus out;
    out.torus = axis == Axis::Rows ? make_torus(m - 1, n) : make_torus(m, n - 1);
    const ProductLabeling& lab = out.torus.labeling;
    out.vertex_map.resize(m * n);
    for (Vertex v = 0; v < m * n; ++v) {
        const int i = torus.labeling.row(v);
        const int j = torus.labeling.col(v);
        out.vertex_map[v] = axis == Axis::Rows ? lab.flat(remap(i), j) : lab.flat(i, remap(j));
    }

    out.config = BrushConfig(lab.m * lab.n);
    for (Vertex v = 0; v < m * n; ++v) {
        out.config.add(out.vertex_map[v], w0[v]);
    }

    std::vector<char> seen(lab.m * lab.n, 0);
    std::vector<Vertex> order;
    for (Vertex v : seq.order()) {
        const Vertex image = out.vertex_map[v];
        if (!seen[image]) {
            seen[image] = 1;
            order.push_back(image);
        }
    }
    out.sequence = CleaningSequence(lab.m * lab.n, std::move(order));
    return out;
}

CombinedTorus combine_torus_rows(const ProductGraph& torus, const BrushConfig& w0,
                                 const CleaningSequence& seq, int row) {
    return combine_torus(torus, w0, seq, Axis::Rows, row);
}

CorrectRows find_correct_rows(const ProductGraph& torus, const BrushConfig& w0,
                              const CleaningSequence& seq) {
    require_torus(torus);
    require_valid_cleaning(torus.graph, w0, seq);
    const auto [m, n] = torus.labeling;
    if (w0.total() != torus_brush_number(m, n)) {
        throw PreconditionViolation("cleaning uses " + std::to_string(w0.total()) +
                                    " brushes, optimal is " +
                                    std::to_string(torus_brush_number(m, n)));
    }

    const auto pos = seq.positions();
    auto pivot = std::find_if(seq.order().begin(), seq.order().end(),
                              [&](Vertex v) { return w0[v] < 4; });
    if (pivot == seq.order().end()) {
        throw InternalError("every vertex starts with at least 4 brushes in an optimal cleaning");
    }
    const Vertex p = *pivot;

    std::vector<Vertex> earlier;
    for (Vertex u : torus.graph.neighbors(p)) {
        if (pos[u] < pos[p]) {
            earlier.push_back(u);
        }
    }
    std::sort(earlier.begin(), earlier.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    if (earlier.empty()) {
        throw InternalError("pivot vertex " + std::to_string(p) + " has no earlier neighbor");
    }

    const auto& lab = torus.labeling;
    for (Vertex q : earlier) {
        const bool same_column = lab.col(q) == lab.col(p);
        const Axis axis = same_column ? Axis::Rows : Axis::Columns;
        const int lines = same_column ? m : n;
        if (lines <= 3) {
            continue;
        }
        const int lp = same_column ? lab.row(p) : lab.col(p);
        const int lq = same_column ? lab.row(q) : lab.col(q);
        CorrectRows out;
        out.axis = axis;
        out.first = (lp + 1) % lines == lq ? lp : lq;
        out.second = (out.first + 1) % lines;
        out.pivot = p;
        out.pivot_brushes = w0[p];
        out.earlier_neighbor = q;
        return out;
    }
    throw PreconditionViolation("every earlier neighbor of pivot " + std::to_string(p) +
                                " lies along an axis of length 3");
}

TorusReduction reduce_torus(const ProductGraph& torus, const BrushConfig& w0,
                            const CleaningSequence& seq) {
    TorusReduction out;
    out.rows = find_correct_rows(torus, w0, seq);
    out.merged = combine_torus(torus, w0, seq, out.rows.axis, out.rows.first);
    out.total_before = w0.total();

    const auto& map = out.merged.vertex_map;
    const Vertex x = map[out.rows.pivot];
    if (out.merged.config[x] >= 6) {
        out.trimmed = x;
    } else {
        // Pivot started empty: a second earlier neighbor gives two adjacent
        // vertices holding 4, and the later of the two only needs 2.
        const auto pos = seq.positions();
        const auto merged_pos = out.merged.sequence.positions();
        std::optional<Vertex> partner;
        for (Vertex u : torus.graph.neighbors(out.rows.pivot)) {
            if (u == out.rows.earlier_neighbor || pos[u] > pos[out.rows.pivot]) {
                continue;
            }
            const Vertex y = map[u];
            if (y != x && out.merged.torus.graph.has_edge(x, y) &&
                (!partner || pos[u] < pos[*partner])) {
                partner = u;
            }
        }
        if (!partner) {
            throw InternalError("no saving available around pivot " +
                                std::to_string(out.rows.pivot));
        }
        const Vertex y = map[*partner];
        out.trimmed = merged_pos[x] > merged_pos[y] ? x : y;
    }
    if (out.merged.config[out.trimmed] < 2) {
        throw InternalError("vertex chosen for saving holds fewer than 2 brushes");
    }
    out.merged.config.add(out.trimmed, -2);
    out.total_after = out.merged.config.total();
    if (!cleans_with(out.merged.torus.graph, out.merged.config, out.merged.sequence)) {
        throw InternalError("reduced configuration does not clean C_" +
                            std::to_string(out.merged.torus.labeling.m) + " x C_" +
                            std::to_string(out.merged.torus.labeling.n));
    }
    return out;
}

OptimalTorusReduction reduce_optimal_torus(const ProductGraph& torus, std::size_t max_witnesses,
                                           const DpOptions& opts) {
    require_torus(torus);
    if (torus.labeling.m < 4 && torus.labeling.n < 4) {
        throw InvalidParameter("C_3 x C_3 has no axis with 4 or more lines to merge");
    }
    const auto sequences = optimal_sequences(torus.graph, max_witnesses, opts);
    std::string last_reason = "no optimal cleaning found";
    for (std::size_t k = 0; k < sequences.size(); ++k) {
        auto w0 = minimal_config_for_sequence(torus.graph, sequences[k]);
        try {
            auto reduction = reduce_torus(torus, w0, sequences[k]);
            return {std::move(w0), sequences[k], k + 1, std::move(reduction)};
        } catch (const PreconditionViolation& e) {
            last_reason = e.what();
        }
    }
    throw PreconditionViolation("none of " + std::to_string(sequences.size()) +
                                " optimal cleanings can be reduced: " + last_reason);
}

char to_char(PairClass c) {
    return static_cast<char>('A' + static_cast<int>(c));
}

PairClass classify_pair(bool u_has_brushes, bool u_first, bool v_has_brushes) {
    const int index = (u_has_brushes ? 0 : 4) + (u_first ? 0 : 2) + (v_has_brushes ? 0 : 1);
    return static_cast<PairClass>(index);
}

int& BoundaryClassCounts::operator[](PairClass k) {
    switch (k) {
        case PairClass::A: return a;
        case PairClass::B: return b;
        case PairClass::C: return c;
        case PairClass::D: return d;
        case PairClass::E: return e;
        case PairClass::F: return f;
        case PairClass::G: return g;
        case PairClass::H: return h;
    }
    return h;
}

int BoundaryClassCounts::operator[](PairClass k) const {
    return const_cast<BoundaryClassCounts&>(*this)[k];
}

BoundaryClassification classify_boundary_pairs(const ProductGraph& km_pn, const BrushConfig& w0,
                                               const CleaningSequence& seq) {
    require_clique_path(km_pn);
    require_valid_cleaning(km_pn.graph, w0, seq);
    const auto& lab = km_pn.labeling;
    const int m = lab.m;
    const auto pos = seq.positions();

    BoundaryClassification out;
    out.pair_class.resize(m);
    for (int i = 0; i < m; ++i) {
        const Vertex u = lab.flat(i, 0);
        const Vertex v = lab.flat(i, 1);
        out.pair_class[i] = classify_pair(w0[u] > 0, pos[u] < pos[v], w0[v] > 0);
        ++out.counts[out.pair_class[i]];
    }

    auto ranks = [&](int column) {
        std::vector<int> idx(m);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return pos[lab.flat(a, column)] < pos[lab.flat(b, column)];
        });
        std::vector<int> rank(m);
        for (int r = 0; r < m; ++r) {
            rank[idx[r]] = r + 1;
        }
        return rank;
    };
    out.rank_first = ranks(0);
    out.rank_second = ranks(1);

    if (m % 2 != 0) {
        return out;
    }
    const int half = m / 2;
    const int second_cap = lab.n == 2 ? half : half + 1;
    auto note = [&](const std::string& s) { out.diagnostics.push_back(s); };
    for (int i = 0; i < m; ++i) {
        const int ru = out.rank_first[i];
        const int wu = w0[lab.flat(i, 0)];
        if (wu > 0 && ru > half) {
            note("u_" + std::to_string(ru) + " has brushes but is cleaned after rank " +
                 std::to_string(half));
        }
        if (wu == 0 && ru < half) {
            note("u_" + std::to_string(ru) + " is empty but cleaned before rank " +
                 std::to_string(half));
        }
        if (wu > 0) {
            const auto cls = out.pair_class[i];
            const int expect = (cls == PairClass::A || cls == PairClass::B) ? m - 2 * ru + 2
                                                                           : m - 2 * ru;
            if (wu != expect) {
                note("u_" + std::to_string(ru) + " holds " + std::to_string(wu) +
                     " brushes, expected " + std::to_string(expect));
            }
        }
        const int rv = out.rank_second[i];
        const int wv = w0[lab.flat(i, 1)];
        if (wv > 0 && rv > second_cap) {
            note("v_" + std::to_string(rv) + " has brushes but is cleaned after rank " +
                 std::to_string(second_cap));
        }
        if (wv == 0 && rv < half) {
            note("v_" + std::to_string(rv) + " is empty but cleaned before rank " +
                 std::to_string(half));
        }
    }
    return out;
}

LayerDeletion delete_clique_layer(const ProductGraph& km_pn, const BrushConfig& w0,
                                  const CleaningSequence& seq, LayerMode mode) {
    LayerDeletion out;
    out.classes = classify_boundary_pairs(km_pn, w0, seq);
    const auto& lab = km_pn.labeling;
    const int m = lab.m;
    const int n = lab.n;

    if (mode == LayerMode::Auto) {
        mode = n == 2 ? LayerMode::Base : LayerMode::Inductive;
    }
    if (mode == LayerMode::Inductive && n < 3) {
        throw InvalidParameter("inductive layer deletion needs n >= 3");
    }
    if (mode == LayerMode::Base && (n != 2 || m % 2 != 0)) {
        throw InvalidParameter("base layer deletion needs n == 2 and even m");
    }

    out.reduced = make_clique_path(m, n - 1);
    const auto& small = out.reduced.labeling;
    out.config = BrushConfig(m * (n - 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 1; j < n; ++j) {
            out.config.set(small.flat(i, j - 1), w0[lab.flat(i, j)]);
        }
    }
    for (int i = 0; i < m; ++i) {
        const Vertex v = small.flat(i, 0);
        switch (out.classes.pair_class[i]) {
            case PairClass::A:
            case PairClass::E:
                out.config.add(v, 1);
                break;
            case PairClass::C:
            case PairClass::G:
                if (out.config[v] == 0) {
                    throw InvalidClassification("pair " + std::to_string(i) +
                                                " would drop below zero brushes");
                }
                out.config.add(v, -1);
                break;
            default:
                break;
        }
    }
    if (mode == LayerMode::Base) {
        const auto middle = std::find(out.classes.rank_second.begin(),
                                      out.classes.rank_second.end(), m / 2);
        const int i = static_cast<int>(middle - out.classes.rank_second.begin());
        if (w0[lab.flat(i, 1)] == 0) {
            out.config.add(small.flat(i, 0), 1);
            out.extra_middle_brush = true;
        }
    }

    std::vector<Vertex> order;
    for (Vertex v : seq.order()) {
        if (lab.col(v) > 0) {
            order.push_back(small.flat(lab.row(v), lab.col(v) - 1));
        }
    }
    out.sequence = CleaningSequence(m * (n - 1), std::move(order));

    out.input_total = w0.total();
    out.output_total = out.config.total();
    if (m % 2 == 0) {
        const auto& k = out.classes.counts;
        out.class_bound = out.input_total - (static_cast<long>(m) * m - 2L * m) / 4 - k.a -
                          2L * k.b + k.e - k.c - k.g + (out.extra_middle_brush ? 1 : 0);
    }
    if (cleans_with(out.reduced.graph, out.config, out.sequence)) {
        out.cleans = true;
    } else {
        auto greedy = can_clean(out.reduced.graph, out.config);
        out.cleans = greedy.cleanable;
        if (greedy.cleanable) {
            out.sequence = greedy.sequence;
        }
    }
    return out;
}

}  // namespace brush
