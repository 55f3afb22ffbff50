#include "brush/cleaning.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "brush/error.hpp"

namespace brush {

namespace {

void require_complete(const Graph& g, const CleaningSequence& seq) {
    if (seq.vertex_count() != g.vertex_count()) {
        throw InvalidSequence("sequence is for " + std::to_string(seq.vertex_count()) +
                              " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    if (!seq.is_complete()) {
        throw InvalidSequence("sequence covers " + std::to_string(seq.size()) + " of " +
                              std::to_string(g.vertex_count()) + " vertices");
    }
}

}  // namespace

BrushConfig::BrushConfig(std::vector<int> counts) : counts_(std::move(counts)) {
    for (std::size_t v = 0; v < counts_.size(); ++v) {
        if (counts_[v] < 0) {
            throw InvalidParameter("negative brush count at vertex " + std::to_string(v));
        }
    }
}

void BrushConfig::set(Vertex v, int count) {
    if (count < 0) {
        throw InvalidParameter("negative brush count at vertex " + std::to_string(v));
    }
    counts_[v] = count;
}

long BrushConfig::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0L);
}

CleaningSequence::CleaningSequence(int vertex_count, std::vector<Vertex> order)
    : vertex_count_(vertex_count), order_(std::move(order)) {
    std::vector<char> seen(std::max(vertex_count, 0), 0);
    for (Vertex v : order_) {
        if (v < 0 || v >= vertex_count) {
            throw InvalidSequence("vertex " + std::to_string(v) + " out of range");
        }
        if (seen[v]) {
            throw InvalidSequence("vertex " + std::to_string(v) + " repeated");
        }
        seen[v] = 1;
    }
}

std::vector<int> CleaningSequence::positions() const {
    std::vector<int> pos(vertex_count_, -1);
    for (std::size_t i = 0; i < order_.size(); ++i) {
        pos[order_[i]] = static_cast<int>(i);
    }
    return pos;
}

Orientation orientation_from_sequence(const Graph& g, const CleaningSequence& seq) {
    require_complete(g, seq);
    const auto pos = seq.positions();
    Orientation o{g.vertex_count(), {}};
    o.arcs.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        if (pos[u] < pos[v]) {
            o.arcs.emplace_back(u, v);
        } else {
            o.arcs.emplace_back(v, u);
        }
    }
    return o;
}

long brush_cost(const Graph& g, const Orientation& o) {
    if (o.vertex_count != g.vertex_count() ||
        static_cast<int>(o.arcs.size()) != g.edge_count()) {
        throw InvalidOrientation("orientation does not match graph size");
    }
    std::set<Edge> seen;
    std::vector<int> surplus(g.vertex_count(), 0);
    for (auto [from, to] : o.arcs) {
        if (!g.has_edge(from, to)) {
            throw InvalidOrientation("arc " + std::to_string(from) + "->" + std::to_string(to) +
                                     " is not an edge");
        }
        if (!seen.emplace(std::min(from, to), std::max(from, to)).second) {
            throw InvalidOrientation("edge " + std::to_string(from) + " " + std::to_string(to) +
                                     " oriented twice");
        }
        ++surplus[from];
        --surplus[to];
    }
    long cost = 0;
    for (int s : surplus) {
        cost += std::max(0, s);
    }
    return cost;
}

BrushConfig minimal_config_for_sequence(const Graph& g, const CleaningSequence& seq) {
    require_complete(g, seq);
    const auto pos = seq.positions();
    BrushConfig w0(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int balance = 0;
        for (Vertex u : g.neighbors(v)) {
            balance += pos[u] > pos[v] ? 1 : -1;
        }
        w0.set(v, std::max(0, balance));
    }
    return w0;
}

CleaningTrace simulate(const Graph& g, const BrushConfig& w0, const CleaningSequence& seq) {
    if (w0.vertex_count() != g.vertex_count()) {
        throw InvalidInput("config has " + std::to_string(w0.vertex_count()) +
                           " entries, graph has " + std::to_string(g.vertex_count()) +
                           " vertices");
    }
    require_complete(g, seq);

    std::vector<int> brushes(w0.counts().begin(), w0.counts().end());
    std::vector<char> cleaned(g.vertex_count(), 0);
    CleaningTrace trace;
    trace.steps.reserve(seq.size());

    for (std::size_t step = 0; step < seq.size(); ++step) {
        const Vertex v = seq[step];
        CleaningStep rec{v, brushes[v], {}, 0};
        // An edge is dirty until one of its endpoints fires.
        for (Vertex u : g.neighbors(v)) {
            if (!cleaned[u]) {
                rec.cleaned_to.push_back(u);
            }
        }
        const int need = static_cast<int>(rec.cleaned_to.size());
        if (brushes[v] < need) {
            throw InfeasibleStep(step, v, brushes[v], need);
        }
        brushes[v] -= need;
        for (Vertex u : rec.cleaned_to) {
            ++brushes[u];
        }
        cleaned[v] = 1;
        rec.brushes_left = brushes[v];
        trace.steps.push_back(std::move(rec));
    }
    trace.final_brushes = std::move(brushes);
    return trace;
}

// A vertex that can fire stays able to fire: its brushes only grow and its
// dirty degree only shrinks until it fires itself. Greedy saturation therefore
// finds a full order whenever any exists.
Cleanability can_clean(const Graph& g, const BrushConfig& w0) {
    if (w0.vertex_count() != g.vertex_count()) {
        throw InvalidInput("config has " + std::to_string(w0.vertex_count()) +
                           " entries, graph has " + std::to_string(g.vertex_count()) +
                           " vertices");
    }
    const int n = g.vertex_count();
    std::vector<int> brushes(w0.counts().begin(), w0.counts().end());
    std::vector<int> dirty(n);
    std::vector<char> cleaned(n, 0);
    std::set<Vertex> ready;
    for (Vertex v = 0; v < n; ++v) {
        dirty[v] = g.degree(v);
        if (brushes[v] >= dirty[v]) {
            ready.insert(v);
        }
    }

    std::vector<Vertex> order;
    order.reserve(n);
    while (!ready.empty()) {
        const Vertex v = *ready.begin();
        ready.erase(ready.begin());
        cleaned[v] = 1;
        order.push_back(v);
        for (Vertex u : g.neighbors(v)) {
            if (cleaned[u]) {
                continue;
            }
            ++brushes[u];
            --dirty[u];
            if (brushes[u] >= dirty[u]) {
                ready.insert(u);
            }
        }
    }

    Cleanability result;
    result.cleanable = static_cast<int>(order.size()) == n;
    result.sequence = CleaningSequence(n, std::move(order));
    for (Vertex v = 0; v < n; ++v) {
        if (!cleaned[v]) {
            result.blocking.push_back(v);
        }
    }
    return result;
}

bool verify_acyclic(const Orientation& o) {
    const int n = o.vertex_count;
    std::vector<std::vector<Vertex>> out(n);
    std::vector<int> indeg(n, 0);
    for (auto [from, to] : o.arcs) {
        if (from < 0 || to < 0 || from >= n || to >= n) {
            return false;
        }
        out[from].push_back(to);
        ++indeg[to];
    }
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v) {
        if (indeg[v] == 0) {
            stack.push_back(v);
        }
    }
    int removed = 0;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        ++removed;
        for (Vertex u : out[v]) {
            if (--indeg[u] == 0) {
                stack.push_back(u);
            }
        }
    }
    return removed == n;
}

}  // namespace brush
