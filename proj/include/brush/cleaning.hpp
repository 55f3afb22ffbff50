#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brush/graph.hpp"

namespace brush {

// Initial brush placement w0: one non-negative count per vertex.
class BrushConfig {
public:
    BrushConfig() = default;
    explicit BrushConfig(int vertex_count) : counts_(vertex_count, 0) {}
    // Throws InvalidParameter on a negative entry.
    explicit BrushConfig(std::vector<int> counts);

    int vertex_count() const { return static_cast<int>(counts_.size()); }
    int operator[](Vertex v) const { return counts_[v]; }
    // Throws InvalidParameter if the result would be negative.
    void set(Vertex v, int count);
    void add(Vertex v, int delta) { set(v, counts_[v] + delta); }
    long total() const;
    std::span<const int> counts() const { return counts_; }

    friend bool operator==(const BrushConfig&, const BrushConfig&) = default;

private:
    std::vector<int> counts_;
};

// Cleaning order. May be a prefix; `is_complete()` checks for a full permutation.
class CleaningSequence {
public:
    CleaningSequence() = default;
    // Throws InvalidSequence on repeats or out-of-range ids.
    CleaningSequence(int vertex_count, std::vector<Vertex> order);

    int vertex_count() const { return vertex_count_; }
    std::span<const Vertex> order() const { return order_; }
    std::size_t size() const { return order_.size(); }
    bool is_complete() const { return static_cast<int>(order_.size()) == vertex_count_; }
    Vertex operator[](std::size_t i) const { return order_[i]; }

    // position[v] = index of v in the order, or -1 if absent.
    std::vector<int> positions() const;

    friend bool operator==(const CleaningSequence&, const CleaningSequence&) = default;

private:
    int vertex_count_ = 0;
    std::vector<Vertex> order_;
};

// One arc (from, to) per undirected edge.
struct Orientation {
    int vertex_count = 0;
    std::vector<Edge> arcs;
};

struct CleaningStep {
    Vertex vertex = 0;
    int brushes_before = 0;
    // Neighbors that each received one brush across a previously dirty edge.
    std::vector<Vertex> cleaned_to;
    int brushes_left = 0;
};

struct CleaningTrace {
    std::vector<CleaningStep> steps;
    std::vector<int> final_brushes;
};

struct Cleanability {
    bool cleanable = false;
    // Firing order found by greedy saturation (complete iff cleanable).
    CleaningSequence sequence;
    // Uncleaned vertices that still have dirty edges when greedy stalls.
    std::vector<Vertex> blocking;
};

Orientation orientation_from_sequence(const Graph& g, const CleaningSequence& seq);

// Sum over v of max(0, outdeg - indeg).
long brush_cost(const Graph& g, const Orientation& o);

BrushConfig minimal_config_for_sequence(const Graph& g, const CleaningSequence& seq);

// Fires vertices in order; throws InfeasibleStep on the first vertex that
// cannot cover its dirty edges.
CleaningTrace simulate(const Graph& g, const BrushConfig& w0, const CleaningSequence& seq);

Cleanability can_clean(const Graph& g, const BrushConfig& w0);

bool verify_acyclic(const Orientation& o);

// Text formats: "b <n>" then "v count" per nonzero vertex; "s <n>" then ids.
BrushConfig parse_config(std::string_view text);
std::string serialize_config(const BrushConfig& w0);
CleaningSequence parse_sequence(std::string_view text);
std::string serialize_sequence(const CleaningSequence& seq);

}  // namespace brush
