#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brush/cleaning.hpp"
#include "brush/graph.hpp"

namespace brush {

struct SolveStats {
    std::uint64_t states = 0;
    std::chrono::microseconds elapsed{0};
};

struct SolveResult {
    long value = 0;
    CleaningSequence witness;
    SolveStats stats;
    // False only when branch-and-bound ran out of budget; `value` is then an upper bound.
    bool complete = true;
    // Best proven lower bound; equals `value` whenever `complete`.
    long lower_bound = 0;
};

struct DpOptions {
    int max_vertices = 22;
    std::size_t memory_budget_bytes = std::size_t{1} << 30;
};

struct BnbOptions {
    std::optional<long> upper_hint;
    std::chrono::milliseconds timeout{60'000};
    // Dominance table entries; beyond this the search continues without memoising.
    std::size_t memo_limit = std::size_t{1} << 24;
};

// Exact subset DP over cleaned-vertex sets:
//   f(S) = min_{v in S} f(S - v) + max(0, deg(v) - 2 |N(v) & (S - v)|).
// Throws TooLarge above `max_vertices` and ResourceError if the table does
// not fit in the memory budget.
SolveResult brush_number_dp(const Graph& g, const DpOptions& opts = {});

// Up to `limit` distinct optimal cleaning orders, read off the DP table. The
// first one is the witness brush_number_dp returns.
std::vector<CleaningSequence> optimal_sequences(const Graph& g, std::size_t limit,
                                                const DpOptions& opts = {});

// Depth-first branch-and-bound on the next vertex to clean. Works for up to
// 64 vertices; whether it finishes depends on structure and the time budget.
SolveResult brush_number_bnb(const Graph& g, const BnbOptions& opts = {});

// Half the number of odd-degree vertices.
long parity_lower_bound(const Graph& g);

// Tries every permutation. Limited to 9 vertices.
SolveResult brute_force_permutations(const Graph& g);

struct BoxAttainer {
    long value = 0;
    std::vector<Edge> edges;  // edges of the labeled factor G
};

enum class BoxFilter { AllGraphs, ConnectedOnly };

struct BoxReport {
    int m = 0;
    std::string h_label;
    long path_value = 0;    // b(P_m x H)
    long clique_value = 0;  // b(K_m x H)
    BoxFilter filter = BoxFilter::AllGraphs;
    std::size_t graphs_checked = 0;
    BoxAttainer min;
    BoxAttainer max;
    std::vector<BoxAttainer> violations;

    bool holds() const { return violations.empty(); }
};

// Enumerates the 2^(m(m-1)/2) labeled graphs G on m vertices (or only the
// connected ones) and checks b(P_m x H) <= b(G x H) <= b(K_m x H) with the DP solver.
BoxReport check_box_conjecture(const Graph& h, int m, const std::string& h_label = "H",
                               const DpOptions& opts = {},
                               BoxFilter filter = BoxFilter::AllGraphs);

bool is_connected(const Graph& g);

}  // namespace brush
