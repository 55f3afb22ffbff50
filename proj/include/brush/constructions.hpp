#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brush/cleaning.hpp"
#include "brush/graph.hpp"
#include "brush/solver.hpp"

namespace brush {

// A brush placement together with an order that it is known to clean.
struct Construction {
    BrushConfig config;
    CleaningSequence sequence;
    // True when the closed form failed validation and an exact-solver witness was used.
    bool from_solver = false;
};

// C_m x C_n: 4 at (0,0), 2 along the rest of row 0 and column 0 except the
// last entry of each, 0 elsewhere. Cleaned row-major from (0,0).
Construction torus_config(int m, int n);
long torus_brush_number(int m, int n);

// K_m x P_n, m even. Row i (clique index) holds m-2i in the first column,
// m-1-2i in inner columns and m-2-2i in the last, clipped at 0. Cleaned
// column by column in ascending clique index.
Construction km_pn_config(int m, int n);

// Odd m: the same column formulas, validated by greedy cleaning. Below the
// DP cap a failed validation falls back to a solver witness.
Construction km_pn_config_odd(int m, int n, const DpOptions& opts = {});

long km_pn_brush_number(int m, int n);

Construction clique_config(int m);
Construction path_config(int k);
Construction cycle_config(int k);

// --- torus row combining -------------------------------------------------

enum class Axis { Rows, Columns };

std::string to_string(Axis axis);

struct CombinedTorus {
    ProductGraph torus;
    BrushConfig config;
    CleaningSequence sequence;
    // old vertex id -> vertex of the smaller torus
    std::vector<Vertex> vertex_map;
};

// Merges line `index` with line `index + 1` (cyclically) along `axis`. Merged
// vertices carry the sum of both brush counts and are cleaned when the first of
// the pair was. Requires a valid cleaning and at least 4 lines on that axis.
CombinedTorus combine_torus(const ProductGraph& torus, const BrushConfig& w0,
                            const CleaningSequence& seq, Axis axis, int index);

CombinedTorus combine_torus_rows(const ProductGraph& torus, const BrushConfig& w0,
                                 const CleaningSequence& seq, int row);

struct CorrectRows {
    Axis axis = Axis::Rows;
    int first = 0;   // merged lines are `first` and `second` = first + 1 (mod size)
    int second = 0;
    // First vertex in cleaning order with fewer than 4 initial brushes.
    Vertex pivot = 0;
    int pivot_brushes = 0;
    // The earlier-cleaned neighbor of the pivot that fixes the axis.
    Vertex earlier_neighbor = 0;
};

// Requires an optimal cleaning (total 2(m+n-2)).
CorrectRows find_correct_rows(const ProductGraph& torus, const BrushConfig& w0,
                              const CleaningSequence& seq);

struct TorusReduction {
    CorrectRows rows;
    CombinedTorus merged;  // config already has the two brushes removed
    Vertex trimmed = 0;    // merged-torus vertex that gave up two brushes
    long total_before = 0;
    long total_after = 0;
};

// find_correct_rows + combine_torus + removal of two brushes, checked by simulation.
TorusReduction reduce_torus(const ProductGraph& torus, const BrushConfig& w0,
                            const CleaningSequence& seq);

struct OptimalTorusReduction {
    BrushConfig config;         // minimal configuration of `sequence`
    CleaningSequence sequence;  // the DP-optimal cleaning that was reduced
    std::size_t witnesses_tried = 0;
    TorusReduction reduction;
};

// Runs reduce_torus on DP-optimal cleanings in solver order until one has its
// correct lines on an axis that can shrink (length >= 4).
OptimalTorusReduction reduce_optimal_torus(const ProductGraph& torus,
                                           std::size_t max_witnesses = 256,
                                           const DpOptions& opts = {});

// --- clique-layer deletion -----------------------------------------------

enum class PairClass { A, B, C, D, E, F, G, H };

char to_char(PairClass c);

// Pair (u, v) = ((i, 0), (i, 1)) is classified by w0(u) > 0, which of u and v
// is cleaned first, and w0(v) > 0.
PairClass classify_pair(bool u_has_brushes, bool u_first, bool v_has_brushes);

struct BoundaryClassCounts {
    int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0, g = 0, h = 0;

    int total() const { return a + b + c + d + e + f + g + h; }
    int& operator[](PairClass k);
    int operator[](PairClass k) const;

    friend bool operator==(const BoundaryClassCounts&, const BoundaryClassCounts&) = default;
};

struct BoundaryClassification {
    BoundaryClassCounts counts;
    std::vector<PairClass> pair_class;  // by clique index i
    // 1-based cleaning rank of (i, 0) among the first copy, and of (i, 1) among the second.
    std::vector<int> rank_first;
    std::vector<int> rank_second;
    // Structural claims of the optimal-case analysis that this cleaning violates.
    std::vector<std::string> diagnostics;
};

BoundaryClassification classify_boundary_pairs(const ProductGraph& km_pn, const BrushConfig& w0,
                                               const CleaningSequence& seq);

enum class LayerMode {
    Auto,       // Base when n == 2, Inductive otherwise
    Inductive,  // n >= 3: K_m x P_n -> K_m x P_{n-1}
    Base,       // n == 2, m even: K_m x P_2 -> K_m, with the extra brush at v_{m/2}
};

struct LayerDeletion {
    ProductGraph reduced;  // K_m x P_{n-1}
    BrushConfig config;
    CleaningSequence sequence;
    BoundaryClassification classes;
    bool extra_middle_brush = false;  // Base mode: w0(v_{m/2}) was 0
    long input_total = 0;
    long output_total = 0;
    // input - (m^2-2m)/4 - a - 2b + e - c - g (+1 in Base mode when the extra brush
    // was added); only defined for even m.
    std::optional<long> class_bound;
    bool cleans = false;
};

LayerDeletion delete_clique_layer(const ProductGraph& km_pn, const BrushConfig& w0,
                                  const CleaningSequence& seq, LayerMode mode = LayerMode::Auto);

}  // namespace brush
