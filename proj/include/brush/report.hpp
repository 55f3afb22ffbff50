#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brush/graph.hpp"
#include "brush/solver.hpp"

namespace brush {

enum class RowStatus { Match, Mismatch, Incomplete, Skipped };

std::string to_string(RowStatus s);

struct ReportRow {
    std::string label;
    int vertices = 0;
    long closed_form = 0;
    std::optional<long> solver_value;
    std::string method;  // "dp", "bnb" or "" when skipped
    RowStatus status = RowStatus::Skipped;
    SolveStats stats;
    std::string note;

    bool match() const { return status == RowStatus::Match; }
};

struct RunReport {
    std::string suite;
    std::vector<ReportRow> rows;

    bool any_mismatch() const;
    std::string to_text() const;
    // One "key=value ..." line per row plus a summary line.
    std::string to_machine(bool with_timing = false) const;
};

struct ReportOptions {
    DpOptions dp;
    BnbOptions bnb;
    // Above the DP cap, run branch-and-bound instead of skipping.
    bool bnb_over_cap = true;
    int jobs = 1;
    BoxFilter box_filter = BoxFilter::AllGraphs;
};

// Solves one instance with DP (or branch-and-bound above the cap) and
// compares against the expected value.
ReportRow solve_row(const std::string& label, const Graph& g, long expected,
                    const ReportOptions& opts);

RunReport report_torus(int m_lo, int m_hi, int n_lo, int n_hi, const ReportOptions& opts = {});
RunReport report_km_pn(const std::vector<int>& ms, const std::vector<int>& ns,
                       const ReportOptions& opts = {});
// Two rows per H: min over labeled G against b(P_m x H), max against b(K_m x H).
RunReport report_box(int m, const std::vector<std::pair<std::string, Graph>>& hs,
                     const ReportOptions& opts = {});

// K_m x C_n values against the two readings floor(m^2/4) + 2 and n floor(m^2/4) + 2.
struct CliqueCycleRow {
    int m = 0;
    int n = 0;
    long value = 0;
    long plain_reading = 0;
    long scaled_reading = 0;
};

struct CliqueCycleReport {
    std::vector<CliqueCycleRow> rows;

    bool plain_matches() const;
    bool scaled_matches() const;
    std::string verdict() const;
    std::string to_text() const;
    std::string to_machine() const;
};

CliqueCycleReport report_clique_cycle(const std::vector<std::pair<int, int>>& instances,
                                      const DpOptions& opts = {});

}  // namespace brush
