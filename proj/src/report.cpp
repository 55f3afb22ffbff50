#include "brush/report.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "brush/constructions.hpp"
#include "brush/error.hpp"

namespace brush {

namespace {

// Runs tasks[i] for every i, on up to `jobs` threads. Results land in
// caller-owned slots so the output order never depends on scheduling.
void run_all(std::vector<std::function<void()>>& tasks, int jobs) {
    const int workers = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
    if (workers == 1) {
        for (auto& t : tasks) {
            t();
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                tasks[i]();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
}

}  // namespace

std::string to_string(RowStatus s) {
    switch (s) {
        case RowStatus::Match: return "match";
        case RowStatus::Mismatch: return "MISMATCH";
        case RowStatus::Incomplete: return "incomplete";
        case RowStatus::Skipped: return "skipped";
    }
    return "?";
}

bool RunReport::any_mismatch() const {
    return std::any_of(rows.begin(), rows.end(),
                       [](const ReportRow& r) { return r.status == RowStatus::Mismatch; });
}

std::string RunReport::to_text() const {
    std::size_t width = 8;
    for (const auto& r : rows) {
        width = std::max(width, r.label.size());
    }
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "instance" << "  " << std::right
       << std::setw(5) << "|V|" << std::setw(10) << "formula" << std::setw(10) << "solver"
       << std::setw(8) << "method" << "  status\n";
    for (const auto& r : rows) {
        os << std::left << std::setw(static_cast<int>(width)) << r.label << "  " << std::right
           << std::setw(5) << r.vertices << std::setw(10) << r.closed_form << std::setw(10)
           << (r.solver_value ? std::to_string(*r.solver_value) : "-") << std::setw(8)
           << (r.method.empty() ? "-" : r.method) << "  " << to_string(r.status);
        if (!r.note.empty()) {
            os << "  (" << r.note << ")";
        }
        os << '\n';
    }
    return os.str();
}

std::string RunReport::to_machine(bool with_timing) const {
    std::ostringstream os;
    std::size_t matched = 0;
    for (const auto& r : rows) {
        matched += r.match() ? 1 : 0;
        os << "row suite=" << suite << " label=" << r.label << " vertices=" << r.vertices
           << " closed_form=" << r.closed_form << " solver="
           << (r.solver_value ? std::to_string(*r.solver_value) : "none")
           << " method=" << (r.method.empty() ? "none" : r.method) << " match=" << r.match()
           << " status=" << to_string(r.status) << " states=" << r.stats.states;
        if (with_timing) {
            os << " elapsed_us=" << r.stats.elapsed.count();
        }
        os << '\n';
    }
    os << "summary suite=" << suite << " rows=" << rows.size() << " matched=" << matched
       << " mismatched=" << (any_mismatch() ? "yes" : "no") << '\n';
    return os.str();
}

ReportRow solve_row(const std::string& label, const Graph& g, long expected,
                    const ReportOptions& opts) {
    ReportRow row;
    row.label = label;
    row.vertices = g.vertex_count();
    row.closed_form = expected;
    if (g.vertex_count() <= opts.dp.max_vertices) {
        auto r = brush_number_dp(g, opts.dp);
        row.method = "dp";
        row.solver_value = r.value;
        row.stats = r.stats;
        row.status = r.value == expected ? RowStatus::Match : RowStatus::Mismatch;
        return row;
    }
    if (!opts.bnb_over_cap || g.vertex_count() > 64) {
        row.note = "over solver cap";
        return row;
    }
    auto r = brush_number_bnb(g, opts.bnb);
    row.method = "bnb";
    row.solver_value = r.value;
    row.stats = r.stats;
    if (r.complete) {
        row.status = r.value == expected ? RowStatus::Match : RowStatus::Mismatch;
    } else if (r.lower_bound <= expected && expected <= r.value) {
        row.status = RowStatus::Incomplete;
        row.note = "bounds [" + std::to_string(r.lower_bound) + ", " + std::to_string(r.value) + "]";
    } else {
        row.status = RowStatus::Mismatch;
        row.note = "bounds [" + std::to_string(r.lower_bound) + ", " + std::to_string(r.value) + "]";
    }
    return row;
}

RunReport report_torus(int m_lo, int m_hi, int n_lo, int n_hi, const ReportOptions& opts) {
    RunReport report{"torus", {}};
    std::vector<std::pair<int, int>> grid;
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int n = n_lo; n <= n_hi; ++n) {
            grid.emplace_back(m, n);
        }
    }
    report.rows.resize(grid.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        tasks.emplace_back([&, k] {
            auto [m, n] = grid[k];
            report.rows[k] = solve_row("C" + std::to_string(m) + "xC" + std::to_string(n),
                                       make_torus(m, n).graph, torus_brush_number(m, n), opts);
        });
    }
    run_all(tasks, opts.jobs);
    return report;
}

RunReport report_km_pn(const std::vector<int>& ms, const std::vector<int>& ns,
                       const ReportOptions& opts) {
    RunReport report{"km-pn", {}};
    std::vector<std::pair<int, int>> grid;
    for (int m : ms) {
        for (int n : ns) {
            grid.emplace_back(m, n);
        }
    }
    report.rows.resize(grid.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        tasks.emplace_back([&, k] {
            auto [m, n] = grid[k];
            report.rows[k] = solve_row("K" + std::to_string(m) + "xP" + std::to_string(n),
                                       make_clique_path(m, n).graph, km_pn_brush_number(m, n), opts);
        });
    }
    run_all(tasks, opts.jobs);
    return report;
}

RunReport report_box(int m, const std::vector<std::pair<std::string, Graph>>& hs,
                     const ReportOptions& opts) {
    RunReport report{opts.box_filter == BoxFilter::ConnectedOnly ? "box-connected" : "box", {}};
    report.rows.resize(2 * hs.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t k = 0; k < hs.size(); ++k) {
        tasks.emplace_back([&, k] {
            const auto& [name, h] = hs[k];
            const std::string base = "m=" + std::to_string(m) + ",H=" + name;
            ReportRow lower;
            ReportRow upper;
            lower.label = base + ":min";
            upper.label = base + ":max";
            lower.vertices = upper.vertices = m * h.vertex_count();
            try {
                const auto box = check_box_conjecture(h, m, name, opts.dp, opts.box_filter);
                lower.closed_form = box.path_value;
                lower.solver_value = box.min.value;
                upper.closed_form = box.clique_value;
                upper.solver_value = box.max.value;
                lower.method = upper.method = "dp";
                lower.status = box.min.value == box.path_value ? RowStatus::Match : RowStatus::Mismatch;
                upper.status = box.max.value == box.clique_value ? RowStatus::Match : RowStatus::Mismatch;
                lower.note = upper.note = std::to_string(box.graphs_checked) + " graphs, " +
                                          std::to_string(box.violations.size()) + " violations";
            } catch (const TooLarge&) {
                lower.note = upper.note = "over solver cap";
            }
            report.rows[2 * k] = std::move(lower);
            report.rows[2 * k + 1] = std::move(upper);
        });
    }
    run_all(tasks, opts.jobs);
    return report;
}

bool CliqueCycleReport::plain_matches() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const CliqueCycleRow& r) { return r.value == r.plain_reading; });
}

bool CliqueCycleReport::scaled_matches() const {
    return std::all_of(rows.begin(), rows.end(),
                       [](const CliqueCycleRow& r) { return r.value == r.scaled_reading; });
}

std::string CliqueCycleReport::verdict() const {
    if (plain_matches() && scaled_matches()) {
        return "both readings match";
    }
    if (plain_matches()) {
        return "floor(m^2/4)+2 matches; n*floor(m^2/4)+2 does not";
    }
    if (scaled_matches()) {
        return "n*floor(m^2/4)+2 matches; floor(m^2/4)+2 does not";
    }
    return "neither reading matches";
}

std::string CliqueCycleReport::to_text() const {
    std::ostringstream os;
    os << std::left << std::setw(10) << "instance" << std::right << std::setw(8) << "exact"
       << std::setw(18) << "floor(m^2/4)+2" << std::setw(20) << "n*floor(m^2/4)+2" << '\n';
    for (const auto& r : rows) {
        os << std::left << std::setw(10) << ("K" + std::to_string(r.m) + "xC" + std::to_string(r.n))
           << std::right << std::setw(8) << r.value << std::setw(18) << r.plain_reading
           << std::setw(20) << r.scaled_reading << '\n';
    }
    os << "verdict: " << verdict() << '\n';
    return os.str();
}

std::string CliqueCycleReport::to_machine() const {
    std::ostringstream os;
    for (const auto& r : rows) {
        os << "row suite=km-cn label=K" << r.m << "xC" << r.n << " exact=" << r.value
           << " plain=" << r.plain_reading << " scaled=" << r.scaled_reading
           << " plain_match=" << (r.value == r.plain_reading)
           << " scaled_match=" << (r.value == r.scaled_reading) << '\n';
    }
    os << "summary suite=km-cn plain_match=" << plain_matches()
       << " scaled_match=" << scaled_matches() << '\n';
    return os.str();
}

CliqueCycleReport report_clique_cycle(const std::vector<std::pair<int, int>>& instances,
                                      const DpOptions& opts) {
    CliqueCycleReport report;
    for (auto [m, n] : instances) {
        CliqueCycleRow row{m, n, 0, 0, 0};
        const long quarter = static_cast<long>(m) * m / 4;
        row.plain_reading = quarter + 2;
        row.scaled_reading = n * quarter + 2;
        row.value = brush_number_dp(make_clique_cycle(m, n).graph, opts).value;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace brush
