#include "brush/solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <new>
#include <numeric>
#include <unordered_map>

#include "brush/error.hpp"

namespace brush {

namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Vertex u : g.neighbors(v)) {
            adj[v] |= Mask{1} << u;
        }
    }
    return adj;
}

// Cost of cleaning v right after the set `earlier`.
inline int step_cost(int degree, Mask adj, Mask earlier) {
    return std::max(0, degree - 2 * std::popcount(adj & earlier));
}

std::chrono::microseconds since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

struct SubsetTable {
    int n = 0;
    std::vector<Mask> adj;
    std::vector<int> deg;
    std::vector<std::uint16_t> best;

    int cost(int v, Mask earlier) const { return step_cost(deg[v], adj[v], earlier); }
};

SubsetTable build_table(const Graph& g, const DpOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.max_vertices) {
        throw TooLarge("DP limited to " + std::to_string(opts.max_vertices) + " vertices, got " +
                       std::to_string(n));
    }
    if (n > 40) {
        throw ResourceError("subset table for " + std::to_string(n) + " vertices is not addressable");
    }
    const std::size_t states = std::size_t{1} << n;
    if (states * sizeof(std::uint16_t) > opts.memory_budget_bytes) {
        throw ResourceError("DP table needs " + std::to_string(states * sizeof(std::uint16_t)) +
                            " bytes, budget is " + std::to_string(opts.memory_budget_bytes));
    }

    SubsetTable t;
    t.n = n;
    t.adj = neighbor_masks(g);
    t.deg.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        t.deg[v] = g.degree(v);
    }
    try {
        t.best.assign(states, 0);
    } catch (const std::bad_alloc&) {
        throw ResourceError("could not allocate DP table of " + std::to_string(states) + " states");
    }

    for (Mask set = 1; set < states; ++set) {
        int value = std::numeric_limits<int>::max();
        for (Mask rest = set; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const Mask without = set & ~(Mask{1} << v);
            value = std::min(value, t.best[without] + t.cost(v, without));
        }
        t.best[set] = static_cast<std::uint16_t>(value);
    }
    return t;
}

// Fills `order` back to front with every optimal completion of `set`, lowest
// vertex id first, stopping after `limit` sequences.
void collect_optimal(const SubsetTable& t, Mask set, int slot, std::vector<Vertex>& order,
                     std::vector<CleaningSequence>& out, std::size_t limit) {
    if (slot < 0) {
        out.emplace_back(t.n, order);
        return;
    }
    for (Mask rest = set; rest != 0 && out.size() < limit; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        const Mask without = set & ~(Mask{1} << v);
        if (t.best[without] + t.cost(v, without) == t.best[set]) {
            order[slot] = v;
            collect_optimal(t, without, slot - 1, order, out, limit);
        }
    }
}

}  // namespace

SolveResult brush_number_dp(const Graph& g, const DpOptions& opts) {
    const auto start = Clock::now();
    const auto table = build_table(g, opts);
    const int n = table.n;
    const Mask full = (Mask{1} << n) - 1;

    // Walk back from the full set; the lowest vertex id wins ties.
    std::vector<Vertex> order(n);
    Mask set = full;
    for (int slot = n - 1; slot >= 0; --slot) {
        for (Mask rest = set; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const Mask without = set & ~(Mask{1} << v);
            if (table.best[without] + table.cost(v, without) == table.best[set]) {
                order[slot] = v;
                set = without;
                break;
            }
        }
    }

    SolveResult result;
    result.value = table.best[full];
    result.lower_bound = result.value;
    result.witness = CleaningSequence(n, std::move(order));
    result.stats.states = table.best.size();
    result.stats.elapsed = since(start);
    return result;
}

std::vector<CleaningSequence> optimal_sequences(const Graph& g, std::size_t limit,
                                                const DpOptions& opts) {
    const auto table = build_table(g, opts);
    std::vector<CleaningSequence> out;
    if (limit == 0) {
        return out;
    }
    std::vector<Vertex> order(table.n);
    collect_optimal(table, (Mask{1} << table.n) - 1, table.n - 1, order, out, limit);
    return out;
}

namespace {

class BranchAndBound {
public:
    BranchAndBound(const Graph& g, const BnbOptions& opts)
        : n_(g.vertex_count()),
          full_(n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1),
          adj_(neighbor_masks(g)),
          deg_(n_),
          opts_(opts) {
        for (Vertex v = 0; v < n_; ++v) {
            deg_[v] = g.degree(v);
            if (deg_[v] % 2 != 0) {
                odd_ |= Mask{1} << v;
            }
        }
    }

    // Cheapest-next-vertex descent; seeds the incumbent.
    std::pair<long, std::vector<Vertex>> greedy() const {
        Mask set = 0;
        long cost = 0;
        std::vector<Vertex> order;
        while (set != full_) {
            int pick = -1;
            int pick_cost = std::numeric_limits<int>::max();
            for (Mask rest = full_ & ~set; rest != 0; rest &= rest - 1) {
                const int v = std::countr_zero(rest);
                const int c = step_cost(deg_[v], adj_[v], set);
                if (c < pick_cost) {
                    pick = v;
                    pick_cost = c;
                }
            }
            order.push_back(pick);
            cost += pick_cost;
            set |= Mask{1} << pick;
        }
        return {cost, order};
    }

    // Searches for orders strictly cheaper than `bound`.
    void run(long bound, Clock::time_point deadline) {
        bound_ = bound;
        deadline_ = deadline;
        found_ = false;
        aborted_ = false;
        memo_.clear();
        path_.clear();
        dfs(0, 0);
    }

    long root_lower_bound() const { return residual_bound(0); }

    bool found() const { return found_; }
    bool aborted() const { return aborted_; }
    long bound() const { return bound_; }
    const std::vector<Vertex>& best_order() const { return best_order_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // Remaining vertices R: sum_R max(0, y) with sum_R y = -cut(S, R) and y odd
    // exactly at odd-degree vertices, so the residual is at least
    // (odd(R) - cut) / 2. The next vertex alone also costs at least min_R step cost.
    long residual_bound(Mask set) const {
        const Mask rest = full_ & ~set;
        if (rest == 0) {
            return 0;
        }
        long cut = 0;
        int cheapest = std::numeric_limits<int>::max();
        for (Mask r = rest; r != 0; r &= r - 1) {
            const int v = std::countr_zero(r);
            const int earlier = std::popcount(adj_[v] & set);
            cut += earlier;
            cheapest = std::min(cheapest, std::max(0, deg_[v] - 2 * earlier));
        }
        const long parity = (std::popcount(rest & odd_) - cut + 1) / 2;
        return std::max<long>({0L, parity, static_cast<long>(cheapest)});
    }

    void dfs(Mask set, long cost) {
        if ((++nodes_ & 1023) == 0 && Clock::now() > deadline_) {
            aborted_ = true;
        }
        if (aborted_) {
            return;
        }
        if (set == full_) {
            if (cost < bound_) {
                bound_ = cost;
                best_order_ = path_;
                found_ = true;
            }
            return;
        }
        if (cost + residual_bound(set) >= bound_) {
            return;
        }
        if (auto it = memo_.find(set); it != memo_.end()) {
            if (it->second <= cost) {
                return;
            }
            it->second = cost;
        } else if (memo_.size() < opts_.memo_limit) {
            memo_.emplace(set, cost);
        }

        std::vector<std::pair<int, int>> children;
        for (Mask rest = full_ & ~set; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            children.emplace_back(step_cost(deg_[v], adj_[v], set), v);
        }
        std::sort(children.begin(), children.end());
        for (auto [c, v] : children) {
            path_.push_back(v);
            dfs(set | (Mask{1} << v), cost + c);
            path_.pop_back();
            if (aborted_) {
                return;
            }
        }
    }

    int n_;
    Mask full_;
    Mask odd_ = 0;
    std::vector<Mask> adj_;
    std::vector<int> deg_;
    BnbOptions opts_;

    long bound_ = 0;
    Clock::time_point deadline_;
    bool found_ = false;
    bool aborted_ = false;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> path_;
    std::vector<Vertex> best_order_;
    std::unordered_map<Mask, long> memo_;
};

}  // namespace

SolveResult brush_number_bnb(const Graph& g, const BnbOptions& opts) {
    const int n = g.vertex_count();
    if (n > 64) {
        throw TooLarge("branch-and-bound limited to 64 vertices, got " + std::to_string(n));
    }
    const auto start = Clock::now();
    const auto deadline = start + opts.timeout;
    SolveResult result;
    if (n == 0) {
        result.witness = CleaningSequence(0, {});
        return result;
    }

    BranchAndBound search(g, opts);
    auto [greedy_cost, greedy_order] = search.greedy();
    long best = greedy_cost;
    std::vector<Vertex> best_order = std::move(greedy_order);

    long bound = best;
    if (opts.upper_hint && *opts.upper_hint + 1 < bound) {
        bound = *opts.upper_hint + 1;
    }
    search.run(bound, deadline);
    if (search.found()) {
        best = search.bound();
        best_order = search.best_order();
    } else if (!search.aborted() && bound < best) {
        // The hint was below the optimum; search the gap it skipped.
        search.run(best, deadline);
        if (search.found()) {
            best = search.bound();
            best_order = search.best_order();
        }
    }

    result.value = best;
    result.witness = CleaningSequence(n, std::move(best_order));
    result.complete = !search.aborted();
    result.lower_bound =
        result.complete ? best : std::max(parity_lower_bound(g), search.root_lower_bound());
    result.stats.states = search.nodes();
    result.stats.elapsed = since(start);
    return result;
}

long parity_lower_bound(const Graph& g) {
    long odd = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        odd += g.degree(v) % 2;
    }
    return (odd + 1) / 2;
}

SolveResult brute_force_permutations(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 9) {
        throw TooLarge("permutation brute force limited to 9 vertices, got " + std::to_string(n));
    }
    const auto start = Clock::now();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pos(n);
    long best = std::numeric_limits<long>::max();
    std::vector<Vertex> best_order = order;
    std::uint64_t visited = 0;
    do {
        ++visited;
        for (int i = 0; i < n; ++i) {
            pos[order[i]] = i;
        }
        long cost = 0;
        for (Vertex v = 0; v < n; ++v) {
            int balance = 0;
            for (Vertex u : g.neighbors(v)) {
                balance += pos[u] > pos[v] ? 1 : -1;
            }
            cost += std::max(0, balance);
        }
        if (cost < best) {
            best = cost;
            best_order = order;
        }
    } while (std::next_permutation(order.begin(), order.end()));

    SolveResult result;
    result.value = n == 0 ? 0 : best;
    result.lower_bound = result.value;
    result.witness = CleaningSequence(n, std::move(best_order));
    result.stats.states = visited;
    result.stats.elapsed = since(start);
    return result;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) {
        return true;
    }
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == n;
}

BoxReport check_box_conjecture(const Graph& h, int m, const std::string& h_label,
                               const DpOptions& opts, BoxFilter filter) {
    if (m < 1 || m > 5) {
        throw InvalidParameter("box check supports 1 <= m <= 5, got " + std::to_string(m));
    }
    if (h.vertex_count() == 0) {
        throw InvalidParameter("box check needs a non-empty H");
    }
    if (static_cast<long>(m) * h.vertex_count() > opts.max_vertices) {
        throw TooLarge("products have " + std::to_string(m * h.vertex_count()) +
                       " vertices, DP cap is " + std::to_string(opts.max_vertices));
    }

    std::vector<Edge> pairs;
    for (Vertex u = 0; u < m; ++u) {
        for (Vertex v = u + 1; v < m; ++v) {
            pairs.emplace_back(u, v);
        }
    }

    auto solve = [&](const Graph& factor) {
        return brush_number_dp(cartesian_product(factor, h).graph, opts).value;
    };

    BoxReport report;
    report.m = m;
    report.h_label = h_label;
    report.filter = filter;
    report.path_value = solve(make_path(m));
    report.clique_value = solve(make_clique(m));

    const std::uint32_t graphs = std::uint32_t{1} << pairs.size();
    for (std::uint32_t pick = 0; pick < graphs; ++pick) {
        BoxAttainer entry;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (pick & (std::uint32_t{1} << k)) {
                entry.edges.push_back(pairs[k]);
            }
        }
        const auto factor = Graph::from_edges(m, entry.edges);
        if (filter == BoxFilter::ConnectedOnly && !is_connected(factor)) {
            continue;
        }
        entry.value = solve(factor);
        if (report.graphs_checked == 0 || entry.value < report.min.value) {
            report.min = entry;
        }
        if (report.graphs_checked == 0 || entry.value > report.max.value) {
            report.max = entry;
        }
        if (entry.value < report.path_value || entry.value > report.clique_value) {
            report.violations.push_back(entry);
        }
        ++report.graphs_checked;
    }
    return report;
}

}  // namespace brush
