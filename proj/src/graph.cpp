#include "brush/graph.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "brush/error.hpp"

namespace brush {

Graph Graph::from_edges(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) {
        throw InvalidParameter("negative vertex count");
    }
    Graph g;
    g.adjacency_.resize(vertex_count);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw InvalidParameter("edge " + std::to_string(u) + " " + std::to_string(v) +
                                   " out of range for " + std::to_string(vertex_count) +
                                   " vertices");
        }
        if (u == v) {
            throw InvalidParameter("self-loop at vertex " + std::to_string(u));
        }
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < vertex_count; ++v) {
        auto& nb = g.adjacency_[v];
        std::sort(nb.begin(), nb.end());
        auto dup = std::adjacent_find(nb.begin(), nb.end());
        if (dup != nb.end()) {
            throw InvalidParameter("duplicate edge " + std::to_string(std::min(v, *dup)) + " " +
                                   std::to_string(std::max(v, *dup)));
        }
    }
    g.edge_count_ = static_cast<int>(edges.size());
    return g;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nb : adjacency_) {
        best = std::max(best, static_cast<int>(nb.size()));
    }
    return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v)) {
        return false;
    }
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

Graph make_path(int k) {
    if (k < 1) {
        throw InvalidParameter("path needs at least 1 vertex");
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < k; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph::from_edges(k, edges);
}

Graph make_cycle(int k) {
    if (k < 3) {
        throw InvalidParameter("cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < k; ++v) {
        edges.emplace_back(v, (v + 1) % k);
    }
    return Graph::from_edges(k, edges);
}

Graph make_clique(int k) {
    if (k < 1) {
        throw InvalidParameter("clique needs at least 1 vertex");
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < k; ++u) {
        for (Vertex v = u + 1; v < k; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(k, edges);
}

Graph make_empty(int k) {
    if (k < 0) {
        throw InvalidParameter("negative vertex count");
    }
    return Graph::from_edges(k, {});
}

Graph make_random(int k, double p, std::uint64_t seed) {
    if (k < 0) {
        throw InvalidParameter("negative vertex count");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidParameter("edge probability must lie in [0, 1]");
    }
    // mt19937_64 output is fixed by the standard; distributions are not, so
    // the coin is built from raw bits to keep graphs identical across toolchains.
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < k; ++u) {
        for (Vertex v = u + 1; v < k; ++v) {
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < p) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(k, edges);
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0) {
        throw InvalidParameter("cartesian product of an empty factor");
    }
    const ProductLabeling lab{g.vertex_count(), h.vertex_count()};
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(lab.m) * h.edge_count() +
                  static_cast<std::size_t>(g.edge_count()) * lab.n);
    for (int i = 0; i < lab.m; ++i) {
        for (auto [a, b] : h.edges()) {
            edges.emplace_back(lab.flat(i, a), lab.flat(i, b));
        }
    }
    for (auto [a, b] : g.edges()) {
        for (int j = 0; j < lab.n; ++j) {
            edges.emplace_back(lab.flat(a, j), lab.flat(b, j));
        }
    }
    return {Graph::from_edges(lab.m * lab.n, edges), lab};
}

ProductGraph make_torus(int m, int n) {
    if (m < 3 || n < 3) {
        throw InvalidParameter("torus needs m, n >= 3");
    }
    return cartesian_product(make_cycle(m), make_cycle(n));
}

ProductGraph make_clique_path(int m, int n) {
    if (m < 1 || n < 1) {
        throw InvalidParameter("clique-path product needs m, n >= 1");
    }
    return cartesian_product(make_clique(m), make_path(n));
}

ProductGraph make_clique_cycle(int m, int n) {
    if (m < 1 || n < 3) {
        throw InvalidParameter("clique-cycle product needs m >= 1, n >= 3");
    }
    return cartesian_product(make_clique(m), make_cycle(n));
}

}  // namespace brush
