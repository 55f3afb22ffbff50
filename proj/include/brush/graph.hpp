#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace brush {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Undirected simple graph on vertices 0..n-1. Immutable once built; the
// neighbor lists are kept sorted so equality and lookups are cheap.
class Graph {
public:
    Graph() = default;

    // Throws InvalidParameter on self-loops, duplicate edges or out-of-range ids.
    static Graph from_edges(int vertex_count, std::span<const Edge> edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return edge_count_; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

    // Edges as (min, max) pairs in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    int edge_count_ = 0;
};

// Vertex (i, j) of a product of an m-vertex and an n-vertex factor lives at i*n + j.
struct ProductLabeling {
    int m = 0;
    int n = 0;

    Vertex flat(int i, int j) const { return i * n + j; }
    int row(Vertex v) const { return v / n; }
    int col(Vertex v) const { return v % n; }

    friend bool operator==(const ProductLabeling&, const ProductLabeling&) = default;
};

struct ProductGraph {
    Graph graph;
    ProductLabeling labeling;
};

Graph make_path(int k);
Graph make_cycle(int k);
Graph make_clique(int k);
Graph make_empty(int k);
// G(k, p) from a seeded mt19937_64; the same seed gives the same graph everywhere.
Graph make_random(int k, double p, std::uint64_t seed);

ProductGraph cartesian_product(const Graph& g, const Graph& h);

// Named products used throughout: C_m x C_n, K_m x P_n and K_m x C_n.
ProductGraph make_torus(int m, int n);
ProductGraph make_clique_path(int m, int n);
ProductGraph make_clique_cycle(int m, int n);

// Plain-text edge list: "p <n>" header, one "u v" per line, '#' comments.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

}  // namespace brush
