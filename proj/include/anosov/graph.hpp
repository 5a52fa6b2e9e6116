#ifndef ANOSOV_GRAPH_HPP
#define ANOSOV_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "anosov/errors.hpp"

namespace anosov {

// Simple undirected graph on vertices 0..n-1 with one adjacency bitmask per
// vertex. Bit v of adj[u] is set iff u and v are adjacent. The cap of 64
// vertices covers every scale this library works at.
struct SimpleGraph {
    static constexpr int max_vertices = 64;

    int n = 0;
    std::vector<std::uint64_t> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int n_);

    void check_vertex(int v) const;
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int edge_count() const;

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const SimpleGraph& other) const = default;
};

// Convenience constructor from an edge list.
SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Open (closed = false) or closed (closed = true) neighborhood of v as a
// bitmask over the vertex set.
std::uint64_t neighborhood(const SimpleGraph& g, int v, bool closed);

// Breadth-first connectivity test. The empty graph has no well-defined
// answer and is rejected.
bool is_connected(const SimpleGraph& g);

} // namespace anosov

#endif
