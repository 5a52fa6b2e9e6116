#include "anosov/graph.hpp"

#include <bit>
#include <string>

namespace anosov {

SimpleGraph::SimpleGraph(int n_) {
    if (n_ < 0) throw input_error("vertex count must be nonnegative");
    if (n_ > max_vertices)
        throw input_error("vertex count " + std::to_string(n_) + " exceeds the cap of " +
                          std::to_string(max_vertices));
    n = n_;
    adj.assign(static_cast<std::size_t>(n), 0);
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n)
        throw input_error("vertex " + std::to_string(v) + " out of range for n = " +
                          std::to_string(n));
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u) +
                                  " not allowed in a simple graph");
    adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

bool SimpleGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj[static_cast<std::size_t>(u)] >> v) & 1;
}

int SimpleGraph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj[static_cast<std::size_t>(v)]);
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n; v++) total += std::popcount(adj[static_cast<std::size_t>(v)]);
    return total / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; u++) {
        std::uint64_t higher = adj[static_cast<std::size_t>(u)] >> (u + 1);
        int v = u + 1;
        while (higher) {
            int step = std::countr_zero(higher);
            v += step;
            out.emplace_back(u, v);
            higher >>= step + 1;
            v += 1;
        }
    }
    return out;
}

SimpleGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) {
        if (g.has_edge(u, v))
            throw input_error("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

std::uint64_t neighborhood(const SimpleGraph& g, int v, bool closed) {
    g.check_vertex(v);
    std::uint64_t mask = g.adj[static_cast<std::size_t>(v)];
    if (closed) mask |= std::uint64_t{1} << v;
    return mask;
}

bool is_connected(const SimpleGraph& g) {
    if (g.n == 0) throw input_error("connectivity of the empty graph is undefined");
    std::uint64_t reached = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t scan = frontier;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            next |= g.adj[static_cast<std::size_t>(v)];
        }
        frontier = next & ~reached;
        reached |= next;
    }
    std::uint64_t all = (g.n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    return reached == all;
}

} // namespace anosov
