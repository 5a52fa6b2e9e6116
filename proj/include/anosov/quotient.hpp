#ifndef ANOSOV_QUOTIENT_HPP
#define ANOSOV_QUOTIENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "anosov/equivalence.hpp"
#include "anosov/graph.hpp"

namespace anosov {

// Vertex-weighted graph with loops allowed, the codomain of the similarity
// quotient. Cross adjacency is a bitmask per vertex; loops live in their
// own bitmask. Weights are positive.
struct WeightedGraph {
    static constexpr int max_vertices = 16;

    int k = 0;
    std::vector<int> wt;
    std::vector<std::uint64_t> adj;
    std::uint64_t loops = 0;

    WeightedGraph() = default;
    WeightedGraph(std::vector<int> weights);

    void check_vertex(int v) const;
    // add_edge(i, i) records a loop.
    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;
    bool has_loop(int i) const;
    int loop_count() const;
    int cross_edge_count() const;

    // Cross edges (i, j) with i < j plus loops as (i, i), sorted.
    std::vector<std::pair<int, int>> edges() const;

    int total_weight() const;

    bool operator==(const WeightedGraph& other) const = default;
};

// Similarity quotient: one vertex per class (in decompose order), weight =
// class size, loop iff the class induces a complete subgraph of size >= 2,
// cross edge iff the classes are joined completely in g.
WeightedGraph quotient(const SimpleGraph& g);

// Inverse construction: block i is wt(i) consecutive vertices, complete if
// i has a loop and edgeless otherwise, with a complete bipartite join along
// every cross edge. Blocks are laid out in vertex order, so the result is
// deterministic.
SimpleGraph deconstruct(const WeightedGraph& w);

// Connectivity of the underlying loopless graph.
bool is_connected(const WeightedGraph& w);

// Sufficient conditions for deconstruct(w) to be Anosov: w connected, every
// weight >= 2, no loop on a weight-2 vertex, and (when k = 1) a loop on the
// single vertex. The last clause is needed because a lone loopless block
// deconstructs to an edgeless, hence disconnected, graph.
bool check_anosov_criteria(const WeightedGraph& w);

// The anosov criteria plus row distinctness: no two loopless vertices share
// an open neighborhood and no two looped vertices share a closed one.
// Equivalently, the adjacency matrix with loops on the diagonal has no
// repeated rows. Both formulations are evaluated and must agree; these are
// exactly the w for which quotient(deconstruct(w)) returns w itself.
bool check_brick_conditions(const WeightedGraph& w);

// Lexicographically minimal encoding of (weights, loops, adjacency) over
// all simultaneous relabelings. Equal codes iff weighted-isomorphic.
using WeightedCode = std::vector<std::uint32_t>;

WeightedCode weighted_canonical_code(const WeightedGraph& w, int cutoff = 10);

std::string weighted_code_hex(const WeightedCode& code);

} // namespace anosov

#endif
