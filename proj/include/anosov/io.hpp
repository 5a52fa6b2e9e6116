#ifndef ANOSOV_IO_HPP
#define ANOSOV_IO_HPP

#include <string>

#include "anosov/equivalence.hpp"
#include "anosov/graph.hpp"
#include "anosov/lie.hpp"
#include "anosov/quotient.hpp"

namespace anosov {

// JSON shape: {"n": 4, "edges": [[0,1], [2,3]]}
std::string graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const std::string& text);

// JSON shape: {"k": 2, "weights": [3,2], "edges": [[0,0], [0,1]]}
// with loops carried as [i, i] entries.
std::string weighted_to_json(const WeightedGraph& w);
WeightedGraph weighted_from_json(const std::string& text);

std::string graph_to_dot(const SimpleGraph& g);
// Weight labels on nodes; loops drawn as self edges.
std::string weighted_to_dot(const WeightedGraph& w);

// {"type": [...], "classes": [{"vertices": [...], "kind": "edgeless"}...]}
std::string decomposition_to_json(const EquivalenceDecomposition& d);

// Structure constants as {"dim":, "n":, "m":, "brackets": [{"i":,"j":,"k":,"c":}...]}
std::string lie_to_json(const GraphLieAlgebra& L);

// Plain text edge list: one "u v" pair per line, blank lines and lines
// starting with '#' ignored; n = largest label + 1.
SimpleGraph graph_from_edge_list(const std::string& text);

// Sniff the format from the first meaningful byte: '{' is JSON, a graph6
// size byte in [63, 126] followed by graph6 body characters is graph6,
// anything else is treated as an edge list.
SimpleGraph graph_from_text(const std::string& text);

} // namespace anosov

#endif
