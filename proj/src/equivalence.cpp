#include "anosov/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace anosov {

bool similar(const SimpleGraph& g, int x, int y) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (neighborhood(g, x, false) == neighborhood(g, y, false)) return true;
    return neighborhood(g, x, true) == neighborhood(g, y, true);
}

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
    }
    return v;
}

} // namespace

EquivalenceDecomposition decompose(const SimpleGraph& g) {
    if (g.n == 0) throw input_error("cannot decompose the empty graph");

    std::vector<int> parent(static_cast<std::size_t>(g.n));
    std::iota(parent.begin(), parent.end(), 0);
    for (int x = 0; x < g.n; x++)
        for (int y = x + 1; y < g.n; y++)
            if (similar(g, x, y)) {
                int rx = find_root(parent, x);
                int ry = find_root(parent, y);
                if (rx != ry) parent[static_cast<std::size_t>(std::max(rx, ry))] = std::min(rx, ry);
            }

    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; v++)
        buckets[static_cast<std::size_t>(find_root(parent, v))].push_back(v);

    EquivalenceDecomposition d;
    for (auto& members : buckets) {
        if (members.empty()) continue;
        SimilarityClass c;
        c.vertices = members;
        c.kind = ClassKind::edgeless;
        if (members.size() >= 2) {
            bool any_edge = false, all_edges = true;
            for (std::size_t a = 0; a < members.size(); a++)
                for (std::size_t b = a + 1; b < members.size(); b++) {
                    if (g.has_edge(members[a], members[b]))
                        any_edge = true;
                    else
                        all_edges = false;
                }
            if (any_edge && !all_edges)
                throw std::logic_error("similarity class induces a mixed subgraph");
            c.kind = any_edge ? ClassKind::complete : ClassKind::edgeless;
        }
        d.classes.push_back(std::move(c));
    }

    std::sort(d.classes.begin(), d.classes.end(),
              [](const SimilarityClass& a, const SimilarityClass& b) {
                  if (a.vertices.size() != b.vertices.size())
                      return a.vertices.size() > b.vertices.size();
                  return a.vertices.front() < b.vertices.front();
              });
    for (const auto& c : d.classes) d.type.push_back(static_cast<int>(c.vertices.size()));
    return d;
}

bool is_anosov(const SimpleGraph& g, bool allow_disconnected) {
    return diagnose_anosov(g, allow_disconnected).anosov;
}

AnosovVerdict diagnose_anosov(const SimpleGraph& g, bool allow_disconnected) {
    if (g.n == 0) throw input_error("cannot test the empty graph");
    AnosovVerdict v;
    if (!allow_disconnected && !is_connected(g)) {
        v.reason = "graph is disconnected";
        return v;
    }
    EquivalenceDecomposition d = decompose(g);
    for (const auto& c : d.classes) {
        if (c.vertices.size() == 1) {
            v.reason = "similarity class {" + std::to_string(c.vertices[0]) + "} has size 1";
            v.witness = c.vertices;
            return v;
        }
        if (c.vertices.size() == 2 && c.kind == ClassKind::complete) {
            v.reason = "similarity class {" + std::to_string(c.vertices[0]) + ", " +
                       std::to_string(c.vertices[1]) + "} has size 2 and induces an edge";
            v.witness = c.vertices;
            return v;
        }
    }
    v.anosov = true;
    return v;
}

std::size_t count_by_type(const std::vector<SimpleGraph>& graphs, const std::vector<int>& type) {
    int total = 0;
    for (std::size_t i = 0; i < type.size(); i++) {
        if (type[i] < 1) throw input_error("type parts must be positive");
        if (i > 0 && type[i] > type[i - 1])
            throw input_error("type must be weakly decreasing");
        total += type[i];
    }
    std::size_t hits = 0;
    for (const auto& g : graphs) {
        if (g.n != total)
            throw input_error("graph with " + std::to_string(g.n) +
                              " vertices does not match the type total " + std::to_string(total));
        if (decompose(g).type == type) hits++;
    }
    return hits;
}

} // namespace anosov
