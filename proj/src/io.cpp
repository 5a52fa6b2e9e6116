#include "anosov/io.hpp"

#include <sstream>

#include "anosov/errors.hpp"
#include "anosov/graph6.hpp"
#include "json.hpp"

namespace anosov {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad json: ") + e.what());
    }
}

std::vector<std::pair<int, int>> edge_pairs(const json& j) {
    if (!j.contains("edges") || !j["edges"].is_array())
        throw input_error("json needs an \"edges\" array");
    std::vector<std::pair<int, int>> out;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw input_error("each edge must be a pair of integers");
        out.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
}

} // namespace

std::string graph_to_json(const SimpleGraph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

SimpleGraph graph_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw input_error("json needs an integer \"n\"");
    return make_graph(j["n"].get<int>(), edge_pairs(j));
}

std::string weighted_to_json(const WeightedGraph& w) {
    json j;
    j["k"] = w.k;
    j["weights"] = w.wt;
    j["edges"] = json::array();
    for (auto [i, jv] : w.edges()) j["edges"].push_back({i, jv});
    return j.dump();
}

WeightedGraph weighted_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer())
        throw input_error("json needs an integer \"k\"");
    if (!j.contains("weights") || !j["weights"].is_array())
        throw input_error("json needs a \"weights\" array");
    int k = j["k"].get<int>();
    std::vector<int> weights;
    for (const auto& x : j["weights"]) {
        if (!x.is_number_integer()) throw input_error("weights must be integers");
        weights.push_back(x.get<int>());
    }
    if (static_cast<int>(weights.size()) != k)
        throw input_error("\"weights\" length must equal k");
    WeightedGraph w(weights);
    for (auto [a, b] : edge_pairs(j)) w.add_edge(a, b);
    return w;
}

std::string graph_to_dot(const SimpleGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n; v++) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string weighted_to_dot(const WeightedGraph& w) {
    std::ostringstream out;
    out << "graph Q {\n";
    for (int v = 0; v < w.k; v++)
        out << "  " << v << " [label=\"" << w.wt[static_cast<std::size_t>(v)] << "\"];\n";
    for (auto [i, j] : w.edges()) out << "  " << i << " -- " << j << ";\n";
    out << "}\n";
    return out.str();
}

std::string decomposition_to_json(const EquivalenceDecomposition& d) {
    json j;
    j["type"] = d.type;
    j["classes"] = json::array();
    for (const auto& c : d.classes) {
        json jc;
        jc["vertices"] = c.vertices;
        jc["kind"] = c.kind == ClassKind::complete ? "complete" : "edgeless";
        j["classes"].push_back(std::move(jc));
    }
    return j.dump();
}

std::string lie_to_json(const GraphLieAlgebra& L) {
    json j;
    j["dim"] = L.dim();
    j["n"] = L.n;
    j["m"] = L.m;
    j["brackets"] = json::array();
    for (int a = 0; a < L.dim(); a++)
        for (int b = a + 1; b < L.dim(); b++)
            for (auto [idx, c] : L.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                if (c == 0) continue;
                json entry;
                entry["i"] = a;
                entry["j"] = b;
                entry["k"] = idx;
                entry["c"] = c;
                j["brackets"].push_back(std::move(entry));
            }
    return j.dump();
}

SimpleGraph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    int max_label = -1;
    while (std::getline(in, line)) {
        line_no++;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream fields(line);
        long long u, v;
        std::string extra;
        if (!(fields >> u >> v) || (fields >> extra))
            throw input_error("edge list line " + std::to_string(line_no) +
                              ": expected two vertex labels");
        if (u < 0 || v < 0 || u >= SimpleGraph::max_vertices || v >= SimpleGraph::max_vertices)
            throw input_error("edge list line " + std::to_string(line_no) + ": label out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_label = std::max(max_label, static_cast<int>(std::max(u, v)));
    }
    if (edges.empty()) throw input_error("edge list has no edges");
    return make_graph(max_label + 1, edges);
}

SimpleGraph graph_from_text(const std::string& text) {
    std::size_t start = text.find_first_not_of(" \t\r\n");
    if (start == std::string::npos) throw input_error("empty graph input");
    char c = text[start];
    if (c == '{') return graph_from_json(text.substr(start));
    if (static_cast<unsigned char>(c) >= 63 && static_cast<unsigned char>(c) <= 126)
        return from_graph6(text.substr(start));
    return graph_from_edge_list(text);
}

} // namespace anosov
