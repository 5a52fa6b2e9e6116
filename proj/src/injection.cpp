#include "anosov/injection.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace anosov {

namespace {

int ones_count(const Partition& l) {
    return static_cast<int>(std::count(l.begin(), l.end(), 1));
}

// Parts greater than 1, still weakly decreasing.
Partition body(const Partition& l) {
    Partition out;
    for (int p : l)
        if (p > 1) out.push_back(p);
    return out;
}

std::string show(const Partition& l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); i++) {
        if (i) s += ",";
        s += std::to_string(l[i]);
    }
    return s + ")";
}

WeightedGraph path_graph(std::vector<int> weights) {
    WeightedGraph w(std::move(weights));
    for (int i = 0; i + 1 < w.k; i++) w.add_edge(i, i + 1);
    return w;
}

WeightedGraph complete_graph(std::vector<int> weights) {
    WeightedGraph w(std::move(weights));
    for (int i = 0; i < w.k; i++)
        for (int j = i + 1; j < w.k; j++) w.add_edge(i, j);
    return w;
}

// Guards, evaluated on a validated partition with sum >= 9. t is the
// number of 1-parts, k the number of larger parts.

bool g1(const Partition& l) { return ones_count(l) == 0 && body(l).size() == 1; }
bool g2(const Partition& l) { return ones_count(l) == 0 && body(l).size() == 2; }
bool g3(const Partition& l) { return ones_count(l) == 0 && body(l).size() == 3; }
bool g4(const Partition& l) { return ones_count(l) == 0 && body(l).size() >= 4; }
bool g5(const Partition& l) { return ones_count(l) == 1 && body(l).size() == 1; }
bool g6(const Partition& l) { return ones_count(l) == 1 && body(l).size() == 2; }
bool g7(const Partition& l) { return ones_count(l) == 1 && body(l).size() == 3; }
bool g8(const Partition& l) { return ones_count(l) == 1 && body(l).size() == 4; }
bool g9(const Partition& l) { return ones_count(l) == 1 && body(l).size() >= 5; }
bool g10(const Partition& l) {
    return ones_count(l) >= 2 && !body(l).empty() && l[0] >= 3;
}
bool g11(const Partition& l) {
    return ones_count(l) >= 2 && body(l) == Partition{2};
}
bool g12(const Partition& l) {
    return ones_count(l) >= 2 && body(l) == Partition{2, 2};
}
bool g13(const Partition& l) {
    Partition b = body(l);
    return ones_count(l) >= 2 && b.size() >= 3 && b == Partition(b.size(), 2);
}
bool g14(const Partition& l) { return body(l).empty(); }

WeightedGraph b1(const Partition& l) {
    WeightedGraph w({l[0]});
    w.add_edge(0, 0);
    return w;
}

WeightedGraph b2(const Partition& l) { return path_graph({l[0], l[1]}); }

WeightedGraph b3(const Partition& l) { return complete_graph({l[0], l[1], l[2]}); }

WeightedGraph b4(const Partition& l) { return path_graph(l); }

WeightedGraph b5(const Partition& l) {
    WeightedGraph w = complete_graph({2, l[0] - 5, 2, 2});
    w.add_edge(1, 1);
    return w;
}

WeightedGraph b6(const Partition& l) {
    WeightedGraph w = complete_graph({l[0] - 1, l[1], 2});
    w.add_edge(0, 0);
    return w;
}

WeightedGraph b7(const Partition& l) {
    // Loops on the first and middle vertices; the loopless far end makes
    // the path rigid, so every slot is recoverable.
    WeightedGraph w = path_graph({l[0], l[1] + 1, l[2]});
    w.add_edge(0, 0);
    w.add_edge(1, 1);
    return w;
}

WeightedGraph b8(const Partition& l) {
    WeightedGraph w({l[0] + 1, l[1], l[2], l[3]});
    w.add_edge(0, 0);
    w.add_edge(0, 1);
    w.add_edge(0, 2);
    w.add_edge(1, 2);
    w.add_edge(1, 3);
    w.add_edge(2, 3);
    return w;
}

WeightedGraph b9(const Partition& l) {
    Partition b = body(l);
    int k = static_cast<int>(b.size());
    std::vector<int> weights(static_cast<std::size_t>(k));
    weights[0] = b[static_cast<std::size_t>(k) - 1];
    weights[1] = b[0] + 1;
    for (int i = 2; i < k; i++) weights[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i) - 1];
    WeightedGraph w(weights);
    for (int i = 0; i < k; i++) w.add_edge(i, (i + 1) % k);
    w.add_edge(0, 2);
    w.add_edge(1, 1);
    return w;
}

WeightedGraph b10(const Partition& l) {
    std::vector<int> weights = body(l);
    weights.push_back(ones_count(l));
    WeightedGraph w = path_graph(std::move(weights));
    w.add_edge(0, 0);
    return w;
}

WeightedGraph b11(const Partition& l) {
    WeightedGraph w = path_graph({2, ones_count(l) - 4, 2, 2});
    w.add_edge(1, 1);
    return w;
}

WeightedGraph b12(const Partition& l) {
    WeightedGraph w({2, ones_count(l) - 2, 2, 2});
    w.add_edge(0, 1);
    w.add_edge(0, 2);
    w.add_edge(1, 2);
    w.add_edge(2, 3);
    w.add_edge(1, 1);
    return w;
}

WeightedGraph b13(const Partition& l) {
    std::vector<int> weights = body(l);
    weights.push_back(ones_count(l));
    return complete_graph(std::move(weights));
}

WeightedGraph b14(const Partition& l) {
    WeightedGraph w = path_graph({3, ones_count(l) - 6, 3});
    w.add_edge(0, 0);
    w.add_edge(1, 1);
    w.add_edge(2, 2);
    return w;
}

} // namespace

const std::vector<InjectionCase>& injection_cases() {
    static const std::vector<InjectionCase> cases = {
        {1, "single looped vertex", g1, b1},
        {2, "loopless edge", g2, b2},
        {3, "loopless triangle", g3, b3},
        {4, "loopless path", g4, b4},
        {5, "complete on four vertices, one loop", g5, b5},
        {6, "triangle with one loop", g6, b6},
        {7, "three-vertex path, loops on first and middle", g7, b7},
        {8, "complete minus an edge, loop opposite the gap", g8, b8},
        {9, "cycle with a chord and one loop", g9, b9},
        {10, "path with a loop on the heavy end", g10, b10},
        {11, "four-vertex path with an interior loop", g11, b11},
        {12, "triangle with a pendant and one loop", g12, b12},
        {13, "loopless complete graph", g13, b13},
        {14, "three-vertex path, all looped", g14, b14},
    };
    return cases;
}

InjectionImage inject(const Partition& lambda) {
    if (lambda.empty()) throw input_error("partition must be nonempty");
    int n = 0;
    for (std::size_t i = 0; i < lambda.size(); i++) {
        if (lambda[i] < 1) throw input_error("partition parts must be positive");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw input_error("partition must be weakly decreasing");
        n += lambda[i];
    }
    if (n < 9)
        throw input_error("the case construction needs n >= 9, got n = " + std::to_string(n));

    const InjectionCase* hit = nullptr;
    for (const auto& c : injection_cases()) {
        if (!c.guard(lambda)) continue;
        if (hit) throw std::logic_error("guards overlap on " + show(lambda));
        hit = &c;
    }
    if (!hit) throw std::logic_error("no guard fires on " + show(lambda));

    InjectionImage image;
    image.case_id = hit->id;
    image.graph = hit->builder(lambda);
    if (image.graph.total_weight() != n)
        throw std::logic_error("case " + std::to_string(hit->id) + " image of " + show(lambda) +
                               " has weight sum " + std::to_string(image.graph.total_weight()));
    if (!check_brick_conditions(image.graph))
        throw std::logic_error("case " + std::to_string(hit->id) + " image of " + show(lambda) +
                               " fails the brick conditions");
    return image;
}

InjectionReport verify_injection(int n, int limit) {
    if (n < 9) throw input_error("verification starts at n = 9");
    if (n > limit)
        throw input_error("n = " + std::to_string(n) + " is above the verification limit " +
                          std::to_string(limit));

    InjectionReport report;
    report.n = n;
    std::map<WeightedCode, Partition> seen;
    for (const Partition& lambda : partitions(n)) {
        report.partition_count++;
        try {
            InjectionImage image = inject(lambda);
            WeightedCode code = weighted_canonical_code(image.graph);
            auto [it, fresh] = seen.emplace(std::move(code), lambda);
            if (!fresh)
                report.violations.push_back("partitions " + show(it->second) + " and " +
                                            show(lambda) + " map to isomorphic images");
        } catch (const std::exception& e) {
            report.violations.push_back(show(lambda) + ": " + e.what());
        }
    }
    return report;
}

} // namespace anosov
