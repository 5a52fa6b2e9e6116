#include "anosov/quotient.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace anosov {

WeightedGraph::WeightedGraph(std::vector<int> weights) {
    if (static_cast<int>(weights.size()) > max_vertices)
        throw input_error("weighted graph size " + std::to_string(weights.size()) +
                          " exceeds the cap of " + std::to_string(max_vertices));
    k = static_cast<int>(weights.size());
    wt = std::move(weights);
    for (int w : wt)
        if (w < 1) throw input_error("weights must be positive");
    adj.assign(static_cast<std::size_t>(k), 0);
}

void WeightedGraph::check_vertex(int v) const {
    if (v < 0 || v >= k)
        throw input_error("vertex " + std::to_string(v) + " out of range for k = " +
                          std::to_string(k));
}

void WeightedGraph::add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) {
        loops |= std::uint64_t{1} << i;
        return;
    }
    adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
}

bool WeightedGraph::has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) return has_loop(i);
    return (adj[static_cast<std::size_t>(i)] >> j) & 1;
}

bool WeightedGraph::has_loop(int i) const {
    check_vertex(i);
    return (loops >> i) & 1;
}

int WeightedGraph::loop_count() const { return std::popcount(loops); }

int WeightedGraph::cross_edge_count() const {
    int total = 0;
    for (int i = 0; i < k; i++) total += std::popcount(adj[static_cast<std::size_t>(i)]);
    return total / 2;
}

std::vector<std::pair<int, int>> WeightedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < k; i++) {
        if (has_loop(i)) out.emplace_back(i, i);
        for (int j = i + 1; j < k; j++)
            if (has_edge(i, j)) out.emplace_back(i, j);
    }
    return out;
}

int WeightedGraph::total_weight() const { return std::accumulate(wt.begin(), wt.end(), 0); }

WeightedGraph quotient(const SimpleGraph& g) {
    EquivalenceDecomposition d = decompose(g);
    std::vector<int> weights;
    weights.reserve(d.classes.size());
    for (const auto& c : d.classes) weights.push_back(static_cast<int>(c.vertices.size()));

    WeightedGraph w(weights);
    for (std::size_t i = 0; i < d.classes.size(); i++) {
        if (d.classes[i].kind == ClassKind::complete) w.add_edge(static_cast<int>(i), static_cast<int>(i));
        for (std::size_t j = i + 1; j < d.classes.size(); j++) {
            // Adjacency between distinct classes is all or nothing, so one
            // representative pair decides it.
            if (g.has_edge(d.classes[i].vertices[0], d.classes[j].vertices[0]))
                w.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return w;
}

SimpleGraph deconstruct(const WeightedGraph& w) {
    for (int v : w.wt)
        if (v < 1) throw input_error("deconstruction requires positive weights");
    int n = w.total_weight();
    if (n > SimpleGraph::max_vertices)
        throw capability_error("deconstruction on " + std::to_string(n) +
                               " vertices exceeds the cap of " +
                               std::to_string(SimpleGraph::max_vertices));

    std::vector<int> start(static_cast<std::size_t>(w.k) + 1, 0);
    for (int i = 0; i < w.k; i++)
        start[static_cast<std::size_t>(i) + 1] = start[static_cast<std::size_t>(i)] + w.wt[static_cast<std::size_t>(i)];

    SimpleGraph g(n);
    for (int i = 0; i < w.k; i++) {
        if (w.has_loop(i))
            for (int a = start[static_cast<std::size_t>(i)]; a < start[static_cast<std::size_t>(i) + 1]; a++)
                for (int b = a + 1; b < start[static_cast<std::size_t>(i) + 1]; b++) g.add_edge(a, b);
        for (int j = i + 1; j < w.k; j++) {
            if (!w.has_edge(i, j)) continue;
            for (int a = start[static_cast<std::size_t>(i)]; a < start[static_cast<std::size_t>(i) + 1]; a++)
                for (int b = start[static_cast<std::size_t>(j)]; b < start[static_cast<std::size_t>(j) + 1]; b++)
                    g.add_edge(a, b);
        }
    }
    return g;
}

bool is_connected(const WeightedGraph& w) {
    if (w.k == 0) throw input_error("connectivity of the empty weighted graph is undefined");
    std::uint64_t reached = 1;
    std::uint64_t frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t scan = frontier;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            next |= w.adj[static_cast<std::size_t>(v)];
        }
        frontier = next & ~reached;
        reached |= next;
    }
    std::uint64_t all = (w.k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << w.k) - 1);
    return reached == all;
}

bool check_anosov_criteria(const WeightedGraph& w) {
    if (w.k == 0) throw input_error("empty weighted graph");
    if (!is_connected(w)) return false;
    for (int i = 0; i < w.k; i++) {
        if (w.wt[static_cast<std::size_t>(i)] < 2) return false;
        if (w.wt[static_cast<std::size_t>(i)] == 2 && w.has_loop(i)) return false;
    }
    // A single loopless block deconstructs to an edgeless graph, which is
    // disconnected for weight >= 2.
    if (w.k == 1 && !w.has_loop(0)) return false;
    return true;
}

bool check_brick_conditions(const WeightedGraph& w) {
    if (w.k == 0) throw input_error("empty weighted graph");

    // Neighborhood formulation: looped pairs must differ in closed
    // neighborhoods, loopless pairs in open ones.
    bool neighborhoods_ok = true;
    for (int i = 0; i < w.k && neighborhoods_ok; i++) {
        for (int j = i + 1; j < w.k; j++) {
            bool li = w.has_loop(i), lj = w.has_loop(j);
            std::uint64_t ri = w.adj[static_cast<std::size_t>(i)];
            std::uint64_t rj = w.adj[static_cast<std::size_t>(j)];
            if (li && lj &&
                (ri | (std::uint64_t{1} << i)) == (rj | (std::uint64_t{1} << j))) {
                neighborhoods_ok = false;
                break;
            }
            if (!li && !lj && ri == rj) {
                neighborhoods_ok = false;
                break;
            }
        }
    }

    // Matrix formulation: adjacency with loops on the diagonal has no
    // repeated rows.
    bool rows_ok = true;
    for (int i = 0; i < w.k && rows_ok; i++) {
        std::uint64_t ri = w.adj[static_cast<std::size_t>(i)] |
                           (w.has_loop(i) ? (std::uint64_t{1} << i) : 0);
        for (int j = i + 1; j < w.k; j++) {
            std::uint64_t rj = w.adj[static_cast<std::size_t>(j)] |
                               (w.has_loop(j) ? (std::uint64_t{1} << j) : 0);
            if (ri == rj) {
                rows_ok = false;
                break;
            }
        }
    }

    if (neighborhoods_ok != rows_ok)
        throw std::logic_error("distinctness formulations disagree");

    return check_anosov_criteria(w) && rows_ok;
}

namespace {

// Append (loops, cross adjacency) bits for the relabeling in perm, packed
// into 32-bit words most significant bit first.
void append_bits(WeightedCode& code, const WeightedGraph& w, const std::vector<int>& perm) {
    int k = w.k;
    std::uint32_t word = 0;
    int filled = 0;
    auto push_bit = [&](int b) {
        word = (word << 1) | static_cast<std::uint32_t>(b);
        if (++filled == 32) {
            code.push_back(word);
            word = 0;
            filled = 0;
        }
    };
    for (int p = 0; p < k; p++) push_bit(w.has_loop(perm[static_cast<std::size_t>(p)]) ? 1 : 0);
    for (int p = 0; p < k; p++)
        for (int q = p + 1; q < k; q++)
            push_bit(w.has_edge(perm[static_cast<std::size_t>(p)], perm[static_cast<std::size_t>(q)]) ? 1 : 0);
    if (filled > 0) code.push_back(word << (32 - filled));
}

} // namespace

WeightedCode weighted_canonical_code(const WeightedGraph& w, int cutoff) {
    if (w.k > cutoff)
        throw capability_error("weighted_canonical_code: " + std::to_string(w.k) +
                               " vertices exceeds the cutoff of " + std::to_string(cutoff));

    // The code opens with the weight sequence, so a minimizing relabeling
    // must sort weights ascending; only the order within equal-weight
    // groups is free.
    std::vector<int> order(static_cast<std::size_t>(w.k));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (w.wt[static_cast<std::size_t>(a)] != w.wt[static_cast<std::size_t>(b)])
            return w.wt[static_cast<std::size_t>(a)] < w.wt[static_cast<std::size_t>(b)];
        return a < b;
    });

    WeightedCode prefix;
    prefix.push_back(static_cast<std::uint32_t>(w.k));
    for (int p : order) prefix.push_back(static_cast<std::uint32_t>(w.wt[static_cast<std::size_t>(p)]));

    std::vector<std::pair<std::size_t, std::size_t>> groups;
    std::size_t at = 0;
    while (at < order.size()) {
        std::size_t to = at;
        while (to < order.size() &&
               w.wt[static_cast<std::size_t>(order[to])] == w.wt[static_cast<std::size_t>(order[at])])
            to++;
        groups.emplace_back(at, to);
        at = to;
    }

    WeightedCode best;
    bool have_best = false;
    std::vector<int> perm = order;

    // Odometer over the per-group permutations.
    std::vector<std::vector<int>> group_perm;
    for (auto [lo, hi] : groups)
        group_perm.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                order.begin() + static_cast<std::ptrdiff_t>(hi));

    auto evaluate = [&]() {
        WeightedCode code = prefix;
        append_bits(code, w, perm);
        if (!have_best || code < best) {
            best = std::move(code);
            have_best = true;
        }
    };

    auto rec = [&](auto&& self, std::size_t gi) -> void {
        if (gi == groups.size()) {
            evaluate();
            return;
        }
        auto [lo, hi] = groups[gi];
        std::vector<int>& gp = group_perm[gi];
        std::sort(gp.begin(), gp.end());
        do {
            std::copy(gp.begin(), gp.end(), perm.begin() + static_cast<std::ptrdiff_t>(lo));
            self(self, gi + 1);
        } while (std::next_permutation(gp.begin(), gp.end()));
    };
    rec(rec, 0);

    return best;
}

std::string weighted_code_hex(const WeightedCode& code) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(code.size() * 8);
    for (std::uint32_t word : code)
        for (int s = 28; s >= 0; s -= 4) out.push_back(digits[(word >> s) & 15]);
    return out;
}

} // namespace anosov
