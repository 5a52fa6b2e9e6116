#include "anosov/canonical.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace anosov {

namespace {

// Up to 120 upper-triangle bits (n = 16), packed most significant first so
// numeric comparison equals lexicographic comparison of the bitstring.
struct PackedCode {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    void set(int pos) {
        if (pos < 64)
            hi |= std::uint64_t{1} << (63 - pos);
        else
            lo |= std::uint64_t{1} << (127 - pos);
    }
    int get(int pos) const {
        if (pos < 64) return static_cast<int>((hi >> (63 - pos)) & 1);
        return static_cast<int>((lo >> (127 - pos)) & 1);
    }
    bool operator<(const PackedCode& o) const {
        if (hi != o.hi) return hi < o.hi;
        return lo < o.lo;
    }
};

struct Search {
    int n = 0;
    const std::uint64_t* adj = nullptr;
    std::uint64_t min_degree_set = 0;
    int perm[SimpleGraph::max_vertices] = {};
    bool used[SimpleGraph::max_vertices] = {};
    PackedCode best;
    bool have_best = false;

    PackedCode leaf_code() const {
        PackedCode c;
        int pos = 0;
        for (int i = 0; i < n; i++) {
            std::uint64_t row = adj[perm[i]];
            for (int j = i + 1; j < n; j++, pos++)
                if ((row >> perm[j]) & 1) c.set(pos);
        }
        return c;
    }

    // A transposition of two vertices is a graph automorphism exactly when
    // they share an open or a closed neighborhood, so at any search node
    // such candidates lead to identical subtree minima and all but the
    // first can be skipped.
    static bool interchangeable(const std::uint64_t* adj, int u, int v) {
        if (adj[u] == adj[v]) return true;
        std::uint64_t cu = adj[u] | (std::uint64_t{1} << u);
        std::uint64_t cv = adj[v] | (std::uint64_t{1} << v);
        return cu == cv;
    }

    // tied means the first-row bits chosen so far equal the current best's.
    void dfs(int r, bool tied) {
        if (r == n) {
            PackedCode c = leaf_code();
            if (!have_best || c < best) {
                best = c;
                have_best = true;
            }
            return;
        }
        int tried[SimpleGraph::max_vertices];
        int tried_count = 0;
        for (int v = 0; v < n; v++) {
            if (used[v]) continue;
            if (r == 0 && !((min_degree_set >> v) & 1)) continue;
            bool skip = false;
            for (int t = 0; t < tried_count; t++) {
                if (interchangeable(adj, tried[t], v)) {
                    skip = true;
                    break;
                }
            }
            if (skip) continue;
            tried[tried_count++] = v;

            bool child_tied = tied;
            if (r >= 1 && tied && have_best) {
                int newbit = static_cast<int>((adj[perm[0]] >> v) & 1);
                int bestbit = best.get(r - 1);
                if (newbit > bestbit) continue;
                if (newbit < bestbit) child_tied = false;
            }
            used[v] = true;
            perm[r] = v;
            dfs(r + 1, child_tied);
            used[v] = false;
        }
    }
};

} // namespace

CanonicalCode canonical_code(const SimpleGraph& g, int cutoff) {
    constexpr int packing_limit = 16;
    if (cutoff < 0) throw input_error("canonicalization cutoff must be nonnegative");
    if (g.n > packing_limit)
        throw capability_error("canonical_code: " + std::to_string(g.n) +
                               " vertices exceeds the packing limit of 16");
    if (g.n > cutoff)
        throw capability_error("canonical_code: " + std::to_string(g.n) +
                               " vertices exceeds the cutoff of " + std::to_string(cutoff));

    CanonicalCode out;
    out.n = g.n;
    int pair_bits = g.n * (g.n - 1) / 2;
    out.bytes.assign(static_cast<std::size_t>((pair_bits + 7) / 8), 0);
    if (g.n <= 1) return out;

    Search s;
    s.n = g.n;
    s.adj = g.adj.data();
    int dmin = g.n;
    for (int v = 0; v < g.n; v++) dmin = std::min(dmin, std::popcount(g.adj[v]));
    for (int v = 0; v < g.n; v++)
        if (std::popcount(g.adj[v]) == dmin) s.min_degree_set |= std::uint64_t{1} << v;
    s.dfs(0, true);

    for (int t = 0; t < pair_bits; t++)
        if (s.best.get(t)) out.bytes[static_cast<std::size_t>(t >> 3)] |=
            static_cast<std::uint8_t>(1u << (7 - (t & 7)));
    return out;
}

SimpleGraph graph_from_code(const CanonicalCode& code) {
    if (code.n < 0 || code.n > SimpleGraph::max_vertices)
        throw input_error("canonical code has an invalid vertex count");
    int pair_bits = code.n * (code.n - 1) / 2;
    if (code.bytes.size() != static_cast<std::size_t>((pair_bits + 7) / 8))
        throw input_error("canonical code byte length does not match its vertex count");
    SimpleGraph g(code.n);
    int t = 0;
    for (int i = 0; i < code.n; i++)
        for (int j = i + 1; j < code.n; j++, t++)
            if ((code.bytes[static_cast<std::size_t>(t >> 3)] >> (7 - (t & 7))) & 1)
                g.add_edge(i, j);
    return g;
}

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 15]);
    }
    return out;
}

} // namespace anosov
