#include "anosov/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>

#include <json.hpp>

#include "anosov/equivalence.hpp"
#include "anosov/partitions.hpp"
#include "anosov/quotient.hpp"

namespace anosov {

const int census_code_version = 1;

std::string to_string(CensusMethod m) {
    return m == CensusMethod::brute_force ? "brute" : "quotient";
}

bool BinaryMatrix::rows_distinct() const {
    for (std::size_t i = 0; i < rows.size(); i++)
        for (std::size_t j = i + 1; j < rows.size(); j++)
            if (rows[i] == rows[j]) return false;
    return true;
}

namespace {

// ---------------------------------------------------------------------
// Orbit scan over the space of symmetric t x t binary matrices (diagonal
// optional) under simultaneous row/column permutations. Masks fit in 32
// bits (t <= 7 with diagonal), adjacent transpositions generate the whole
// symmetric group, and scanning masks in increasing order makes the first
// unvisited member of each orbit its minimum.
// ---------------------------------------------------------------------

struct PairSpace {
    int t = 0;
    bool diag = false;
    int bits = 0;
    int chunks = 0;
    int gens = 0;
    int pos[8][8] = {};
    std::vector<std::array<std::uint32_t, 256>> lut; // [gen * chunks + chunk]

    PairSpace(int t_, bool diag_) : t(t_), diag(diag_) {
        int b = 0;
        for (int i = 0; i < t; i++)
            for (int j = diag ? i : i + 1; j < t; j++) pos[i][j] = b++;
        bits = b;
        if (bits > 28) throw capability_error("matrix orbit scan limited to 28 pair bits");
        chunks = (bits + 7) / 8;
        gens = t - 1;
        lut.assign(static_cast<std::size_t>(std::max(gens, 0)) * static_cast<std::size_t>(chunks), {});
        for (int a = 0; a < gens; a++) {
            int moved[28];
            for (int i = 0; i < t; i++)
                for (int j = diag ? i : i + 1; j < t; j++) {
                    auto swap_one = [&](int v) { return v == a ? a + 1 : (v == a + 1 ? a : v); };
                    int pi = swap_one(i), pj = swap_one(j);
                    if (pi > pj) std::swap(pi, pj);
                    moved[pos[i][j]] = pos[pi][pj];
                }
            for (int c = 0; c < chunks; c++) {
                auto& table = lut[static_cast<std::size_t>(a * chunks + c)];
                for (int v = 0; v < 256; v++) {
                    std::uint32_t image = 0;
                    for (int b2 = 0; b2 < 8; b2++) {
                        int src = c * 8 + b2;
                        if (src >= bits) break;
                        if ((v >> b2) & 1) image |= std::uint32_t{1} << moved[src];
                    }
                    table[static_cast<std::size_t>(v)] = image;
                }
            }
        }
    }

    std::uint32_t apply(int gen, std::uint32_t mask) const {
        std::uint32_t out = 0;
        for (int c = 0; c < chunks; c++)
            out |= lut[static_cast<std::size_t>(gen * chunks + c)][(mask >> (8 * c)) & 255u];
        return out;
    }

    int entry(std::uint32_t mask, int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<int>((mask >> pos[i][j]) & 1);
    }
};

template <class Visit>
void scan_orbits(const PairSpace& sp, Visit&& visit) {
    std::uint64_t total = std::uint64_t{1} << sp.bits;
    std::vector<std::uint64_t> visited((total + 63) / 64, 0);
    std::vector<std::uint32_t> stack;
    for (std::uint64_t m0 = 0; m0 < total; m0++) {
        if ((visited[m0 >> 6] >> (m0 & 63)) & 1) continue;
        visited[m0 >> 6] |= std::uint64_t{1} << (m0 & 63);
        stack.push_back(static_cast<std::uint32_t>(m0));
        while (!stack.empty()) {
            std::uint32_t m = stack.back();
            stack.pop_back();
            for (int a = 0; a < sp.gens; a++) {
                std::uint32_t im = sp.apply(a, m);
                if (!((visited[im >> 6] >> (im & 63)) & 1)) {
                    visited[im >> 6] |= std::uint64_t{1} << (im & 63);
                    stack.push_back(im);
                }
            }
        }
        visit(static_cast<std::uint32_t>(m0));
    }
}

// ---------------------------------------------------------------------
// Brute force over all labeled graphs on n <= 8 vertices. The adjacency
// matrix lives in one 64-bit word, one byte per row, updated one edge at a
// time along a Gray code walk over edge subsets.
// ---------------------------------------------------------------------

constexpr std::uint64_t ones8 = 0x0101010101010101ULL;

struct ByteLayout {
    int n = 0;
    int e = 0;
    std::uint64_t pattern[28] = {};
    std::uint64_t diag = 0;
    std::uint64_t vhigh = 0;

    explicit ByteLayout(int n_) : n(n_) {
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
                pattern[e++] = (std::uint64_t{1} << (8 * i + j)) | (std::uint64_t{1} << (8 * j + i));
        for (int i = 0; i < n; i++) {
            diag |= std::uint64_t{1} << (9 * i);
            vhigh |= std::uint64_t{0x80} << (8 * i);
        }
    }
};

// Does every vertex share an open or closed neighborhood with another
// vertex? Zero-byte detection per row; a spurious detector hit only ever
// occurs above a genuine match, so existence answers are exact.
bool every_vertex_twinned(std::uint64_t adj, const ByteLayout& L) {
    std::uint64_t cadj = adj | L.diag;
    for (int i = 0; i < L.n; i++) {
        std::uint64_t self = std::uint64_t{0xFF} << (8 * i);
        std::uint64_t x = (adj >> (8 * i)) & 0xFF;
        std::uint64_t y = (adj ^ (x * ones8)) | self;
        if ((((y - ones8) & ~y) & L.vhigh) != 0) continue;
        std::uint64_t cx = (cadj >> (8 * i)) & 0xFF;
        std::uint64_t z = (cadj ^ (cx * ones8)) | self;
        if ((((z - ones8) & ~z) & L.vhigh) != 0) continue;
        return false;
    }
    return true;
}

struct ByteClasses {
    int count = 0;
    std::uint8_t members[8] = {}; // vertex bitmask per class
};

ByteClasses byte_classes(std::uint64_t adj, const ByteLayout& L) {
    std::uint8_t r[8], c[8];
    for (int i = 0; i < L.n; i++) {
        r[i] = static_cast<std::uint8_t>(adj >> (8 * i));
        c[i] = static_cast<std::uint8_t>(r[i] | (1u << i));
    }
    int parent[8];
    for (int i = 0; i < L.n; i++) parent[i] = i;
    auto root = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int i = 0; i < L.n; i++)
        for (int j = i + 1; j < L.n; j++)
            if (r[i] == r[j] || c[i] == c[j]) {
                int ri = root(i), rj = root(j);
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }
    ByteClasses out;
    for (int i = 0; i < L.n; i++)
        if (root(i) == i) {
            std::uint8_t mask = 0;
            for (int j = 0; j < L.n; j++)
                if (root(j) == i) mask |= static_cast<std::uint8_t>(1u << j);
            out.members[out.count++] = mask;
        }
    return out;
}

bool bytes_connected(std::uint64_t adj, int n) {
    std::uint8_t reached = 1, frontier = 1;
    while (frontier) {
        std::uint8_t next = 0;
        std::uint8_t scan = frontier;
        while (scan) {
            int v = std::countr_zero(static_cast<unsigned>(scan));
            scan &= static_cast<std::uint8_t>(scan - 1);
            next |= static_cast<std::uint8_t>(adj >> (8 * v));
        }
        frontier = next & static_cast<std::uint8_t>(~reached);
        reached |= next;
    }
    return reached == static_cast<std::uint8_t>((1u << n) - 1);
}

SimpleGraph graph_from_bytes(std::uint64_t adj, int n) {
    SimpleGraph g(n);
    for (int i = 0; i < n; i++) g.adj[static_cast<std::size_t>(i)] = (adj >> (8 * i)) & 0xFF;
    return g;
}

template <class Consider>
void gray_scan_range(const ByteLayout& L, std::uint64_t lo, std::uint64_t hi, Consider&& consider) {
    std::uint64_t g0 = lo ^ (lo >> 1);
    std::uint64_t adj = 0;
    for (int b = 0; b < L.e; b++)
        if ((g0 >> b) & 1) adj ^= L.pattern[b];
    for (std::uint64_t i = lo; i < hi; i++) {
        consider(adj);
        std::uint64_t nxt = i + 1;
        if (nxt < hi) adj ^= L.pattern[std::countr_zero(nxt)];
    }
}

// Mode of the labeled scan: the full Anosov test, or just the class-size
// floors used by the census bounds.
enum class ScanMode { anosov, min_class_2, min_class_3_connected };

struct ScanCollector {
    const ByteLayout* layout = nullptr;
    ScanMode mode = ScanMode::anosov;
    std::map<WeightedCode, std::uint64_t> reps;

    void consider(std::uint64_t adj) {
        const ByteLayout& L = *layout;
        if (!every_vertex_twinned(adj, L)) return;
        if (mode == ScanMode::anosov) {
            ByteClasses cls = byte_classes(adj, L);
            for (int c = 0; c < cls.count; c++) {
                std::uint8_t m = cls.members[c];
                if (std::popcount(static_cast<unsigned>(m)) != 2) continue;
                int u = std::countr_zero(static_cast<unsigned>(m));
                int v = std::countr_zero(static_cast<unsigned>(m & (m - 1)));
                if ((adj >> (8 * u + v)) & 1) return;
            }
            if (!bytes_connected(adj, L.n)) return;
        } else if (mode == ScanMode::min_class_3_connected) {
            ByteClasses cls = byte_classes(adj, L);
            for (int c = 0; c < cls.count; c++)
                if (std::popcount(static_cast<unsigned>(cls.members[c])) < 3) return;
            if (!bytes_connected(adj, L.n)) return;
        }
        SimpleGraph g = graph_from_bytes(adj, L.n);
        WeightedCode code = weighted_canonical_code(quotient(g));
        reps.emplace(std::move(code), adj);
    }
};

// Quotients are a complete isomorphism invariant: every simple graph is
// recovered up to isomorphism by deconstructing its quotient, so graphs
// collide on the weighted code exactly when they are isomorphic.
std::map<WeightedCode, std::uint64_t> scan_labeled_graphs(int n, ScanMode mode, int workers) {
    ByteLayout L(n);
    std::uint64_t total = std::uint64_t{1} << L.e;
    int w = std::max(1, std::min<int>(workers, 64));
    std::vector<ScanCollector> states(static_cast<std::size_t>(w));
    std::vector<std::thread> pool;
    for (int s = 0; s < w; s++) {
        states[static_cast<std::size_t>(s)].layout = &L;
        states[static_cast<std::size_t>(s)].mode = mode;
        std::uint64_t lo = total / static_cast<std::uint64_t>(w) * static_cast<std::uint64_t>(s) +
                           std::min<std::uint64_t>(static_cast<std::uint64_t>(s), total % static_cast<std::uint64_t>(w));
        std::uint64_t hi = lo + total / static_cast<std::uint64_t>(w) +
                           (static_cast<std::uint64_t>(s) < total % static_cast<std::uint64_t>(w) ? 1 : 0);
        pool.emplace_back([&L, lo, hi, state = &states[static_cast<std::size_t>(s)]] {
            gray_scan_range(L, lo, hi, [state](std::uint64_t adj) { state->consider(adj); });
        });
    }
    for (auto& th : pool) th.join();
    std::map<WeightedCode, std::uint64_t> merged;
    for (auto& st : states)
        for (auto& kv : st.reps) merged.emplace(kv.first, kv.second);
    return merged;
}

// ---------------------------------------------------------------------
// Census by synthesis: for each type with minimum part 2, enumerate the
// weighted graphs passing the brick conditions up to weighted isomorphism,
// then deconstruct.
// ---------------------------------------------------------------------

WeightedGraph weighted_from_mask(const PairSpace& sp, std::uint32_t mask, int weight) {
    WeightedGraph w(std::vector<int>(static_cast<std::size_t>(sp.t), weight));
    for (int i = 0; i < sp.t; i++) {
        if (sp.diag && sp.entry(mask, i, i)) w.add_edge(i, i);
        for (int j = i + 1; j < sp.t; j++)
            if (sp.entry(mask, i, j)) w.add_edge(i, j);
    }
    return w;
}

void synthesize_type(const Partition& lambda, std::map<WeightedCode, WeightedGraph>& out) {
    int k = static_cast<int>(lambda.size());
    bool equal = std::all_of(lambda.begin(), lambda.end(), [&](int p) { return p == lambda[0]; });

    if (equal) {
        // All weights interchangeable: scan matrix orbits directly; the
        // orbit minimum doubles as the dedup key.
        PairSpace sp(k, lambda[0] >= 3);
        scan_orbits(sp, [&](std::uint32_t mask) {
            WeightedGraph w = weighted_from_mask(sp, mask, lambda[0]);
            if (!check_brick_conditions(w)) return;
            WeightedCode code;
            code.push_back(static_cast<std::uint32_t>(k));
            for (int i = 0; i < k; i++) code.push_back(static_cast<std::uint32_t>(lambda[0]));
            code.push_back(mask);
            out.emplace(std::move(code), std::move(w));
        });
        return;
    }

    std::vector<int> assign(lambda.rbegin(), lambda.rend()); // ascending
    int pairs = k * (k - 1) / 2;
    do {
        std::vector<int> loopable;
        for (int i = 0; i < k; i++)
            if (assign[static_cast<std::size_t>(i)] >= 3) loopable.push_back(i);
        for (std::uint32_t lsel = 0; lsel < (1u << loopable.size()); lsel++) {
            for (std::uint32_t esel = 0; esel < (std::uint32_t{1} << pairs); esel++) {
                WeightedGraph w(assign);
                for (std::size_t b = 0; b < loopable.size(); b++)
                    if ((lsel >> b) & 1) w.add_edge(loopable[b], loopable[b]);
                int e = 0;
                for (int i = 0; i < k; i++)
                    for (int j = i + 1; j < k; j++, e++)
                        if ((esel >> e) & 1) w.add_edge(i, j);
                if (!check_brick_conditions(w)) continue;
                WeightedCode code = weighted_canonical_code(w);
                out.emplace(std::move(code), std::move(w));
            }
        }
    } while (std::next_permutation(assign.begin(), assign.end()));
}

std::map<WeightedCode, WeightedGraph> synthesize_bricks(int n, int workers) {
    std::vector<Partition> types = partitions(n, 2);
    int w = std::max(1, std::min<int>(workers, 64));
    std::vector<std::map<WeightedCode, WeightedGraph>> partial(static_cast<std::size_t>(w));
    std::vector<std::thread> pool;
    for (int s = 0; s < w; s++)
        pool.emplace_back([&, s] {
            for (std::size_t i = static_cast<std::size_t>(s); i < types.size(); i += static_cast<std::size_t>(w))
                synthesize_type(types[i], partial[static_cast<std::size_t>(s)]);
        });
    for (auto& th : pool) th.join();
    std::map<WeightedCode, WeightedGraph> merged;
    for (auto& p : partial)
        for (auto& kv : p) merged.emplace(kv.first, kv.second);
    return merged;
}

// ---------------------------------------------------------------------
// Cache
// ---------------------------------------------------------------------

std::string cache_file(const std::string& dir, int n, CensusMethod method) {
    return dir + "/census-n" + std::to_string(n) + "-" + to_string(method) + "-v" +
           std::to_string(census_code_version) + ".json";
}

bool load_cache(const std::string& dir, int n, CensusMethod method, CensusResult& out) {
    std::ifstream in(cache_file(dir, n, method));
    if (!in) return false;
    try {
        nlohmann::json doc = nlohmann::json::parse(in);
        if (doc.at("n").get<int>() != n) return false;
        if (doc.at("method").get<std::string>() != to_string(method)) return false;
        if (doc.at("version").get<int>() != census_code_version) return false;
        int pair_bits = n * (n - 1) / 2;
        std::size_t want = static_cast<std::size_t>((pair_bits + 7) / 8);
        std::vector<CanonicalCode> codes;
        for (const auto& item : doc.at("codes")) {
            std::string hex = item.get<std::string>();
            if (hex.size() != want * 2) return false;
            CanonicalCode c;
            c.n = n;
            for (std::size_t i = 0; i < want; i++) {
                auto nibble = [&](char ch) -> int {
                    if (ch >= '0' && ch <= '9') return ch - '0';
                    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
                    return -1;
                };
                int hi = nibble(hex[2 * i]), lo = nibble(hex[2 * i + 1]);
                if (hi < 0 || lo < 0) return false;
                c.bytes.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
            }
            codes.push_back(std::move(c));
        }
        if (!std::is_sorted(codes.begin(), codes.end())) return false;
        out.n = n;
        out.method = method;
        out.codes = std::move(codes);
        out.count = out.codes.size();
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

void store_cache(const std::string& dir, const CensusResult& r) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw input_error("cannot create cache directory " + dir);
    nlohmann::json doc;
    doc["n"] = r.n;
    doc["method"] = to_string(r.method);
    doc["version"] = census_code_version;
    nlohmann::json codes = nlohmann::json::array();
    for (const auto& c : r.codes) codes.push_back(c.hex());
    doc["codes"] = std::move(codes);
    std::ofstream outf(cache_file(dir, r.n, r.method));
    if (!outf) throw input_error("cannot write cache file in " + dir);
    outf << doc.dump() << "\n";
}

} // namespace

CensusResult enumerate_anosov(int n, CensusMethod method, int workers, const std::string& cache_dir) {
    if (n < 1) throw input_error("census needs at least one vertex");
    if (workers < 1) throw input_error("worker count must be positive");
    if (method == CensusMethod::brute_force && n > 8)
        throw capability_error("brute force census capped at 8 vertices, got " + std::to_string(n));
    if (method == CensusMethod::quotient_synthesis && n > 14)
        throw capability_error("synthesis census capped at 14 vertices, got " + std::to_string(n));

    CensusResult result;
    if (!cache_dir.empty() && load_cache(cache_dir, n, method, result)) return result;

    result.n = n;
    result.method = method;

    std::vector<CanonicalCode> codes;
    if (method == CensusMethod::brute_force) {
        auto reps = scan_labeled_graphs(n, ScanMode::anosov, workers);
        codes.reserve(reps.size());
        for (const auto& kv : reps) codes.push_back(canonical_code(graph_from_bytes(kv.second, n)));
    } else {
        auto bricks = synthesize_bricks(n, workers);
        codes.reserve(bricks.size());
        for (const auto& kv : bricks)
            codes.push_back(canonical_code(deconstruct(kv.second), 16));
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    result.codes = std::move(codes);
    result.count = result.codes.size();

    if (!cache_dir.empty()) store_cache(cache_dir, result);
    return result;
}

std::uint64_t count_upper_types(int n) {
    if (n < 1) throw input_error("count needs at least one vertex");
    if (n > 8) throw capability_error("type counting capped at 8 vertices, got " + std::to_string(n));
    return scan_labeled_graphs(n, ScanMode::min_class_2, 1).size();
}

std::uint64_t count_lower_types(int n) {
    if (n < 1) throw input_error("count needs at least one vertex");
    if (n > 8) throw capability_error("type counting capped at 8 vertices, got " + std::to_string(n));
    return scan_labeled_graphs(n, ScanMode::min_class_3_connected, 1).size();
}

std::uint64_t compute_X(int t, bool allow_large) {
    if (t < 1) throw input_error("matrix order must be positive");
    if (t > 7)
        throw capability_error("X(t) enumeration capped at t = 7, got " + std::to_string(t));
    if (t == 7 && !allow_large)
        throw capability_error("X(7) scans 2^28 matrices; pass the explicit opt-in to run it");

    PairSpace sp(t, true);
    std::uint64_t count = 0;
    scan_orbits(sp, [&](std::uint32_t mask) {
        std::uint64_t rows[7] = {};
        for (int i = 0; i < t; i++)
            for (int j = 0; j < t; j++)
                if (sp.entry(mask, i, j)) rows[i] |= std::uint64_t{1} << j;
        for (int i = 0; i < t; i++)
            for (int j = i + 1; j < t; j++)
                if (rows[i] == rows[j]) return;
        count++;
    });
    return count;
}

BinaryMatrix string_to_matrix(const std::string& alpha) {
    if (alpha.empty()) throw input_error("binary string must be nonempty");
    if (alpha.size() > 64) throw input_error("binary string longer than 64");
    int t = static_cast<int>(alpha.size());
    for (char ch : alpha)
        if (ch != '0' && ch != '1')
            throw input_error(std::string("binary string may contain only 0 and 1, got '") + ch + "'");

    BinaryMatrix m;
    m.t = t;
    m.rows.assign(static_cast<std::size_t>(t), 0);
    for (int i = 0; i < t; i++)
        for (int j = 0; j < t; j++) {
            int bit;
            if (i == j)
                bit = alpha[static_cast<std::size_t>(i)] == '0' ? 1 : 0;
            else
                bit = alpha[static_cast<std::size_t>(std::max(i, j))] == '1' ? 1 : 0;
            if (bit) m.rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
        }
    return m;
}

std::vector<SimpleGraph> connected_graph_classes(int k, int edge_count) {
    if (k < 1) throw input_error("graph order must be positive");
    if (edge_count < 0) throw input_error("edge count must be nonnegative");
    if (k > 7) throw capability_error("connected graph enumeration capped at 7 vertices");

    int pairs = k * (k - 1) / 2;
    if (edge_count > pairs) return {};
    std::vector<CanonicalCode> seen;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); mask++) {
        if (std::popcount(mask) != edge_count) continue;
        SimpleGraph g(k);
        int e = 0;
        for (int i = 0; i < k; i++)
            for (int j = i + 1; j < k; j++, e++)
                if ((mask >> e) & 1) g.add_edge(i, j);
        if (!is_connected(g)) continue;
        seen.push_back(canonical_code(g));
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    std::vector<SimpleGraph> out;
    out.reserve(seen.size());
    for (const auto& c : seen) out.push_back(graph_from_code(c));
    return out;
}

} // namespace anosov
