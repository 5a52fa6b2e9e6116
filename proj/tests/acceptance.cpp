// Acceptance run: one line per criterion, nonzero exit when any fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "anosov/bounds.hpp"
#include "anosov/census.hpp"
#include "anosov/equivalence.hpp"
#include "anosov/errors.hpp"
#include "anosov/graph.hpp"
#include "anosov/injection.hpp"
#include "anosov/lie.hpp"
#include "anosov/partitions.hpp"
#include "anosov/quotient.hpp"

using namespace anosov;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

std::string seconds_since(Clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    std::ostringstream ss;
    ss.setf(std::ios::fixed);
    ss.precision(1);
    ss << " (" << ms.count() / 1000.0 << " s)";
    return ss.str();
}

void report(int id, bool pass, const std::string& detail) {
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " - " << detail
              << "\n";
    std::cout.flush();
    if (!pass) ++failures;
}

template <typename Body>
void criterion(int id, Body body) {
    auto start = Clock::now();
    try {
        auto [pass, detail] = body();
        report(id, pass, detail + seconds_since(start));
    } catch (const std::exception& e) {
        report(id, false, std::string("exception: ") + e.what() + seconds_since(start));
    }
}

SimpleGraph graph_from_mask(int n, std::uint64_t mask) {
    SimpleGraph g(n);
    int slot = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++slot)
            if (mask >> slot & 1) g.add_edge(i, j);
    return g;
}

SimpleGraph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    SimpleGraph g(n);
    std::vector<int> part_of;
    for (std::size_t a = 0; a < parts.size(); ++a)
        for (int i = 0; i < parts[a]; ++i) part_of.push_back(static_cast<int>(a));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) g.add_edge(i, j);
    return g;
}

WeightedGraph weighted(const std::vector<int>& wt, const std::vector<std::pair<int, int>>& edges) {
    WeightedGraph w(wt);
    for (auto [i, j] : edges) w.add_edge(i, j);
    return w;
}

// Direct transcription of the published membership procedure: per-vertex
// partner lists, deduplicated by first appearance, then the class size
// rules. Kept separate from the library so the two can disagree.
bool reference_is_anosov(const SimpleGraph& g, bool allow_disconnected) {
    int n = g.n;
    if (!is_connected(g) && !allow_disconnected) return false;
    std::vector<std::vector<int>> classes;
    auto neighbors = [&](int v) {
        std::vector<int> out;
        for (int u = 0; u < n; ++u)
            if (g.has_edge(v, u)) out.push_back(u);
        return out;
    };
    for (int v = 0; v < n; ++v) {
        auto nv = neighbors(v);
        auto cv = nv;
        cv.push_back(v);
        std::sort(cv.begin(), cv.end());
        std::vector<int> cls = {v};
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            auto nu = neighbors(u);
            auto cu = nu;
            cu.push_back(u);
            std::sort(cu.begin(), cu.end());
            if (nv == nu || cv == cu) {
                cls.push_back(u);
                std::sort(cls.begin(), cls.end());
            }
        }
        bool seen = false;
        for (const auto& c : classes)
            if (c == cls) seen = true;
        if (!seen) classes.push_back(cls);
    }
    for (const auto& c : classes) {
        if (c.size() == 1) return false;
        if (c.size() == 2) {
            for (int a : c)
                for (int b : c)
                    if (neighbors(a) != neighbors(b)) return false;
        }
    }
    return true;
}

} // namespace

int main() {
    std::map<int, std::size_t> census_counts;
    std::map<int, std::vector<CanonicalCode>> census_codes;

    criterion(1, [&] {
        const std::size_t want[] = {0, 0, 0, 1, 2, 3, 6, 9};
        bool ok = true;
        for (int n = 3; n <= 7; ++n) {
            auto brute = enumerate_anosov(n, CensusMethod::brute_force);
            auto synth = enumerate_anosov(n, CensusMethod::quotient_synthesis);
            if (brute.count != want[n] || synth.count != want[n]) ok = false;
            if (brute.codes != synth.codes) ok = false;
            census_counts[n] = synth.count;
            census_codes[n] = synth.codes;
        }
        return std::pair{ok, std::string(
            "census counts 1, 2, 3, 6, 9 for n = 3..7 by both methods, identical code sets")};
    });

    criterion(2, [&] {
        auto brute = enumerate_anosov(8, CensusMethod::brute_force, 2);
        auto synth = enumerate_anosov(8, CensusMethod::quotient_synthesis);
        bool ok = brute.count == synth.count && brute.codes == synth.codes;
        census_counts[8] = synth.count;
        std::ostringstream ss;
        ss << "n = 8 census: brute force and synthesis both find " << synth.count
           << " classes";
        return std::pair{ok, ss.str()};
    });

    criterion(3, [&] {
        bool ok = true;
        for (int n = 3; n <= 7; ++n) {
            auto lower = count_lower_types(n);
            auto upper = count_upper_types(n);
            auto a = static_cast<std::uint64_t>(census_counts.at(n));
            if (!(lower <= a && a <= upper)) ok = false;
        }
        return std::pair{ok, std::string("type-count sandwich L(n) <= a(n) <= U(n) for n = 3..7")};
    });

    criterion(4, [&] {
        std::map<int, std::uint64_t> xs;
        for (int t = 1; t <= 4; ++t) xs[t] = compute_X(t);
        bool ok = true;
        for (int n = 3; n <= 7; ++n) {
            auto b = big_one_bounds(n, xs);
            auto a = static_cast<long long>(census_counts.at(n));
            if (!b.lower.leq_int(a)) ok = false;
            if (!(a <= static_cast<long long>(b.upper))) ok = false;
        }
        return std::pair{ok,
                         std::string("arrangement bounds bracket a(n) for n = 3..7")};
    });

    criterion(5, [&] {
        bool ok = compute_X(1) == 2 && compute_X(2) == 4;
        std::uint64_t fact = 1;
        for (int t = 2; t <= 5; ++t) {
            fact *= static_cast<std::uint64_t>(t);
            auto x = compute_X(t);
            if (!((std::uint64_t{1} << t) <= x * fact)) ok = false;
            if (!(product_lower_bound(t) <= x * fact)) ok = false;
            if (!(x <= (std::uint64_t{1} << (t * (t + 1) / 2)))) ok = false;
        }
        return std::pair{
            ok, std::string("X(1) = 2, X(2) = 4, product floors and the matrix ceiling for t <= 5")};
    });

    criterion(6, [&] {
        long long criteria_hits = 0, brick_hits = 0, counterexamples = 0;
        for (int k = 1; k <= 4; ++k) {
            int pairs = k * (k - 1) / 2;
            std::vector<int> wt(k, 1);
            while (true) {
                for (std::uint64_t loops = 0; loops < (std::uint64_t{1} << k); ++loops) {
                    for (std::uint64_t cross = 0; cross < (std::uint64_t{1} << pairs);
                         ++cross) {
                        WeightedGraph w(wt);
                        for (int i = 0; i < k; ++i)
                            if (loops >> i & 1) w.add_edge(i, i);
                        int slot = 0;
                        for (int i = 0; i < k; ++i)
                            for (int j = i + 1; j < k; ++j, ++slot)
                                if (cross >> slot & 1) w.add_edge(i, j);

                        if (check_anosov_criteria(w)) {
                            ++criteria_hits;
                            if (!is_anosov(deconstruct(w))) ++counterexamples;
                        }
                        if (check_brick_conditions(w)) {
                            ++brick_hits;
                            auto d = deconstruct(w);
                            auto q = quotient(d);
                            if (weighted_canonical_code(q) != weighted_canonical_code(w))
                                ++counterexamples;
                        }
                    }
                }
                int pos = k - 1;
                while (pos >= 0 && wt[pos] == 4) wt[pos--] = 1;
                if (pos < 0) break;
                ++wt[pos];
            }
        }
        std::ostringstream ss;
        ss << "round trips over k <= 4, weights <= 4: " << criteria_hits
           << " criteria passes give Anosov deconstructions, " << brick_hits
           << " brick passes give exact quotient round trips, " << counterexamples
           << " counterexamples";
        return std::pair{counterexamples == 0 && criteria_hits > 0 && brick_hits > 0,
                         ss.str()};
    });

    criterion(7, [&] {
        bool ok = true;
        for (int w = 20; w <= 40; w += 4) {
            for (const auto& mem : nu_family_members(w)) {
                auto d = deconstruct(mem.graph);
                if (!is_anosov(d)) ok = false;
                if (d.n + d.edge_count() != w) ok = false;
            }
            auto count = nu_family_count(w);
            if (!count_exceeds_nu_bound(count.total, w, NuFormula::paper)) ok = false;
        }
        return std::pair{
            ok, std::string("family members at w = 20, 24, ..., 40 are Anosov with n + m = w, "
                            "counts exceed the growth floor exactly")};
    });

    criterion(8, [&] {
        bool ok = true;
        std::ostringstream ss;
        ss << "partition images pass brick conditions and stay pairwise distinct";
        for (int n = 9; n <= 12; ++n) {
            auto rep = verify_injection(n);
            if (!rep.ok()) ok = false;
            auto a = enumerate_anosov(n, CensusMethod::quotient_synthesis).count;
            if (!(rep.partition_count <= a)) ok = false;
            ss << (n == 9 ? ": " : ", ") << "p(" << n << ") = " << rep.partition_count
               << " <= a(" << n << ") = " << a;
        }
        return std::pair{ok, ss.str()};
    });

    criterion(9, [&] {
        struct Entry {
            SimpleGraph g;
            WeightedGraph q;
        };
        auto tri = [](const std::vector<int>& wt, bool loop_mid) {
            WeightedGraph w(wt);
            w.add_edge(0, 1);
            w.add_edge(0, 2);
            w.add_edge(1, 2);
            if (loop_mid) w.add_edge(1, 1);
            return w;
        };
        std::vector<Entry> table;
        // Three vertices.
        table.push_back({complete_multipartite({1, 1, 1}), weighted({3}, {{0, 0}})});
        // Four vertices.
        table.push_back({complete_multipartite({1, 1, 1, 1}), weighted({4}, {{0, 0}})});
        table.push_back({complete_multipartite({2, 2}), weighted({2, 2}, {{0, 1}})});
        // Five vertices.
        table.push_back({complete_multipartite({1, 1, 1, 1, 1}), weighted({5}, {{0, 0}})});
        table.push_back({complete_multipartite({2, 1, 1, 1}),
                         weighted({3, 2}, {{0, 0}, {0, 1}})});
        table.push_back({complete_multipartite({3, 2}), weighted({3, 2}, {{0, 1}})});
        // Six vertices.
        table.push_back(
            {complete_multipartite({1, 1, 1, 1, 1, 1}), weighted({6}, {{0, 0}})});
        table.push_back({complete_multipartite({2, 1, 1, 1, 1}),
                         weighted({4, 2}, {{0, 0}, {0, 1}})});
        table.push_back({complete_multipartite({4, 2}), weighted({4, 2}, {{0, 1}})});
        table.push_back({complete_multipartite({3, 1, 1, 1}),
                         weighted({3, 3}, {{0, 0}, {0, 1}})});
        table.push_back({complete_multipartite({3, 3}), weighted({3, 3}, {{0, 1}})});
        table.push_back({complete_multipartite({2, 2, 2}), tri({2, 2, 2}, false)});
        // Seven vertices.
        table.push_back(
            {complete_multipartite({1, 1, 1, 1, 1, 1, 1}), weighted({7}, {{0, 0}})});
        table.push_back({complete_multipartite({2, 1, 1, 1, 1, 1}),
                         weighted({5, 2}, {{0, 0}, {0, 1}})});
        table.push_back({complete_multipartite({5, 2}), weighted({5, 2}, {{0, 1}})});
        table.push_back({complete_multipartite({3, 1, 1, 1, 1}),
                         weighted({4, 3}, {{0, 0}, {0, 1}})});
        table.push_back({complete_multipartite({4, 1, 1, 1}),
                         weighted({4, 3}, {{1, 1}, {0, 1}})});
        table.push_back({complete_multipartite({4, 3}), weighted({4, 3}, {{0, 1}})});
        table.push_back({complete_multipartite({2, 2, 1, 1, 1}), tri({2, 3, 2}, true)});
        table.push_back({complete_multipartite({2, 2, 3}), tri({2, 3, 2}, false)});
        {
            // Hub pair joined to everything else, complete triple at the end.
            SimpleGraph g(7);
            for (int a : {0, 1})
                for (int b = 2; b <= 6; ++b) g.add_edge(a, b);
            g.add_edge(4, 5);
            g.add_edge(4, 6);
            g.add_edge(5, 6);
            table.push_back({g, weighted({3, 2, 2}, {{0, 0}, {0, 1}, {1, 2}})});
        }

        bool ok = table.size() == 21;
        std::map<int, std::set<CanonicalCode>> seen;
        for (const auto& e : table) {
            auto q = quotient(e.g);
            if (weighted_canonical_code(q) != weighted_canonical_code(e.q)) ok = false;
            seen[e.g.n].insert(canonical_code(e.g));
        }
        // The tabulated graphs are exactly the census classes per n.
        for (int n = 3; n <= 7; ++n) {
            std::set<CanonicalCode> census(census_codes[n].begin(), census_codes[n].end());
            if (seen[n] != census) ok = false;
        }
        return std::pair{
            ok, std::string("all 21 tabulated graphs on 3..7 vertices quotient to their "
                            "listed weighted graphs and cover the census exactly")};
    });

    criterion(10, [&] {
        long long checked = 0, disagreements = 0;
        for (int n = 1; n <= 6; ++n) {
            int pairs = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                auto g = graph_from_mask(n, mask);
                for (bool allow : {false, true}) {
                    ++checked;
                    if (is_anosov(g, allow) != reference_is_anosov(g, allow))
                        ++disagreements;
                }
            }
        }
        std::ostringstream ss;
        ss << "is_anosov matches the reference procedure on " << checked
           << " (graph, mode) pairs with n <= 6, " << disagreements << " disagreements";
        return std::pair{disagreements == 0, ss.str()};
    });

    criterion(11, [&] {
        long long checked = 0;
        bool ok = true;
        for (int n = 1; n <= 5; ++n) {
            int pairs = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                auto g = graph_from_mask(n, mask);
                auto L = build_lie_algebra(g);
                ++checked;
                if (L.dim() != g.n + g.edge_count()) ok = false;
                auto check = verify_two_step(L);
                if (!check.two_step || !check.jacobi || !check.ok()) ok = false;
            }
        }
        std::ostringstream ss;
        ss << "Lie algebras on all " << checked
           << " graphs with n <= 5: dim = n + m, two-step, Jacobi";
        return std::pair{ok, ss.str()};
    });

    std::cout << "acceptance: " << (11 - failures) << "/11 criteria passed\n";
    return failures == 0 ? 0 : 1;
}
