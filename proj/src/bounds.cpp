#include "anosov/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "anosov/census.hpp"

namespace anosov {

BigOneBounds big_one_bounds(int n, const std::map<int, std::uint64_t>& x_values) {
    if (n < 1) throw input_error("bounds need at least one vertex");

    auto lookup = [&](int t) -> std::uint64_t {
        auto it = x_values.find(t);
        if (it == x_values.end())
            throw input_error("missing X(t) value for t = " + std::to_string(t));
        return it->second;
    };

    BigOneBounds out;
    out.n = n;

    std::uint64_t lower_sum = 0;
    for (const Partition& lambda : partitions(n, 3)) {
        BoundTerm term;
        term.lambda = lambda;
        term.x_value = lookup(static_cast<int>(lambda.size()));
        lower_sum += term.x_value;
        out.lower_terms.push_back(std::move(term));
    }
    if (lower_sum % 2 == 0)
        out.lower = {static_cast<long long>(lower_sum / 2), 1};
    else
        out.lower = {static_cast<long long>(lower_sum), 2};

    unsigned __int128 upper_sum = 0;
    for (const Partition& lambda : partitions(n, 2)) {
        BoundTerm term;
        term.lambda = lambda;
        term.x_value = lookup(static_cast<int>(lambda.size()));
        term.arrangements = arrangements(lambda);
        upper_sum += static_cast<unsigned __int128>(term.arrangements) * term.x_value;
        if (upper_sum > ~std::uint64_t{0})
            throw capability_error("upper bound overflows 64 bits");
        out.upper_terms.push_back(std::move(term));
    }
    out.upper = static_cast<unsigned long long>(upper_sum);
    return out;
}

double nu_lower_bound(int w, NuFormula formula) {
    if (w < 1) throw input_error("total dimension must be positive");
    double root = std::sqrt(2.0 * w);
    if (formula == NuFormula::paper) return w / 3.0 - root - 4.5;
    return (w - 3.0 * root - 17.0) / 12.0;
}

bool count_exceeds_nu_bound(long long count, int w, NuFormula formula) {
    if (w < 1) throw input_error("total dimension must be positive");
    // count > w/3 - sqrt(2w) - 9/2 becomes sqrt(2w) > (2w - 27 - 6c)/6,
    // and similarly for the other formula; square once the right side is
    // known positive.
    if (formula == NuFormula::paper) {
        long long rhs6 = 2ll * w - 27 - 6 * count;
        if (rhs6 <= 0) return true;
        return 72ll * w > rhs6 * rhs6;
    }
    long long rhs3 = static_cast<long long>(w) - 17 - 12 * count;
    if (rhs3 <= 0) return true;
    return 18ll * w > rhs3 * rhs3;
}

WeightedGraph nu_family_graph(int k, int p, int q, bool loop_hub, const SimpleGraph& H) {
    if (k < 1) throw input_error("pattern must have at least one vertex");
    if (H.n != k)
        throw input_error("pattern has " + std::to_string(H.n) + " vertices, expected " +
                          std::to_string(k));
    if (H.edge_count() != p)
        throw input_error("pattern has " + std::to_string(H.edge_count()) +
                          " edges, expected " + std::to_string(p));
    if (!is_connected(H)) throw input_error("pattern must be connected");
    if (q < 2) throw input_error("hub weight must be at least 2");
    if (loop_hub && q < 3) throw input_error("a looped hub needs weight at least 3");

    std::vector<int> weights(static_cast<std::size_t>(k) + 1, 2);
    weights[0] = q;
    WeightedGraph w(weights);
    if (loop_hub) w.add_edge(0, 0);
    for (auto [a, b] : H.edges()) w.add_edge(a + 1, b + 1);
    w.add_edge(0, 1);
    return w;
}

namespace {

// Smallest s >= 0 with s*s >= num/den, for num >= 0.
long long ceil_sqrt_rational(long long num, long long den) {
    long long s = 0;
    while (s * s * den < num) s++;
    return s;
}

// floor((alpha + 2) / 3) - ceil(sqrt(alpha)) + 1 clamped at 0, where
// alpha = num/den with den in {1, 2}.
long long family_count(long long num, long long den) {
    if (num < 0) return 0;
    // floor((num/den + 2)/3) = floor((num + 2*den) / (3*den))
    long long hi = (num + 2 * den) / (3 * den);
    long long lo = ceil_sqrt_rational(num, den);
    return std::max(0ll, hi - lo + 1);
}

} // namespace

NuFamilyCount nu_family_count(int w) {
    if (w < 1) throw input_error("total dimension must be positive");
    NuFamilyCount out;
    if (w <= 9) {
        out.note = "no family members below total dimension 10";
        return out;
    }
    out.applicable = true;
    bool even = (w % 2 == 0);

    out.no_loop = family_count(even ? (w - 6) / 2 : (w - 9) / 2, 1);
    if (w > 18) {
        // For odd w the looped-hub alpha is the half-integer (w-12)/2;
        // floors and ceilings are evaluated exactly over rationals.
        if (even)
            out.loop = family_count((w - 18) / 2, 1);
        else
            out.loop = family_count(w - 12, 2);
    }
    out.total = out.no_loop + out.loop;
    return out;
}

std::vector<NuFamilyMember> nu_family_members(int w) {
    if (w < 1) throw input_error("total dimension must be positive");
    std::vector<NuFamilyMember> out;
    if (w <= 9) return out;

    auto expand = [&](int family, int q, bool loop_hub, int alpha) {
        for (int k = 1; 3 * k - 2 <= alpha; k++) {
            if ((alpha - k) % 2 != 0) continue;
            int p = (alpha - k) / 2;
            if (p < k - 1 || p > k * (k - 1) / 2) continue;
            if (k > 7)
                throw capability_error(
                    "family member expansion needs connected graphs on more than 7 vertices");
            for (const SimpleGraph& H : connected_graph_classes(k, p)) {
                NuFamilyMember m;
                m.family = family;
                m.k = k;
                m.p = p;
                m.q = q;
                m.graph = nu_family_graph(k, p, q, loop_hub, H);
                out.push_back(std::move(m));
            }
        }
    };

    bool even = (w % 2 == 0);
    expand(1, even ? 2 : 3, false, even ? (w - 6) / 2 : (w - 9) / 2);
    // The looped-hub family reaches only even totals: both admissible hub
    // weights make q^2 + 5q even, so 2k + (q^2+5q)/2 + 4p is even.
    if (even && w > 18) expand(2, 4, true, (w - 18) / 2);
    return out;
}

unsigned long long product_lower_bound(int t) {
    if (t < 2) throw input_error("product bound needs t >= 2");
    if (t > 62) throw capability_error("product bound overflows 64 bits");
    unsigned __int128 acc = (static_cast<unsigned __int128>(1) << (t - 1)) *
                            ((static_cast<unsigned __int128>(1) << t) - 1);
    for (int i = 2; i <= t - 1; i++) {
        long long factor = (1ll << (t - i)) - i;
        acc *= static_cast<unsigned __int128>(std::max(factor, 1ll));
        if (acc > ~std::uint64_t{0})
            throw capability_error("product bound overflows 64 bits");
    }
    if (acc > ~std::uint64_t{0}) throw capability_error("product bound overflows 64 bits");
    return static_cast<unsigned long long>(acc);
}

} // namespace anosov
