#ifndef ANOSOV_BOUNDS_HPP
#define ANOSOV_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "anosov/graph.hpp"
#include "anosov/partitions.hpp"
#include "anosov/quotient.hpp"

namespace anosov {

// Exact rational, reduced, for bounds that live in (1/2) * Z.
struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    // this <= x for integer x, exactly.
    bool leq_int(long long x) const { return num <= x * den; }
};

struct BoundTerm {
    Partition lambda;
    std::uint64_t x_value = 0;       // X(len(lambda)) used for this term
    std::uint64_t arrangements = 1;  // orderings factor (upper bound only)
};

// Sandwich for the Anosov census a(n):
//   (1/2) * sum over types with min part 3 of X(len)
//     <= a(n) <=
//   sum over types with min part 2 of arrangements(type) * X(len).
struct BigOneBounds {
    int n = 0;
    Rational lower;
    unsigned long long upper = 0;
    std::vector<BoundTerm> lower_terms;
    std::vector<BoundTerm> upper_terms;
};

// x_values maps t to X(t); a missing t needed by some type is an input
// error naming the t.
BigOneBounds big_one_bounds(int n, const std::map<int, std::uint64_t>& x_values);

// Growth floors for the number of Anosov graphs with dim = n + m = w.
enum class NuFormula {
    paper,        // w/3 - sqrt(2w) - 9/2
    dani_mainkar, // (w - 3*sqrt(2w) - 17) / 12
};

double nu_lower_bound(int w, NuFormula formula);

// count > nu_lower_bound(w, formula), decided in integer arithmetic.
bool count_exceeds_nu_bound(long long count, int w, NuFormula formula);

// Weighted graph with a hub of weight q attached by a single edge to a
// connected pattern H on k vertices whose vertices all get weight 2; the
// hub carries a loop iff loop_hub. Requires H connected with p edges,
// q >= 2, and q >= 3 when loop_hub. Such a graph satisfies the anosov
// criteria (so its deconstruction is Anosov), with n = 2k + q vertices and
// m = 4p + 2q edges (loopless hub) or m = (q^2 + 3q)/2 + 4p (looped hub).
WeightedGraph nu_family_graph(int k, int p, int q, bool loop_hub, const SimpleGraph& H);

// How many k values the two families admit at total dimension w, evaluated
// from the closed-form count floor((alpha+2)/3) - ceil(sqrt(alpha)) + 1 per
// family, clamped at 0, with alpha = (w-6)/2 or (w-9)/2 by parity for the
// loopless-hub family and (w-18)/2 or (w-12)/2 for the looped one. The
// loop-family alpha is a half-integer for odd w; floors and ceilings are
// then taken exactly over rationals.
struct NuFamilyCount {
    long long no_loop = 0;
    long long loop = 0;
    long long total = 0;
    bool applicable = false; // false (all zero) when w <= 9
    std::string note;
};

NuFamilyCount nu_family_count(int w);

// The actually constructible members at total dimension w: tuples
// (family, k, p, q) with integral p in [k-1, k(k-1)/2], expanded over every
// connected H on k vertices with p edges up to isomorphism.
struct NuFamilyMember {
    int family = 0; // 1 = loopless hub, 2 = looped hub
    int k = 0;
    int p = 0;
    int q = 0;
    WeightedGraph graph;
};

std::vector<NuFamilyMember> nu_family_members(int w);

// 2^(t-1) * (2^t - 1) * prod_{i=2}^{t-1} max(2^(t-i) - i, 1), a product
// lower bound for X(t) * t!.
unsigned long long product_lower_bound(int t);

} // namespace anosov

#endif
