#ifndef ANOSOV_CENSUS_HPP
#define ANOSOV_CENSUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "anosov/canonical.hpp"
#include "anosov/graph.hpp"

namespace anosov {

enum class CensusMethod {
    // Scan all 2^(n(n-1)/2) labeled graphs; exact but capped at n = 8.
    brute_force,
    // Build weighted graphs satisfying the brick conditions for each type
    // with min part >= 2 and deconstruct them; reaches n = 14.
    quotient_synthesis,
};

std::string to_string(CensusMethod m);

struct CensusResult {
    int n = 0;
    CensusMethod method = CensusMethod::brute_force;
    // Sorted, distinct canonical codes, one per isomorphism class.
    std::vector<CanonicalCode> codes;
    std::size_t count = 0;
};

// Census of Anosov graphs on n vertices up to isomorphism. Output is
// byte-identical for any worker count. When cache_dir is nonempty, results
// are stored there keyed by (n, method, code version) and reused.
CensusResult enumerate_anosov(int n, CensusMethod method, int workers = 1,
                              const std::string& cache_dir = "");

// Bumped whenever the census code paths change shape; keys the cache.
extern const int census_code_version;

// Isomorphism classes on n vertices, possibly disconnected, whose type has
// minimum part >= 2. Brute force, n <= 8.
std::uint64_t count_upper_types(int n);

// Connected isomorphism classes whose type has minimum part >= 3. Brute
// force, n <= 8.
std::uint64_t count_lower_types(int n);

// Symmetric t x t binary matrix (diagonal included), one bitmask per row.
struct BinaryMatrix {
    int t = 0;
    std::vector<std::uint64_t> rows;

    bool rows_distinct() const;
    bool operator==(const BinaryMatrix& other) const = default;
};

// Number of symmetric t x t binary matrices with pairwise distinct rows, up
// to simultaneous row/column permutation. Counted by explicit orbit
// enumeration with canonical (minimal) representatives, never by orbit
// counting formulas. t = 7 takes tens of seconds and 32 MB, so it sits
// behind the opt-in flag.
std::uint64_t compute_X(int t, bool allow_large = false);

// The matrix built from a binary string a = a_1...a_t: entry (i, j) equals
// a_max(i,j) off the diagonal and the complement of a_i on it. Its rows are
// always pairwise distinct, and distinct strings give distinct matrices,
// which pins 2^t <= X(t) * t!.
BinaryMatrix string_to_matrix(const std::string& alpha);

// One representative per isomorphism class of connected graphs on k
// vertices with exactly edge_count edges. Exhaustive scan, k <= 7.
std::vector<SimpleGraph> connected_graph_classes(int k, int edge_count);

} // namespace anosov

#endif
