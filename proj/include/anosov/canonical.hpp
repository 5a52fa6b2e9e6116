#ifndef ANOSOV_CANONICAL_HPP
#define ANOSOV_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "anosov/graph.hpp"

namespace anosov {

// Canonical form of a simple graph: the lexicographically smallest row-major
// upper-triangle adjacency bitstring over all vertex relabelings. Two graphs
// are isomorphic iff their codes compare equal. Bits are packed into bytes
// most significant bit first, so lexicographic order on (n, bytes) matches
// lexicographic order on the bitstrings.
struct CanonicalCode {
    int n = 0;
    std::vector<std::uint8_t> bytes;

    bool operator==(const CanonicalCode& other) const = default;
    bool operator<(const CanonicalCode& other) const {
        if (n != other.n) return n < other.n;
        return bytes < other.bytes;
    }

    std::string hex() const;
};

// Branch-and-bound search over relabelings with first-row pruning and a
// twin-vertex skip; exact, no hashing. Graphs larger than the cutoff are
// rejected rather than silently taking exponential time. The hard ceiling
// of 16 is a packing limit of the search.
CanonicalCode canonical_code(const SimpleGraph& g, int cutoff = 10);

// Rebuild the (canonically labeled) graph a code describes.
SimpleGraph graph_from_code(const CanonicalCode& code);

} // namespace anosov

#endif
