#ifndef ANOSOV_PARTITIONS_HPP
#define ANOSOV_PARTITIONS_HPP

#include <cstdint>
#include <vector>

namespace anosov {

// Integer partition as a weakly decreasing list of positive parts.
using Partition = std::vector<int>;

// All partitions of n with every part >= min_part, in reverse lexicographic
// order: (n) first, then (n-1, 1), and so on. partitions(0) is the single
// empty partition; min_part > n yields an empty list (for n >= 1).
std::vector<Partition> partitions(int n, int min_part = 1);

// Number of distinct orderings of the parts, len! / prod(multiplicities!).
std::uint64_t arrangements(const Partition& lambda);

} // namespace anosov

#endif
