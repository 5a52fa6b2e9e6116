#ifndef ANOSOV_INJECTION_HPP
#define ANOSOV_INJECTION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "anosov/partitions.hpp"
#include "anosov/quotient.hpp"

namespace anosov {

// Case analysis mapping each partition of n >= 9 to a brick-condition
// weighted graph, injectively across all partitions of the same n. The
// deconstructions witness that there are at least p(n) Anosov graphs on n
// vertices. Fourteen cases, keyed on the number of 1-parts and the shape
// of the rest; exactly one guard fires for any partition of n >= 9.
struct InjectionCase {
    int id = 0;
    std::string shape; // human summary of the image shape
    bool (*guard)(const Partition&);
    WeightedGraph (*builder)(const Partition&);
};

const std::vector<InjectionCase>& injection_cases();

struct InjectionImage {
    int case_id = 0;
    WeightedGraph graph;
};

// Dispatch lambda to its case and build the image. Rejects partitions of
// n < 9 (outside the construction's domain) and any malformed partition.
InjectionImage inject(const Partition& lambda);

// For every partition of n: image passes the brick conditions, its weights
// sum to n, and all images are pairwise non-isomorphic. Violations are
// collected, not thrown.
struct InjectionReport {
    int n = 0;
    std::size_t partition_count = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

InjectionReport verify_injection(int n, int limit = 14);

} // namespace anosov

#endif
