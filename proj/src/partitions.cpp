#include "anosov/partitions.hpp"

#include <algorithm>

#include "anosov/errors.hpp"

namespace anosov {

namespace {

void extend(int remaining, int max_part, int min_part, Partition& prefix,
            std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= min_part; p--) {
        prefix.push_back(p);
        extend(remaining - p, p, min_part, prefix, out);
        prefix.pop_back();
    }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; i++) {
        acc = acc * (n - r + i) / i;
        if (acc > ~std::uint64_t{0})
            throw capability_error("arrangements count overflows 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

} // namespace

std::vector<Partition> partitions(int n, int min_part) {
    if (n < 0) throw input_error("partitions of a negative integer");
    if (min_part < 1) throw input_error("minimum part must be at least 1");
    std::vector<Partition> out;
    Partition prefix;
    extend(n, n, min_part, prefix, out);
    return out;
}

std::uint64_t arrangements(const Partition& lambda) {
    if (lambda.empty()) throw input_error("partition must be nonempty");
    for (std::size_t i = 0; i < lambda.size(); i++) {
        if (lambda[i] < 1) throw input_error("partition parts must be positive");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw input_error("partition must be weakly decreasing");
    }
    // Multinomial as a product of binomials: place each run of equal parts
    // into the remaining positions.
    std::uint64_t result = 1;
    std::uint64_t placed = 0;
    std::size_t i = 0;
    while (i < lambda.size()) {
        std::size_t j = i;
        while (j < lambda.size() && lambda[j] == lambda[i]) j++;
        std::uint64_t mult = j - i;
        placed += mult;
        unsigned __int128 next =
            static_cast<unsigned __int128>(result) * binomial(placed, mult);
        if (next > ~std::uint64_t{0})
            throw capability_error("arrangements count overflows 64 bits");
        result = static_cast<std::uint64_t>(next);
        i = j;
    }
    return result;
}

} // namespace anosov
