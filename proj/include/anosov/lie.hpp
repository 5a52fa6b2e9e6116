#ifndef ANOSOV_LIE_HPP
#define ANOSOV_LIE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "anosov/graph.hpp"

namespace anosov {

// Two-step nilpotent Lie algebra attached to a simple graph: one generator
// v_i per vertex, one central generator e_uv per edge, with [v_i, v_j] equal
// to +e_ij when i < j are adjacent, -e_ji when i > j, and 0 otherwise. All
// structure constants are integers in {-1, 0, 1}.
struct GraphLieAlgebra {
    // Sparse vector in the basis (v_0..v_{n-1}, e_0..e_{m-1}).
    using Element = std::vector<std::pair<int, long long>>;

    int n = 0; // generators from vertices
    int m = 0; // central generators from edges
    std::vector<std::pair<int, int>> edge_basis; // e_a = (i, j) with i < j
    std::vector<std::vector<Element>> bracket;   // bracket[a][b] over the basis

    int dim() const { return n + m; }
};

GraphLieAlgebra build_lie_algebra(const SimpleGraph& g);

// Structural verification on the bracket table: antisymmetry, image of the
// bracket inside the span of the e_a, the e_a central, triple brackets
// vanishing, and the Jacobi identity over all basis triples.
struct LieCheck {
    bool antisymmetric = true;
    bool image_in_center = true;
    bool center_central = true;
    bool two_step = true; // [x, [y, z]] = 0 on the basis
    bool jacobi = true;

    bool ok() const {
        return antisymmetric && image_in_center && center_central && two_step && jacobi;
    }
};

LieCheck verify_two_step(const GraphLieAlgebra& L);

} // namespace anosov

#endif
