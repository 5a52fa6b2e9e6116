#include "anosov/lie.hpp"

#include <cstddef>

namespace anosov {

namespace {

using Dense = std::vector<long long>;

Dense to_dense(const GraphLieAlgebra::Element& e, int dim) {
    Dense out(static_cast<std::size_t>(dim), 0);
    for (auto [idx, c] : e) out[static_cast<std::size_t>(idx)] += c;
    return out;
}

bool is_zero(const Dense& d) {
    for (long long c : d)
        if (c != 0) return false;
    return true;
}

// Bracket of a dense element against a basis generator, extended linearly.
Dense bracket_with_basis(const GraphLieAlgebra& L, const Dense& x, int b) {
    int dim = L.dim();
    Dense out(static_cast<std::size_t>(dim), 0);
    for (int a = 0; a < dim; a++) {
        long long ca = x[static_cast<std::size_t>(a)];
        if (ca == 0) continue;
        for (auto [idx, c] : L.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
            out[static_cast<std::size_t>(idx)] += ca * c;
    }
    return out;
}

} // namespace

GraphLieAlgebra build_lie_algebra(const SimpleGraph& g) {
    GraphLieAlgebra L;
    L.n = g.n;
    L.edge_basis = g.edges();
    L.m = static_cast<int>(L.edge_basis.size());
    int dim = L.dim();
    L.bracket.assign(static_cast<std::size_t>(dim),
                     std::vector<GraphLieAlgebra::Element>(static_cast<std::size_t>(dim)));
    for (int e = 0; e < L.m; e++) {
        auto [u, v] = L.edge_basis[static_cast<std::size_t>(e)];
        L.bracket[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = {{L.n + e, 1}};
        L.bracket[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = {{L.n + e, -1}};
    }
    return L;
}

LieCheck verify_two_step(const GraphLieAlgebra& L) {
    LieCheck check;
    int dim = L.dim();

    for (int a = 0; a < dim && check.antisymmetric; a++)
        for (int b = 0; b < dim; b++) {
            Dense ab = to_dense(L.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], dim);
            Dense ba = to_dense(L.bracket[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)], dim);
            for (int i = 0; i < dim; i++)
                ab[static_cast<std::size_t>(i)] += ba[static_cast<std::size_t>(i)];
            if (!is_zero(ab) || (a == b && !is_zero(to_dense(L.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], dim)))) {
                check.antisymmetric = false;
                break;
            }
        }

    // Every bracket value must live in the span of the edge generators.
    for (int a = 0; a < dim && check.image_in_center; a++)
        for (int b = 0; b < dim; b++) {
            for (auto [idx, c] : L.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) {
                if (c != 0 && idx < L.n) {
                    check.image_in_center = false;
                    break;
                }
            }
            if (!check.image_in_center) break;
        }

    // Edge generators must bracket to zero with the whole basis.
    for (int e = L.n; e < dim && check.center_central; e++)
        for (int b = 0; b < dim; b++) {
            if (!is_zero(to_dense(L.bracket[static_cast<std::size_t>(e)][static_cast<std::size_t>(b)], dim)) ||
                !is_zero(to_dense(L.bracket[static_cast<std::size_t>(b)][static_cast<std::size_t>(e)], dim))) {
                check.center_central = false;
                break;
            }
        }

    for (int a = 0; a < dim && check.two_step; a++)
        for (int b = 0; b < dim && check.two_step; b++) {
            Dense ab = to_dense(L.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], dim);
            for (int c = 0; c < dim; c++)
                if (!is_zero(bracket_with_basis(L, ab, c))) {
                    check.two_step = false;
                    break;
                }
        }

    for (int a = 0; a < dim && check.jacobi; a++)
        for (int b = 0; b < dim && check.jacobi; b++) {
            Dense ab = to_dense(L.bracket[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)], dim);
            for (int c = 0; c < dim; c++) {
                Dense bc = to_dense(L.bracket[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)], dim);
                Dense ca = to_dense(L.bracket[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)], dim);
                Dense sum = bracket_with_basis(L, ab, c);
                Dense t2 = bracket_with_basis(L, bc, a);
                Dense t3 = bracket_with_basis(L, ca, b);
                for (int i = 0; i < L.dim(); i++)
                    sum[static_cast<std::size_t>(i)] += t2[static_cast<std::size_t>(i)] + t3[static_cast<std::size_t>(i)];
                if (!is_zero(sum)) {
                    check.jacobi = false;
                    break;
                }
            }
        }

    return check;
}

} // namespace anosov
